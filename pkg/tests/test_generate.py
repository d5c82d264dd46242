import pytest

from uniroot import check_EE, find_counterexample, roots, unique_root, verify_theorem
from uniroot.generate import demo_system, ee_failure, gen_factor_system, gen_random_dag, multiset_name

from oracles import trial_division


def test_factor_12():
    s = gen_factor_system(12)
    assert set(s.vertices) == {"12", "2*6", "3*4", "2*2*3"}
    assert s.labels[unique_root(s, "12")] == trial_division(12) == (2, 2, 3)


def test_factor_prime_and_one():
    s = gen_factor_system(7)
    assert s.vertices == ("7",) and not s.edges
    s = gen_factor_system(1)
    assert s.vertices == ("1",) and s.labels["1"] == ()
    with pytest.raises(ValueError):
        gen_factor_system(0)


def all_sequences_end(s, v):
    out = s.out_edges(v)
    if not out:
        return {v}
    return set().union(*(all_sequences_end(s, e.dst) for e in out))


def test_factor_30_every_sequence_ends_at_2_3_5():
    s = gen_factor_system(30)
    assert len(s.out_edges("30")) == 3
    assert all_sequences_end(s, "30") == {"2*3*5"}
    assert check_EE(s).holds
    assert unique_root(s, "30") == "2*3*5"


def test_factor_sinks_are_prime_multisets():
    for n in range(1, 300):
        s = gen_factor_system(n)
        for v in s.sinks():
            assert all(trial_division(p) == (p,) for p in s.labels[v])


def test_multiset_name():
    assert multiset_name(()) == "1"
    assert multiset_name((2, 3)) == "2*3"


def test_random_dag_single_vertex():
    s = gen_random_dag(1, 0.7, seed=3)
    assert len(s) == 1 and not s.edges


def test_random_dag_complete():
    s = gen_random_dag(5, 1.0, seed=9)
    assert len(s.edges) == 10
    assert check_EE(s).holds
    assert unique_root(s, s.vertices[0]) == s.vertices[-1]


def test_random_dag_seeded():
    assert gen_random_dag(7, 0.3, 42) == gen_random_dag(7, 0.3, 42)
    rep = verify_theorem(gen_random_dag(7, 0.3, 42))
    assert rep.cf.holds and rep.theorem_holds
    with pytest.raises(ValueError):
        gen_random_dag(4, 1.5, 0)


def test_ee_failure_demo():
    s = ee_failure()
    assert not check_EE(s).holds
    assert roots(s, "start").roots == {"root-a", "root-b"}
    v, _ = find_counterexample(s)
    assert v == "pair"


@pytest.mark.parametrize("kind", ["diamond", "fork", "ee-failure", "handle-demo"])
def test_demo_kinds(kind):
    assert verify_theorem(demo_system(kind)).theorem_holds


def test_demo_unknown():
    with pytest.raises(ValueError):
        demo_system("nope")

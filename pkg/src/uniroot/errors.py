"""Exception types shared across the package."""


class UnirootError(Exception):
    """Base class for every error raised by uniroot."""


class SelfLoop(UnirootError):
    def __init__(self, vertex):
        super().__init__(f"self-loop at {vertex!r}")
        self.vertex = vertex


class DanglingEndpoint(UnirootError):
    def __init__(self, src, dst):
        super().__init__(f"edge {src!r} -> {dst!r} references an unknown vertex")
        self.src = src
        self.dst = dst


class DuplicateVertex(UnirootError):
    def __init__(self, vertex):
        super().__init__(f"vertex {vertex!r} declared twice")
        self.vertex = vertex


class UnknownVertex(UnirootError, KeyError):
    def __init__(self, vertex):
        super().__init__(f"unknown vertex {vertex!r}")
        self.vertex = vertex

    def __str__(self):
        return self.args[0]


class MissingVertex(UnirootError):
    """A complexity map does not cover every vertex."""

    def __init__(self, vertex):
        super().__init__(f"complexity map has no value for {vertex!r}")
        self.vertex = vertex


class CycleDetected(UnirootError):
    """The system contains a directed cycle, so no complexity function exists.

    ``cycle`` is a closed walk ``[v0, v1, ..., v0]`` following edges.
    """

    def __init__(self, cycle):
        super().__init__("directed cycle: " + " -> ".join(map(str, cycle)))
        self.cycle = list(cycle)


# Root and equivalence queries need well-founded systems; they raise the same type.
CyclicSystem = CycleDetected


class MultipleRoots(UnirootError):
    def __init__(self, vertex, roots):
        self.vertex = vertex
        self.roots = frozenset(roots)
        super().__init__(f"{vertex!r} has {len(self.roots)} roots")


class SourceMismatch(UnirootError):
    def __init__(self, e, d):
        super().__init__(f"edges {e} and {d} do not share an initial vertex")
        self.edges = (e, d)


class NotGreen(UnirootError):
    def __init__(self, vertex):
        super().__init__(f"{vertex!r} is not a green vertex")
        self.vertex = vertex


class InvalidCut(UnirootError):
    pass


class BoundExceeded(UnirootError):
    def __init__(self, bound):
        super().__init__(f"more than {bound} graphs reachable by cutting")
        self.bound = bound


class ProfileTooLarge(UnirootError):
    def __init__(self, size):
        super().__init__(f"intersection profile has {size} points, at most 3 allowed")
        self.size = size


class ParseError(UnirootError):
    def __init__(self, message, line=None):
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)
        self.line = line

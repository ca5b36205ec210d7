from hgacyclic import Hypergraph


def hg(spec: str) -> Hypergraph:
    """Shorthand: ``hg("xy yz xyz")`` has edges {x,y}, {y,z}, {x,y,z}."""
    return Hypergraph([list(w) for w in spec.split()])


def edges(spec: str):
    return {frozenset(w) for w in spec.split()}


# canonical small hypergraphs
BERGE_TRIANGLE = "xy xyz"
GAMMA_TRIANGLE = "xy yz xyz"
BETA_TRIANGLE = "xy yz xz xyz"
TETRAEDRON = "xyz xyt xzt yzt"
SQUARE = "xy yz zt xt"
TRIANGLE = "xy yz xz"

NORM_EXAMPLE = {
    "a": "r",
    "b": "rs",
    "c": "stuvw",
    "d": "tu",
    "e": "v",
    "f": "xvw",
    "g": "vwyz",
}


KEYS = ("gamma", "beta", "alpha", "cycle_free", "conformal", "berge")

# (gamma, beta, alpha, cycle_free, conformal, berge)
SIX_EXAMPLES = {
    BERGE_TRIANGLE: (True, True, True, True, True, False),
    GAMMA_TRIANGLE: (False, True, True, True, True, False),
    BETA_TRIANGLE: (False, False, True, True, True, False),
    TETRAEDRON: (False, False, False, True, False, False),
    SQUARE: (False, False, False, False, True, False),
    TRIANGLE: (False, False, False, False, False, False),
}

# limit closure fixtures
H1 = Hypergraph([["x", "a", "b", "c"], ["y", "a", "b", "c"], ["z", "a", "b", "c"]])
H4 = Hypergraph([["x1", "x2", "y1", "y2", "z1", "z2"], ["x1", "x2"], ["y1", "y2"], ["z1", "z2"]])
H5 = Hypergraph([["x1", "y1", "z1"], ["x1", "y1"], ["y1", "z1"], ["z1", "x1"]])

# one line per acceptance criterion, printed in the terminal summary
ACCEPTANCE_LINES = []

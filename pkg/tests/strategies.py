"""
hypothesis 策略
"""
from hypothesis import strategies as st

from graph_utils import ColoredGraph, lexicographic_edges


@st.composite
def colored_graphs(draw, min_n: int = 1, max_n: int = 6):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    colors = draw(st.lists(st.sampled_from((-1, 0, 0, 1)), min_size=n, max_size=n))
    all_edges = lexicographic_edges(n)
    mask = draw(st.lists(st.booleans(), min_size=len(all_edges), max_size=len(all_edges)))
    edges = frozenset(edge for edge, keep in zip(all_edges, mask) if keep)
    return ColoredGraph(n, tuple(colors), edges)


@st.composite
def graphs_with_permutation(draw, max_n: int = 6):
    g = draw(colored_graphs(max_n=max_n))
    perm = draw(st.permutations(range(1, g.n + 1)))
    return g, list(perm)

"""Hypothesis strategies for random labeled trees."""

from hypothesis import strategies as st

from treecoeffs.trees import make_path, prufer_decode


@st.composite
def trees(draw, min_n=1, max_n=12):
    n = draw(st.integers(min_n, max_n))
    if n <= 2:
        return make_path(n)
    seq = draw(st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2))
    return prufer_decode(seq, n)


@st.composite
def rooted_trees(draw, min_n=1, max_n=12):
    t = draw(trees(min_n, max_n))
    return t.rooted(draw(st.integers(0, t.n - 1)))


positive_rationals = st.fractions(min_value=0, max_value=8, max_denominator=12).filter(lambda q: q > 0)

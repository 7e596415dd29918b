"""Shared hypothesis strategies."""

from hypothesis import strategies as st

from extremal_hhh.braid import BraidWord


@st.composite
def braid_words(draw, min_n=2, max_n=5, max_len=10, signs=(1, -1)):
    n = draw(st.integers(min_n, max_n))
    letters = draw(
        st.lists(st.tuples(st.integers(1, n - 1), st.sampled_from(signs)), max_size=max_len)
    )
    return BraidWord(n, tuple(letters))


@st.composite
def positive_words(draw, min_n=2, max_n=5, min_len=0, max_len=10):
    n = draw(st.integers(min_n, max_n))
    idx = draw(st.lists(st.integers(1, n - 1), min_size=min_len, max_size=max_len))
    return BraidWord.positive(n, idx)


@st.composite
def full_positive_words(draw, n_values=(3, 4), max_len=9):
    """Positive words using every generator."""
    n = draw(st.sampled_from(n_values))
    base = list(range(1, n))
    extra = draw(st.lists(st.integers(1, n - 1), max_size=max_len - len(base)))
    word = draw(st.permutations(base + extra))
    return BraidWord.positive(n, word)

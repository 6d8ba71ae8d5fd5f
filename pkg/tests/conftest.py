"""Shared test data: the theta corpus and hypothesis strategies."""

from hypothesis import strategies as st

from qcore import ThetaSpec, TruncatedSeries

# Every two-monomial theta appearing in a registered identity or a named
# specialization, including the mixed-sign ones.
THETA_CORPUS = [
    ThetaSpec(-1, 1, -1, 1),    # phi(-q)
    ThetaSpec(1, 1, 1, 1),      # phi(q)
    ThetaSpec(-1, 1, -1, 3),    # psi(-q)
    ThetaSpec(1, 1, 1, 3),      # psi(q)
    ThetaSpec(-1, 1, -1, 2),    # f(-q)
    ThetaSpec(1, 1, -1, 2),     # f(q)
    ThetaSpec(-1, 5, -1, 5),    # phi(-q^5)
    ThetaSpec(-1, 5, -1, 15),   # psi(-q^5)
    ThetaSpec(1, 15, 1, 35),
    ThetaSpec(1, 5, 1, 45),
    ThetaSpec(1, 10, 1, 15),
    ThetaSpec(1, 5, 1, 20),
    ThetaSpec(1, 1, 1, 4),
    ThetaSpec(1, 2, 1, 3),
    ThetaSpec(-1, 15, -1, 35),
    ThetaSpec(-1, 5, -1, 45),
    ThetaSpec(1, 10, -1, 15),
    ThetaSpec(-1, 5, 1, 20),
    ThetaSpec(1, 2, -1, 3),
    ThetaSpec(-1, 1, 1, 4),
]


def series_strategy(max_order=40, max_coeff=60):
    return st.lists(
        st.integers(min_value=-max_coeff, max_value=max_coeff),
        min_size=1,
        max_size=max_order + 1,
    ).map(TruncatedSeries)


def unit_series_strategy(max_order=40, max_coeff=60):
    """Series whose constant term is +1 or -1 (invertible)."""
    return st.tuples(
        st.sampled_from((1, -1)),
        st.lists(
            st.integers(min_value=-max_coeff, max_value=max_coeff),
            min_size=0,
            max_size=max_order,
        ),
    ).map(lambda t: TruncatedSeries((t[0],) + tuple(t[1])))

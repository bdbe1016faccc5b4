"""Shared hypothesis strategies for the test suite."""

from hypothesis import strategies as st

from planegroups import GroupElement, GroupId

ALL_GROUPS = list(GroupId)

group_ids = st.sampled_from(ALL_GROUPS)


def elements_of(gid: GroupId, span: int = 50) -> st.SearchStrategy:
    exponents = st.integers(min_value=-span, max_value=span)
    return st.builds(
        lambda n1, n2, w: GroupElement(gid, (n1, n2), w),
        exponents,
        exponents,
        st.integers(min_value=0, max_value=gid.point_order - 1),
    )


def group_and_elements(count: int, span: int = 50) -> st.SearchStrategy:
    """Strategy for (group, element...) tuples living in one common group."""
    return group_ids.flatmap(
        lambda gid: st.tuples(st.just(gid), *[elements_of(gid, span)] * count)
    )

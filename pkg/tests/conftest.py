import pytest

from tubings import Pseudograph


@pytest.fixture
def bundle_path3():
    """Three-node path whose first edge is doubled into a bundle {a, b}."""
    return Pseudograph([1, 2, 3], [(1, 2, "a"), (1, 2, "b"), (2, 3, None)])


@pytest.fixture
def bundle_path4():
    """Path 3-1=2=4 with bundles {a,b} on 1-2 and {c,d} on 2-4."""
    return Pseudograph(
        [1, 2, 3, 4],
        [(1, 3, None), (1, 2, "a"), (1, 2, "b"), (2, 4, "c"), (2, 4, "d")],
    )


@pytest.fixture
def bundle_tree5():
    """Five-node tree with a 2-bundle on 1-2 and a 3-bundle on 4-5."""
    return Pseudograph(
        [1, 2, 3, 4, 5],
        [
            (1, 2, "a"),
            (1, 2, "b"),
            (2, 3, None),
            (2, 4, None),
            (4, 5, "c"),
            (4, 5, "d"),
            (4, 5, "e"),
        ],
    )


@pytest.fixture
def bundle_cycle4():
    """Four-cycle 1-2-3-4-1 with the edge 1-2 doubled into a bundle."""
    return Pseudograph(
        [1, 2, 3, 4],
        [(1, 2, "a"), (1, 2, "b"), (2, 3, None), (3, 4, None), (1, 4, None)],
    )


@pytest.fixture
def k4_triple_bundle():
    return Pseudograph(
        [1, 2, 3, 4],
        [
            (1, 2, "a"),
            (1, 2, "b"),
            (1, 2, "c"),
            (1, 3, None),
            (1, 4, None),
            (2, 3, None),
            (2, 4, None),
            (3, 4, None),
        ],
    )


@pytest.fixture
def k4_double_bundle():
    return Pseudograph(
        [1, 2, 3, 4],
        [
            (1, 2, "a"),
            (1, 2, "b"),
            (1, 3, None),
            (1, 4, None),
            (2, 3, None),
            (2, 4, None),
            (3, 4, None),
        ],
    )


@pytest.fixture
def path3():
    return Pseudograph([1, 2, 3], [(1, 2, None), (2, 3, None)])

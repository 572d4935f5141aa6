import pytest

from tubings import (
    Collection,
    Designation,
    DisconnectedError,
    HostMismatchError,
    LabeledMatrix,
    Pseudograph,
    Tube,
    TubeSystem,
    characteristic_matrix,
    characteristic_rank,
    collection_parity_vector,
    delzant_check,
    facet_normal,
    normal_generator_matrix,
    polytope_dimension,
    tube_incidence_matrix,
)


def test_labeled_matrix_accessors():
    m = LabeledMatrix(["r1", "r2"], ["c1", "c2", "c3"], [[1, 2, 3], [4, 5, 6]])
    assert m.entry("r2", "c3") == 6
    assert m.row("r1") == (1, 2, 3)
    assert m.column("c2") == (2, 5)
    assert m.to_lists() == [[1, 2, 3], [4, 5, 6]]
    assert repr(m) == "LabeledMatrix(2x3)"


def test_polytope_dimension(bundle_path3, bundle_path4, bundle_tree5):
    assert polytope_dimension(bundle_path3) == 3
    assert polytope_dimension(bundle_path4) == 5
    assert polytope_dimension(bundle_tree5) == 7
    two_pieces = Pseudograph([1, 2, 3, 4], [(1, 2, None), (3, 4, None)])
    assert polytope_dimension(two_pieces) == 2


def test_generator_matrix(bundle_path3):
    m = normal_generator_matrix(bundle_path3)
    assert m.row_labels == (1, 2, "a")
    assert m.col_labels == (1, 2, 3, "a", "b")
    assert m.to_lists() == [
        [-1, 0, 1, 0, 0],
        [0, -1, 1, 0, 0],
        [0, 0, 0, -1, 1],
    ]
    # every column sums to zero against the dropped representatives
    assert m.column(3) == (1, 1, 0)
    assert m.column("b") == (0, 0, 1)


def test_facet_normals(bundle_path3):
    g = bundle_path3
    expected = {
        "1": (-1, 0, 0),
        "12a": (-1, -1, -1),
        "12ab": (-1, -1, 0),
        "12b": (-1, -1, 1),
        "123a": (0, 0, -1),
        "123b": (0, 0, 1),
        "2": (0, -1, 0),
        "23": (1, 0, 0),
        "3": (1, 1, 0),
    }
    system = TubeSystem(g, None)
    assert {t.name() for t in system.tubes} == set(expected)
    for t in system.tubes:
        assert facet_normal(g, t) == expected[t.name()]


def test_facet_normal_rejects_foreign_tube(bundle_path3, path3):
    tube = Tube(path3, [1, 2])
    with pytest.raises(HostMismatchError):
        facet_normal(bundle_path3, tube)


def test_incidence_matrix(bundle_path3):
    inc = tube_incidence_matrix(bundle_path3)
    assert inc.row_labels == (1, 2, 3, "a", "b")
    assert inc.col_labels == (
        "1", "12a", "12ab", "12b", "123a", "123b", "2", "23", "3",
    )
    assert inc.row(1) == (1, 1, 1, 1, 1, 1, 0, 0, 0)
    assert inc.row(3) == (0, 0, 0, 0, 1, 1, 0, 1, 1)
    # a column restates the tube's representation
    assert inc.column("12a") == (1, 1, 0, 1, 0)


def test_characteristic_matrix(bundle_path3):
    lam = characteristic_matrix(bundle_path3)
    assert lam.row_labels == (1, 2, "a")
    assert lam.col_labels == (
        "1", "12a", "12ab", "12b", "123a", "123b", "2", "23", "3",
    )
    assert lam.to_lists() == [
        [1, 1, 1, 1, 0, 0, 0, 1, 1],
        [0, 1, 1, 1, 0, 0, 1, 0, 1],
        [0, 1, 0, 1, 1, 1, 0, 0, 0],
    ]
    assert characteristic_rank(bundle_path3) == 3


def test_characteristic_agrees_with_normals_mod_two(bundle_path3, bundle_path4):
    for g in (bundle_path3, bundle_path4):
        lam = characteristic_matrix(g)
        m = normal_generator_matrix(g)
        system = TubeSystem(g, None)
        for t in system.tubes:
            normal = facet_normal(g, t, matrix=m)
            assert lam.column(t.name()) == tuple(v % 2 for v in normal)


def test_parity_vector(bundle_path3):
    g = bundle_path3
    c = Collection.of(g, [2, 3, "a", "b"])
    assert collection_parity_vector(g, c) == (0, 0, 1, 0, 1, 1, 1, 0, 1)
    empty = Collection.of(g, [])
    assert collection_parity_vector(g, empty) == (0,) * 9


def test_parity_vector_wrong_host(bundle_path3, bundle_cycle4):
    c = Collection.of(bundle_cycle4, [3, 4])
    with pytest.raises(HostMismatchError):
        collection_parity_vector(bundle_path3, c)


def test_delzant_bundle_path(bundle_path3):
    report = delzant_check(bundle_path3)
    assert report.ok, report.failures
    assert report.tubings_checked == 14
    assert report.tubing_size == 3
    assert report.characteristic_rank == 3
    assert report.expected_rank == 3


def test_delzant_double_bundle(bundle_path4):
    report = delzant_check(bundle_path4)
    assert report.ok, report.failures
    assert report.tubings_checked == 260
    assert report.tubing_size == 5
    assert report.characteristic_rank == 5


def test_delzant_other_designation(bundle_path4):
    report = delzant_check(bundle_path4, designation=Designation.first)
    assert report.ok, report.failures
    assert report.tubings_checked == 260
    assert report.characteristic_rank == 5


def test_connected_only():
    g = Pseudograph([1, 2, 3, 4], [(1, 2, None), (3, 4, None)])
    with pytest.raises(DisconnectedError):
        normal_generator_matrix(g)
    with pytest.raises(DisconnectedError):
        tube_incidence_matrix(g)
    with pytest.raises(DisconnectedError):
        delzant_check(g)
    with pytest.raises(DisconnectedError):
        collection_parity_vector(g, Collection.of(g, [1, 2]))

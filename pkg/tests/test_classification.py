import pytest
from hypothesis import given, settings, strategies as st

from oracles import partition_count, partitions_by_compositions
from schurweyl.classification import (
    GroupKind,
    IrrepLabel,
    denormalize_gl_label,
    enumerate_labels,
    format_label,
    label_dimension,
    make_label,
    normalize_gl_label,
    parse_label,
    tensor_with_determinant,
    validate_label,
)
from schurweyl.diagrams import YoungDiagram
from schurweyl.errors import InvalidLabel, MissingTwistRange, TooManyRows
from schurweyl.schur import schur_dimension

Y = lambda *rows: YoungDiagram(rows)  # noqa: E731
K = GroupKind
SMALL = [YoungDiagram(p) for b in range(7) for p in partitions_by_compositions(b)]


def test_validate_examples():
    assert validate_label(IrrepLabel(K.SYMMETRIC, 3, Y(2, 1)))
    assert not validate_label(IrrepLabel(K.GL_POLYNOMIAL, 2, Y(1, 1, 1)))
    assert validate_label(IrrepLabel(K.GL_ALGEBRAIC, 3, Y(2, 1), -4))
    # twisted kinds need a twist, untwisted ones refuse it
    assert not validate_label(IrrepLabel(K.GL_ALGEBRAIC, 3, Y(2, 1)))
    assert not validate_label(IrrepLabel(K.SL, 3, Y(2, 1), 0))


def test_normalize_examples():
    assert normalize_gl_label(Y(1, 1, 1, 1, 1), 0, 5) == (Y(), 1)
    assert normalize_gl_label(Y(5, 4, 2, 2, 2), 0, 5) == (Y(3, 2), 2)
    assert normalize_gl_label(Y(2, 1), -3, 4) == (Y(2, 1), -3)
    with pytest.raises(TooManyRows):
        normalize_gl_label(Y(1, 1, 1), 0, 2)


def test_tensor_with_determinant_examples():
    assert tensor_with_determinant(Y(4, 3, 1, 1, 1), 5) == Y(5, 4, 2, 2, 2)
    assert tensor_with_determinant(Y(), 4) == Y(1, 1, 1, 1)
    assert schur_dimension(Y(3, 1), 2) == schur_dimension(Y(2), 2) == 3
    with pytest.raises(TooManyRows):
        tensor_with_determinant(Y(1, 1, 1), 2)


def test_enumerate_examples():
    assert len(enumerate_labels(K.SYMMETRIC, 3)) == 3
    assert [lab.diagram for lab in enumerate_labels(K.SL, 2, 2)] == [Y(), Y(1), Y(2)]
    got = [(lab.diagram, lab.twist) for lab in enumerate_labels(K.GL_ALGEBRAIC, 2, 1, range(-1, 2))]
    assert got == [(Y(), -1), (Y(), 0), (Y(), 1), (Y(1), -1), (Y(1), 0), (Y(1), 1)]
    with pytest.raises(MissingTwistRange):
        enumerate_labels(K.UNITARY, 2, 1)


@pytest.mark.parametrize("n", range(11))
def test_symmetric_labels_count(n):
    labels = enumerate_labels(K.SYMMETRIC, n)
    assert len(labels) == partition_count(n)
    assert len(set(labels)) == len(labels)


@pytest.mark.parametrize("N", [1, 2, 3, 4])
def test_matching_classifications(N):
    def key(labels):
        return [(lab.diagram, lab.twist) for lab in labels]

    assert key(enumerate_labels(K.SL, N, 5)) == key(enumerate_labels(K.SU, N, 5))
    tw = range(-2, 3)
    assert key(enumerate_labels(K.GL_ALGEBRAIC, N, 5, tw)) == key(enumerate_labels(K.UNITARY, N, 5, tw))
    assert key(enumerate_labels(K.END, N, 5)) == key(enumerate_labels(K.GL_POLYNOMIAL, N, 5))


BOUNDS = {
    K.END: lambda y, N: y.row_count <= N,
    K.GL_POLYNOMIAL: lambda y, N: y.row_count <= N,
    K.GL_ALGEBRAIC: lambda y, N: y.row_count < N,
    K.UNITARY: lambda y, N: y.row_count < N,
    K.SL: lambda y, N: y.row_count < N,
    K.SU: lambda y, N: y.row_count < N,
}


@pytest.mark.parametrize("kind", list(BOUNDS), ids=lambda k: k.value)
@pytest.mark.parametrize("N", [1, 2, 3, 4, 7])
def test_row_bounds_over_small_diagrams(kind, N):
    twist = 0 if kind.twisted else None
    listed = {lab.diagram for lab in enumerate_labels(kind, N, 6, [0] if kind.twisted else None)}
    for y in SMALL:
        ok = BOUNDS[kind](y, N)
        assert validate_label(IrrepLabel(kind, N, y, twist)) == ok
        assert (y in listed) == ok
    assert all(validate_label(lab) for lab in enumerate_labels(kind, N, 6, [-1, 0, 3] if kind.twisted else None))


@pytest.mark.parametrize("n", range(7))
def test_symmetric_bound_over_small_diagrams(n):
    for y in SMALL:
        assert validate_label(IrrepLabel(K.SYMMETRIC, n, y)) == (y.box_count == n)


@pytest.mark.parametrize("N", [1, 2, 3, 4, 5])
def test_normalize_idempotent_and_strict(N):
    for y in SMALL:
        if y.row_count > N:
            continue
        for k in (-2, 0, 3):
            z, k2 = normalize_gl_label(y, k, N)
            assert z.row_count < N
            assert normalize_gl_label(z, k2, N) == (z, k2)
        z, k2 = normalize_gl_label(y, 0, N)
        assert denormalize_gl_label(z, k2, N) == y


@pytest.mark.parametrize("N", [1, 2, 3])
def test_dimension_invariant_under_det_column(N):
    for y in SMALL:
        if y.box_count > 4 or y.row_count > N:
            continue
        base = make_label(K.GL_ALGEBRAIC, N, y, 0)
        twisted = make_label(K.GL_ALGEBRAIC, N, tensor_with_determinant(y, N), 0)
        assert twisted.diagram == base.diagram
        assert twisted.twist == base.twist + 1
        assert label_dimension(twisted) == label_dimension(base)
        # the polynomial label with the extra column has the same dimension as well
        assert schur_dimension(tensor_with_determinant(y, N), N) == schur_dimension(y, N)


def test_make_label_normalizes_and_rejects():
    lab = make_label(K.GL_ALGEBRAIC, 5, Y(5, 4, 2, 2, 2))
    assert (lab.diagram, lab.twist) == (Y(3, 2), 2)
    with pytest.raises(InvalidLabel):
        make_label(K.SL, 2, Y(1, 1))
    with pytest.raises(InvalidLabel):
        make_label(K.END, 2, Y(1), 3)
    with pytest.raises(InvalidLabel):
        make_label(K.UNITARY, 2, Y(1, 1, 1), 0)


def test_label_dimension_examples():
    assert label_dimension(IrrepLabel(K.SYMMETRIC, 3, Y(2, 1))) == 2
    for k in (-5, 0, 7):
        assert label_dimension(IrrepLabel(K.GL_ALGEBRAIC, 2, Y(), k)) == 1
    assert label_dimension(IrrepLabel(K.SL, 2, Y(2))) == 3
    with pytest.raises(InvalidLabel):
        label_dimension(IrrepLabel(K.SL, 2, Y(1, 1)))


@pytest.mark.parametrize(
    "text", ["Sn:3:[2,1]", "GL:2:[2,1]:k=-3", "SL:2:[2]", "SU:3:[1,1]", "U:2:[]:k=1", "End:2:[2]", "GLpoly:3:[1,1,1]"]
)
def test_text_round_trip(text):
    assert format_label(parse_label(text)) == text


def test_parse_label_defaults_and_errors():
    assert parse_label("GL:2:[1]").twist == 0
    with pytest.raises(ValueError):
        parse_label("GL:2:[1")
    with pytest.raises(ValueError):
        parse_label("O:2:[1]")


@settings(max_examples=80, deadline=None)
@given(
    st.lists(st.integers(1, 5), max_size=5).map(lambda p: YoungDiagram(tuple(sorted(p, reverse=True)))),
    st.integers(-10, 10),
    st.integers(1, 6),
)
def test_make_label_is_canonical(y, k, N):
    if y.row_count > N:
        with pytest.raises(InvalidLabel):
            make_label(K.UNITARY, N, y, k)
        return
    lab = make_label(K.UNITARY, N, y, k)
    assert make_label(K.UNITARY, N, lab.diagram, lab.twist) == lab
    assert validate_label(lab)

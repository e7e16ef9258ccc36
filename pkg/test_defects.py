"""
Test Script: Surface and Line Defects

Triangulations and Pachner moves, dual algebra networks, defect data
adjacency, sphere state spaces and ribbons encoded as line defects.
"""

import pytest

from app.core.exceptions import InvalidInputError
from app.models.defect_schemas import DefectDataSpec
from app.services.category_service import category_service
from app.services.cyclotomic_service import ONE, CycScalar
from app.services.defect_service import TriangulatedPatch, defect_service
from app.services.diagram_service import diagram_service
from app.services.frobenius_service import frobenius_service
from app.services.homspace_service import SSObject, homspace_service as h
from app.services.multimodule_service import CyclicStructure, ModuleAction, MultiModule, minimal_period, multimodule_service


def network_value(patch):
    return diagram_service.evaluate_closed(defect_service.dualize(patch))


def commutative_sphere(A, **kwargs):
    M = multimodule_service.commutative_bimodule(A)
    S = CyclicStructure(M, 1, h.identity(M.category, M.word))
    return defect_service.sphere([(A, "+"), (A, "+")], S, S, **kwargs)


def induced_cyclic(A, i):
    """A (x) U_i over a single '+' line, phi = theta^-1"""
    C = A.category
    U = (SSObject.simple(i),)
    M = MultiModule(f"{A.name}(x)U{i}", C, A.word + U, [ModuleAction(A, "+", h.embed(A.mu, right=U))])
    return CyclicStructure(M, 1, h.twist(C, M.word, inverse=True))


def over_trivial(one, text, signs):
    """An object with trivial actions of the trivial algebra, one per sign"""
    C = one.category
    word = (SSObject.parse(text),)
    rho = h.identity(C, word)
    M = MultiModule(text, C, word, [ModuleAction(one, s, rho) for s in signs])
    return CyclicStructure(M, minimal_period([(0, s) for s in signs]), h.twist(C, word, inverse=True))


# -- triangulations ----------------------------------------------------------

def test_standard_spheres_are_closed():
    for patch in (defect_service.tetrahedron(), defect_service.octahedron()):
        assert patch.closed
        assert patch.euler_characteristic() == 2
    disk = defect_service.triangle()
    assert not disk.closed
    assert disk.euler_characteristic() == 1


def test_bad_triangles_are_rejected():
    with pytest.raises(InvalidInputError):
        TriangulatedPatch([(0, 0, 1)])
    with pytest.raises(InvalidInputError):
        TriangulatedPatch([(0, 1, 2), (0, 1, 3)])


def test_one_three_move():
    tetra = defect_service.tetrahedron()
    subdivided = defect_service.pachner_13(tetra, tetra.triangles[0])
    assert len(subdivided) == 6
    assert subdivided.closed
    assert subdivided.euler_characteristic() == 2
    with pytest.raises(InvalidInputError):
        defect_service.pachner_13(tetra, (0, 1, 4))


def test_two_two_move_and_its_reverse():
    octa = defect_service.octahedron()
    flipped = defect_service.pachner_22(octa, (0, 1))
    assert len(flipped) == 8
    assert flipped.euler_characteristic() == 2
    assert not flipped.same_complex(octa)
    restored = defect_service.pachner_22(flipped, (2, 4))
    assert restored.same_complex(octa)


def test_two_two_move_on_tetrahedron_is_degenerate():
    with pytest.raises(InvalidInputError):
        defect_service.pachner_22(defect_service.tetrahedron(), (0, 1))


def test_random_walk_keeps_a_sphere():
    patch = defect_service.random_walk(defect_service.octahedron(), moves=10, seed=4)
    assert patch.closed
    assert patch.euler_characteristic() == 2


def test_shelling_glues_every_edge_once():
    for patch, edges in ((defect_service.tetrahedron(), 6), (defect_service.octahedron(), 12)):
        steps = defect_service.shelling(patch)
        assert len(steps) == len(patch)
        assert steps[0][1:] == (0, 0)
        assert steps[-1][2] == 3
        assert sum(k for _, _, k in steps) == edges


# -- dual networks -------------------------------------------------------------

def test_trivial_network(sl2_3):
    one = frobenius_service.trivial_algebra(sl2_3)
    assert network_value(defect_service.tetrahedron(one)) == 1


def test_network_of_d10_sphere(d10):
    print("🧪 Testing dual networks")
    assert network_value(defect_service.tetrahedron(d10)) == 2
    assert network_value(defect_service.octahedron(d10)) == 2


def test_dualize_needs_an_algebra():
    with pytest.raises(InvalidInputError):
        defect_service.dualize(defect_service.tetrahedron())


def test_trivial_network_under_moves(sl2_3):
    one = frobenius_service.trivial_algebra(sl2_3)
    for seed in range(20):
        patch = defect_service.random_walk(defect_service.tetrahedron(one), moves=4, seed=seed)
        assert len(patch) <= 12
        assert network_value(patch) == 1


@pytest.mark.slow
def test_network_is_invariant_under_moves(d10):
    for seed in range(20):
        patch = defect_service.random_walk(defect_service.tetrahedron(d10), moves=4, seed=seed)
        assert network_value(patch) == 2


# -- defect data ---------------------------------------------------------------

def data(surfaces, lines):
    return DefectDataSpec.model_validate({"surfaces": surfaces, "lines": lines})


def test_bimodule_line_between_two_phases(sl2_16):
    defects = data([{"name": "S", "source": "X", "target": "Y"}],
                [{"name": "L", "decorations": [["S", "+"], ["S", "-"]]}])
    assert defect_service.validate_defect_data(sl2_16, defects).passed


def test_mismatched_phases_are_located(sl2_16):
    defects = data([{"name": "S", "source": "X", "target": "Y"}],
                [{"name": "good", "decorations": [["S", "+"], ["S", "-"]]},
                 {"name": "bad", "decorations": [["S", "+"]]}])
    report = defect_service.validate_defect_data(sl2_16, defects)
    assert not report.passed
    assert report.stratum == "bad"


def test_unknown_surface(sl2_16):
    defects = data([], [{"name": "L", "decorations": [["S", "+"]]}])
    report = defect_service.validate_defect_data(sl2_16, defects)
    assert not report.passed
    assert "unknown surface" in report.message


def test_bare_lines_need_trivial_twist(sl2_16):
    ok = data([], [{"name": "L", "object": [[0, 1], [16, 1]]}])
    assert defect_service.validate_defect_data(sl2_16, ok).passed
    bad = data([], [{"name": "L", "object": [[1, 1]]}])
    report = defect_service.validate_defect_data(sl2_16, bad)
    assert not report.passed
    assert report.stratum == "L"


def test_line_modules_match_up_to_rotation(sl2_16, d10):
    surfaces = [{"name": "D10"}]
    modules = {"AA": multimodule_service.regular_bimodule(d10), "A": multimodule_service.regular_module(d10)}
    for decorations in ([["D10", "+"], ["D10", "-"]], [["D10", "-"], ["D10", "+"]]):
        defects = data(surfaces, [{"name": "L", "decorations": decorations, "module": "AA"}])
        assert defect_service.validate_defect_data(sl2_16, defects, modules).passed
    defects = data(surfaces, [{"name": "L", "decorations": [["D10", "+"], ["D10", "-"]], "module": "A"}])
    assert not defect_service.validate_defect_data(sl2_16, defects, modules).passed


def test_reversed_decoration(sl2_16):
    surfaces = [{"name": "S"}, {"name": "T"}]
    good = data(surfaces, [{"name": "L", "decorations": [["S", "+"], ["T", "+"]],
                            "reversed": [["T", "-"], ["S", "-"]]}])
    assert defect_service.validate_defect_data(sl2_16, good).passed
    bad = data(surfaces, [{"name": "L", "decorations": [["S", "+"], ["T", "+"]],
                           "reversed": [["S", "-"], ["T", "-"]]}])
    assert not defect_service.validate_defect_data(sl2_16, bad).passed


# -- sphere state spaces -------------------------------------------------------------

def test_sphere_without_lines(sl2_3):
    X = SSObject.parse("1+3")
    M = MultiModule("X", sl2_3, (X,), [])
    S = CyclicStructure(M, 1, h.twist(sl2_3, M.word, inverse=True))
    sphere = defect_service.sphere([], S, S, verify=True)
    assert defect_service.state_space_dim(sphere) == h.hom_dim(sl2_3, [X], [X]) == 2


def test_cylinder_map_is_idempotent(d10):
    sphere = commutative_sphere(d10, verify=True)
    psi = defect_service.psi(sphere)
    assert psi.compose(psi) == psi
    out = defect_service.state_space_out(sphere)
    assert out.dimension == psi.rank() == out.module_hom_dim == 1


def test_assembled_sphere_matches_cylinder_map(d10):
    sphere = commutative_sphere(d10)
    psi = defect_service.psi(sphere)
    C, W = d10.category, d10.word
    for column, (src, dst) in zip(psi.columns, psi.source):
        f = h.from_entries(C, W + W + W, W, [(src, dst, ONE)])
        image = diagram_service.evaluate(defect_service.assemble_sphere(sphere, f))
        assert h.to_vector(image, psi.target) == column


def test_marks_do_not_change_the_state_space(d10):
    one_mark = commutative_sphere(d10)
    two_marks = commutative_sphere(d10, marks=2)
    assert defect_service.state_space_dim(one_mark) == defect_service.state_space_dim(two_marks)


def test_changing_marks_composes(d10):
    sphere = commutative_sphere(d10)
    up = defect_service.psi(sphere, t=1, t2=2)
    down = defect_service.psi(sphere, t=2, t2=1)
    assert down.compose(up) == defect_service.psi(sphere, t=1, t2=1)


def test_illegal_wedges(d10):
    with pytest.raises(InvalidInputError, match="illegal wedge"):
        commutative_sphere(d10, star=2)
    with pytest.raises(InvalidInputError):
        commutative_sphere(d10, marks=0)
    sphere = commutative_sphere(d10)
    with pytest.raises(InvalidInputError, match="illegal wedge"):
        defect_service.psi(sphere, j=0, j2=3)


def test_pole_decorations_must_match_lines(d10):
    M = multimodule_service.commutative_bimodule(d10)
    S = CyclicStructure(M, 1, h.identity(M.category, M.word))
    with pytest.raises(InvalidInputError):
        defect_service.sphere([(d10, "+")], S, S)


def test_regular_bimodule_sphere(d10):
    """One '+' and one '-' line: the '-' side acts through A^op"""
    M = multimodule_service.regular_bimodule(d10)
    S = CyclicStructure(M, 2, h.twist(M.category, M.word, inverse=True))
    sphere = defect_service.sphere([(d10, "+"), (d10, "-")], S, S, verify=True)
    psi = defect_service.psi(sphere)
    assert psi.compose(psi) == psi
    out = defect_service.state_space_out(sphere)
    assert out.dimension == out.module_hom_dim == multimodule_service.intertwiner_dim(M, M) == 1


@pytest.mark.parametrize("i, j, expected", [(0, 0, 1), (0, 16, 1), (8, 8, 2), (1, 15, 1), (3, 3, 1), (1, 2, 0)])
def test_induced_module_spheres(d10, i, j, expected):
    south, north = induced_cyclic(d10, i), induced_cyclic(d10, j)
    sphere = defect_service.sphere([(d10, "+")], south, north, verify=True)
    assert defect_service.psi(sphere).rank() == expected
    assert multimodule_service.intertwiner_dim(south.parent, north.parent) == expected


def test_trivial_line_spheres(sl2_3):
    one = frobenius_service.trivial_algebra(sl2_3)
    cases = [
        ("+", "1", "1"), ("+", "1", "3"), ("+", "1+3", "1"), ("+", "2", "0+2"), ("+", "0+1+2", "1+2"),
        ("+", "1+3", "1+3"), ("+", "0+3", "2"),
        ("+-", "1", "1"), ("+-", "2", "2+3"), ("+-", "0+3", "3"), ("+-", "1+2", "0+1+2"),
    ]
    for signs, x, y in cases:
        south, north = over_trivial(one, x, signs), over_trivial(one, y, signs)
        sphere = defect_service.sphere([(one, s) for s in signs], south, north, verify=True)
        rank = defect_service.psi(sphere).rank()
        assert rank == multimodule_service.intertwiner_dim(south.parent, north.parent)
        assert rank == h.hom_dim(sl2_3, south.parent.word, north.parent.word)


def test_interior_wedge_choice(d10):
    """Closing the cylinder gives the same trace at every wedge"""
    S = induced_cyclic(d10, 1)
    sphere = defect_service.sphere([(d10, "+")], S, S, verify=True)
    at_zero = defect_service.psi(sphere, j=0)
    at_one = defect_service.psi(sphere, j=1)
    assert at_one.compose(at_one) == at_one
    assert at_zero.trace() == at_one.trace() == CycScalar.from_int(at_zero.rank())
    assert at_zero.rank() == 1


def test_full_rotation_transport(d10):
    S = induced_cyclic(d10, 1)
    sphere = defect_service.sphere([(d10, "+")], S, S)
    assert defect_service.psi(sphere, j=0, j2=1).rank() == defect_service.state_space_dim(sphere)


def test_wedge_transports_compose(d10):
    sphere = commutative_sphere(d10)
    first = defect_service.psi(sphere, j=0, j2=1)
    second = defect_service.psi(sphere, j=1, j2=2)
    assert second.compose(first) == defect_service.psi(sphere, j=0, j2=2)


def test_over_rotation_compensation(d10):
    """phi^-(n/k) undoes phi^(n/k) = theta^-1"""
    S = multimodule_service.tensor_cyclic(multimodule_service.regular_module(d10))
    M = S.parent
    C = M.category
    assert h.compose(defect_service.phi_power(S, -1), defect_service.phi_power(S, 1)) == h.identity(C, M.word)
    assert defect_service.phi_power(S, -2) == h.twist(C, M.word)
    assert defect_service.phi_power(S, 2) == h.twist(C, M.word, inverse=True)


@pytest.mark.slow
def test_tensor_square_sphere(d10):
    S = multimodule_service.tensor_cyclic(multimodule_service.regular_module(d10))
    sphere = defect_service.sphere([(d10, "+"), (d10, "+")], S, S, verify=True)
    out = defect_service.state_space_out(sphere)
    assert out.dimension == out.module_hom_dim


@pytest.mark.slow
def test_tensor_square_marks_compose(d10):
    S = multimodule_service.tensor_cyclic(multimodule_service.regular_module(d10))
    sphere = defect_service.sphere([(d10, "+"), (d10, "+")], S, S)
    up = defect_service.psi(sphere, t=1, t2=2)
    down = defect_service.psi(sphere, t=2, t2=1)
    psi = defect_service.psi(sphere, t=1, t2=1)
    assert psi.compose(psi) == psi
    assert down.compose(up) == psi


# -- ribbons -------------------------------------------------------------------

def test_ribbons_as_line_defects(sl2_3):
    S = category_service.smatrix(sl2_3)
    for i in sl2_3.labels:
        loop = defect_service.ribbon_as_defect(sl2_3, "loop", [i])
        assert diagram_service.evaluate_closed(loop) == sl2_3.qdim[i]
        twisted = defect_service.ribbon_as_defect(sl2_3, "twist", [i])
        assert diagram_service.evaluate_closed(twisted) == sl2_3.theta[i] * sl2_3.qdim[i]
        for j in sl2_3.labels:
            hopf = defect_service.ribbon_as_defect(sl2_3, "hopf", [i, j])
            assert diagram_service.evaluate_closed(hopf) == S[i][j]


def test_bare_ribbons(sl2_3):
    bare = defect_service.ribbon_as_defect(sl2_3, "loop", [0], bare=True)
    assert diagram_service.evaluate_closed(bare) == 1
    with pytest.raises(InvalidInputError):
        defect_service.ribbon_as_defect(sl2_3, "twist", [1], bare=True)
    with pytest.raises(InvalidInputError):
        defect_service.ribbon_as_defect(sl2_3, "theta", [1])

"""
Defect Service

Compiles surface and line defects into ribbon networks.

Triangulated patches are dualized by a shelling sweep: triangles are
added one at a time to a growing disk whose boundary edges are the open
strands of the diagram, each dual vertex becoming a product-type or
coproduct-type coupon according to the orientation induced by the vertex
order. Decorated spheres with meridional algebra lines are handled by the
cylinder idempotent acting on Hom(B_t (x) M, N), where B_t carries t
attachment marks per line.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from ..core.console import console
from ..core.exceptions import InvalidInputError, TypeMismatchError
from ..models.defect_schemas import DefectDataSpec, DefectReport, SphereFile, StateSpaceOut, SurfaceSpec
from .category_service import MtcData
from .cyclotomic_service import ONE, ZERO, CycScalar, cyclotomic_service
from .diagram_service import SlicedDiagram, Strand, cap, coupon, cup, diagram_service
from .diagram_service import braid as braid_generator
from .diagram_service import twist as twist_generator
from .frobenius_service import FrobeniusAlgebra, frobenius_service
from .homspace_service import Morphism, SSObject, State, Word, homspace_service
from .multimodule_service import CyclicStructure, ModuleAction, MultiModule, minimal_period, multimodule_service
from .serialization_service import resolve_path, serialization_service

h = homspace_service

Triangle = Tuple[int, int, int]
Edge = Tuple[int, int]


def _canonical(t: Triangle) -> Triangle:
    i = t.index(min(t))
    return t[i:] + t[:i]


def _edges(t: Triangle) -> List[Edge]:
    return [(t[0], t[1]), (t[1], t[2]), (t[2], t[0])]


def induced_sign(t: Triangle) -> int:
    """+1 when the cyclic order agrees with the vertex order, -1 otherwise"""
    a, b, c = _canonical(t)
    return 1 if b < c else -1


class TriangulatedPatch:
    """Oriented triangulated sphere or disk carrying one algebra"""

    def __init__(self, triangles: Iterable[Triangle], algebra: Optional[FrobeniusAlgebra] = None,
                 orientation: str = "+"):
        self.triangles: List[Triangle] = sorted(_canonical(tuple(t)) for t in triangles)
        self.algebra = algebra
        self.orientation = orientation
        self._edge_owner: Dict[Edge, Triangle] = {}
        for t in self.triangles:
            if len(set(t)) != 3:
                raise InvalidInputError("degenerate triangle", {"triangle": list(t)})
            for e in _edges(t):
                if e in self._edge_owner:
                    raise InvalidInputError("inconsistent orientation: directed edge used twice", {"edge": list(e)})
                self._edge_owner[e] = t

    @property
    def vertices(self) -> List[int]:
        return sorted({v for t in self.triangles for v in t})

    def boundary_edges(self) -> List[Edge]:
        return sorted(e for e in self._edge_owner if (e[1], e[0]) not in self._edge_owner)

    @property
    def closed(self) -> bool:
        return not self.boundary_edges()

    def owner(self, e: Edge) -> Optional[Triangle]:
        return self._edge_owner.get(e)

    def euler_characteristic(self) -> int:
        edges = {frozenset(e) for e in self._edge_owner}
        return len(self.vertices) - len(edges) + len(self.triangles)

    def with_triangles(self, triangles: Iterable[Triangle]) -> TriangulatedPatch:
        return TriangulatedPatch(triangles, self.algebra, self.orientation)

    def same_complex(self, other: TriangulatedPatch) -> bool:
        return self.triangles == other.triangles

    def __len__(self) -> int:
        return len(self.triangles)

    def __repr__(self) -> str:
        return f"TriangulatedPatch({len(self.triangles)} triangles, chi={self.euler_characteristic()})"


@dataclass
class DefectSphereObject:
    """Sphere with meridional lines between a south and a north multi-module"""
    lines: List[Tuple[FrobeniusAlgebra, str]]
    south: CyclicStructure
    north: CyclicStructure
    star: int = 0
    marks: int = 1

    @property
    def n(self) -> int:
        return len(self.lines)

    @property
    def category(self) -> MtcData:
        return self.south.parent.category

    @property
    def period(self) -> int:
        return minimal_period([(id(A), s) for A, s in self.lines])


@dataclass
class LinearMap:
    """Matrix over CycScalar between two hom spaces given by their matrix units"""
    source: List[Tuple[State, State]]
    target: List[Tuple[State, State]]
    columns: List[List[CycScalar]] = field(default_factory=list)

    def apply(self, vector: Sequence[CycScalar]) -> List[CycScalar]:
        out = [ZERO] * len(self.target)
        for x, column in zip(vector, self.columns):
            if x.is_zero():
                continue
            for i, value in enumerate(column):
                if not value.is_zero():
                    out[i] = out[i] + x * value
        return out

    def compose(self, first: LinearMap) -> LinearMap:
        """self o first"""
        if first.target != self.source:
            raise TypeMismatchError("linear maps do not compose", len(first.target), len(self.source))
        return LinearMap(first.source, self.target, [self.apply(c) for c in first.columns])

    def rows(self) -> List[List[CycScalar]]:
        return [list(row) for row in zip(*self.columns)]

    def rank(self) -> int:
        if not self.columns or not self.target:
            return 0
        return cyclotomic_service.rank(self.rows())

    def trace(self) -> CycScalar:
        if self.source != self.target:
            raise TypeMismatchError("trace needs an endomorphism", len(self.source), len(self.target))
        total = ZERO
        for i, column in enumerate(self.columns):
            total = total + column[i]
        return total

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinearMap):
            return NotImplemented
        return self.source == other.source and self.target == other.target and self.columns == other.columns


class DefectService:
    """Triangulations, dualization, defect data validation and sphere state spaces"""

    SHELLING_BUDGET = 50000

    # -- triangulations ----------------------------------------------------

    @staticmethod
    def tetrahedron(algebra: Optional[FrobeniusAlgebra] = None) -> TriangulatedPatch:
        return TriangulatedPatch([(0, 2, 1), (0, 1, 3), (0, 3, 2), (1, 2, 3)], algebra)

    @staticmethod
    def octahedron(algebra: Optional[FrobeniusAlgebra] = None) -> TriangulatedPatch:
        top = [(0, i, i % 4 + 1) for i in range(1, 5)]
        bottom = [(5, i % 4 + 1, i) for i in range(1, 5)]
        return TriangulatedPatch(top + bottom, algebra)

    @staticmethod
    def triangle(algebra: Optional[FrobeniusAlgebra] = None) -> TriangulatedPatch:
        return TriangulatedPatch([(0, 1, 2)], algebra)

    @staticmethod
    def pachner_13(patch: TriangulatedPatch, face: Triangle) -> TriangulatedPatch:
        """Subdivide a triangle by a new vertex"""
        face = _canonical(tuple(face))
        if face not in patch.triangles:
            raise InvalidInputError("1-3 move on a triangle that is not in the patch", {"face": list(face)})
        x = max(patch.vertices) + 1
        a, b, c = face
        rest = [t for t in patch.triangles if t != face]
        return patch.with_triangles(rest + [(a, b, x), (b, c, x), (c, a, x)])

    @staticmethod
    def pachner_22(patch: TriangulatedPatch, edge: Edge) -> TriangulatedPatch:
        """Flip the diagonal of the quadrilateral around an interior edge"""
        u, v = edge
        t1, t2 = patch.owner((u, v)), patch.owner((v, u))
        if t1 is None or t2 is None:
            raise InvalidInputError("2-2 move needs an interior edge", {"edge": [u, v]})
        a = next(x for x in t1 if x not in (u, v))
        b = next(x for x in t2 if x not in (u, v))
        if a == b or patch.owner((a, b)) is not None or patch.owner((b, a)) is not None:
            raise InvalidInputError("2-2 move would create a degenerate complex", {"edge": [u, v]})
        rest = [t for t in patch.triangles if t not in (t1, t2)]
        return patch.with_triangles(rest + [(u, b, a), (b, v, a)])

    def random_walk(self, patch: TriangulatedPatch, moves: int, seed: int = 1) -> TriangulatedPatch:
        """Seeded sequence of 1-3 and 2-2 moves"""
        rng = random.Random(seed)
        done = 0
        while done < moves:
            if rng.random() < 0.5:
                patch = self.pachner_13(patch, rng.choice(patch.triangles))
                done += 1
                continue
            interior = [e for e in sorted(patch._edge_owner) if e[0] < e[1] and patch.owner((e[1], e[0]))]
            if not interior:
                continue
            try:
                patch = self.pachner_22(patch, rng.choice(interior))
                done += 1
            except InvalidInputError:
                continue
        return patch

    # -- dualization -------------------------------------------------------

    def shelling(self, patch: TriangulatedPatch) -> List[Tuple[Triangle, int, int]]:
        """Order of triangles with the frontier position and number of glued edges of each"""
        if not patch.triangles:
            return []
        boundary = {v for e in patch.boundary_edges() for v in e}
        base = min(boundary) if boundary else patch.vertices[0]
        budget = [self.SHELLING_BUDGET]
        total = len(patch.triangles)

        def extend(frontier: List[Edge], used: Set[Triangle], steps: List) -> Optional[List]:
            if len(used) == total:
                return steps
            budget[0] -= 1
            if budget[0] < 0:
                return None
            position = {e: i for i, e in enumerate(frontier)}
            on_frontier = {e[0] for e in frontier}
            candidates = []
            for t in patch.triangles:
                if t in used:
                    continue
                shared = sorted(position[(q, p)] for p, q in _edges(t) if (q, p) in position)
                k = len(shared)
                if k == 0:
                    continue
                if k == 1:
                    i = shared[0]
                    p, q = frontier[i]
                    apex = next(x for x in t if x not in (p, q))
                    if apex in on_frontier:
                        continue
                    nxt = frontier[:i] + [(p, apex), (apex, q)] + frontier[i + 1:]
                elif k == 2:
                    i = shared[0]
                    if shared[1] != i + 1:
                        continue
                    nxt = frontier[:i] + [(frontier[i][0], frontier[i + 1][1])] + frontier[i + 2:]
                else:
                    if len(frontier) != 3 or len(used) != total - 1:
                        continue
                    i, nxt = 0, []
                candidates.append((-k, t, i, nxt))
            for neg_k, t, i, nxt in sorted(candidates, key=lambda c: (c[0], c[1])):
                found = extend(nxt, used | {t}, steps + [(t, i, -neg_k)])
                if found is not None:
                    return found
            return None

        for t in patch.triangles:
            if base not in t:
                continue
            r = t.index(base)
            x, y, z = t[r:] + t[:r]
            found = extend([(x, y), (y, z), (z, x)], {t}, [(t, 0, 0)])
            if found is not None:
                return found
        raise InvalidInputError("no shelling found; the patch is not a sphere or disk", {"triangles": len(patch)})

    @staticmethod
    def vertex_maps(A: FrobeniusAlgebra) -> Dict[Tuple[str, int], Morphism]:
        """Dual-vertex coupons by type and number of glued edges"""
        W = A.word
        pairing = h.compose(A.eps, A.mu)
        copairing = h.compose(A.delta, A.eta)
        return {
            ("delta", 0): h.compose(h.embed(A.delta, right=W), copairing),
            ("delta", 1): A.delta,
            ("delta", 2): h.compose(h.embed(pairing, right=W), h.embed(A.delta, left=W)),
            ("delta", 3): h.compose(h.tensor(pairing, pairing), h.embed(A.delta, left=W, right=W)),
            ("mu", 0): h.compose(h.embed(A.mu, left=W, right=W), h.tensor(copairing, copairing)),
            ("mu", 1): h.compose(h.embed(A.mu, right=W), h.embed(copairing, left=W)),
            ("mu", 2): A.mu,
            ("mu", 3): h.compose(pairing, h.embed(A.mu, right=W)),
        }

    def dualize(self, patch: TriangulatedPatch) -> SlicedDiagram:
        """Poincare-dual network: coproducts at positively, products at negatively oriented triangles"""
        A = patch.algebra
        if A is None:
            raise InvalidInputError("patch carries no algebra")
        if patch.orientation == "-":
            A = frobenius_service.opposite(A)
        C = A.category
        maps = self.vertex_maps(A)
        width = len(A.word)
        D = SlicedDiagram(C)
        for t, i, k in self.shelling(patch):
            kind = "delta" if induced_sign(t) > 0 else "mu"
            D.place(i * width, coupon(maps[(kind, k)], ref=f"{A.name}.{kind}{k}"))
        console.info(f"Dualized {patch!r} into {len(D)} slices")
        return D

    # -- defect data -------------------------------------------------------

    @staticmethod
    def _ends(surface: SurfaceSpec, sign: str) -> Tuple[str, str]:
        """Source and target 3-strata of a surface as seen from a line"""
        return (surface.source, surface.target) if sign == "+" else (surface.target, surface.source)

    def validate_defect_data(self, C: MtcData, data: DefectDataSpec,
                             modules: Optional[Dict[str, MultiModule]] = None) -> DefectReport:
        """First violated adjacency, or a passing report"""
        surfaces = {s.name: s for s in data.surfaces}
        for line in data.lines:
            listed = [(name, sign) for name, sign in line.decorations]
            missing = [name for name, _ in listed if name not in surfaces]
            if missing:
                return self._invalid(line.name, f"unknown surface {missing[0]!r}")
            decorations = _flipped(listed) if line.orientation == "-" else listed
            for i, (f, e) in enumerate(decorations):
                g, d = decorations[(i + 1) % len(decorations)]
                end = self._ends(surfaces[f], e)[1]
                start = self._ends(surfaces[g], d)[0]
                if end != start:
                    return self._invalid(line.name, f"{f}{e} ends in {end} but {g}{d} starts in {start}")
            if line.reversed is not None and [tuple(x) for x in line.reversed] != _flipped(listed):
                return self._invalid(line.name, "reversed decoration is not the reversed sign-flipped list")
            if line.module is not None and modules is not None:
                M = modules.get(line.module)
                if M is None:
                    return self._invalid(line.name, f"unknown module {line.module!r}")
                labels = [(a.algebra.name, a.sign) for a in M.actions]
                if not _is_rotation(labels, decorations):
                    return self._invalid(line.name, f"module {M.name} is decorated by {labels}, line by {decorations}")
            if not decorations and line.object is not None:
                bad = [a for a, _ in line.object if not C.theta[a].is_one()]
                if bad:
                    return self._invalid(line.name, f"line without surfaces needs theta_X = 1; fails for {bad[0]}")
        return DefectReport(passed=True)

    @staticmethod
    def _invalid(stratum: str, message: str) -> DefectReport:
        console.warning(f"Defect data rejected at {stratum}: {message}")
        return DefectReport(passed=False, stratum=stratum, message=message)

    # -- spheres -----------------------------------------------------------

    def sphere(self, lines: Sequence[Tuple[FrobeniusAlgebra, str]], south: CyclicStructure,
               north: CyclicStructure, star: int = 0, marks: int = 1, verify: bool = False) -> DefectSphereObject:
        S = DefectSphereObject(list(lines), south, north, star, marks)
        self.validate_sphere(S, verify=verify)
        return S

    def validate_sphere(self, S: DefectSphereObject, verify: bool = False):
        decorations = [(id(A), s) for A, s in S.lines]
        if S.south.parent.category is not S.north.parent.category:
            raise TypeMismatchError("poles live in different categories",
                                    S.south.parent.category.name, S.north.parent.category.name)
        for pole, cyclic in (("south", S.south), ("north", S.north)):
            if cyclic.parent.decorations != decorations:
                raise InvalidInputError(f"{pole} module is not decorated by the line list",
                                        {"module": repr(cyclic.parent)})
            if cyclic.k != S.period:
                raise InvalidInputError(f"{pole} cyclic structure has period {cyclic.k}, the lines have {S.period}")
            if verify:
                report = multimodule_service.check_cyclic(cyclic)
                if not report.passed:
                    raise InvalidInputError(f"{pole} cyclic structure fails: {report.failures[0].axiom}",
                                            report.model_dump())
        if not 0 <= S.star < max(S.n, 1):
            raise InvalidInputError("illegal wedge", {"star": S.star, "lines": S.n})
        if S.marks < 1:
            raise InvalidInputError("each line needs at least one mark", {"marks": S.marks})

    def _wedge_offset(self, S: DefectSphereObject, j: int, j2: int) -> int:
        for wedge in (j, j2):
            if not 0 <= wedge <= S.n:
                raise InvalidInputError("illegal wedge", {"wedge": wedge, "lines": S.n})
        if (j2 - j) % S.period:
            raise InvalidInputError("illegal wedge: transport must move by multiples of the period",
                                    {"from": j, "to": j2, "period": S.period})
        return (j2 - j) // S.period

    @staticmethod
    def _marked(actions: Sequence[ModuleAction], t: int) -> Word:
        return tuple(x for a in actions for _ in range(t) for x in a.acting.word)

    @staticmethod
    def _merge(A: FrobeniusAlgebra, t: int) -> Morphism:
        """Iterated product A^t -> A"""
        unit = h.identity(A.category, A.word)
        f = unit
        for _ in range(1, t):
            f = h.compose(A.mu, h.tensor(f, unit))
        return f

    @staticmethod
    def _split(A: FrobeniusAlgebra, t: int) -> Morphism:
        """Iterated coproduct A -> A^t"""
        unit = h.identity(A.category, A.word)
        f = unit
        for _ in range(1, t):
            f = h.compose(h.tensor(f, unit), A.delta)
        return f

    @staticmethod
    def phi_power(cyclic: CyclicStructure, s: int) -> Morphism:
        """phi^s, with phi^-1 = phi^(n/k - 1) o theta_M"""
        M = cyclic.parent
        if s >= 0:
            return h.power(cyclic.phi, s)
        n = len(M.actions)
        inverse = h.compose(h.power(cyclic.phi, max(n // cyclic.k - 1, 0)), h.twist(M.category, M.word))
        return h.power(inverse, -s)

    def _cylinder(self, S: DefectSphereObject, j: int, t: int, t2: int, s: int) -> SlicedDiagram:
        """Everything below the coupon: B_t2 (x) M -> B (x) B_t (x) M"""
        M = multimodule_service.twist_multimodule(S.south.parent, j)
        B, rho = multimodule_service.combine(M)
        C = S.category
        width = len(B.word)
        D = SlicedDiagram(C, [Strand(x) for x in self._marked(M.actions, t2) + M.word])
        if s:
            D.place(len(D.top) - len(M.word), coupon(self.phi_power(S.south, s), ref=f"{M.name}.phi^{s}"))
        if t2 > 1 and width:
            D.place(0, *[coupon(self._merge(a.acting, t2), ref=f"{a.algebra.name}.merge")
                         for a in M.actions if a.acting.word])
        if width:
            triple = h.compose(h.embed(B.delta, left=B.word), B.delta)
            D.place(0, coupon(triple, ref=f"{B.name}.delta3"))
        D.place(2 * width, coupon(rho, ref=f"{M.name}.rho"))
        if t > 1 and width:
            D.place(width, *[coupon(self._split(a.acting, t), ref=f"{a.algebra.name}.split")
                             for a in M.actions if a.acting.word])
        return D

    def assemble_sphere(self, S: DefectSphereObject, f: Morphism, j: Optional[int] = None,
                        t: Optional[int] = None, t2: Optional[int] = None,
                        j2: Optional[int] = None) -> SlicedDiagram:
        """Cylinder diagram over S with f: B_t (x) M -> N as its middle coupon"""
        j = S.star if j is None else j
        j2 = j if j2 is None else j2
        t = t or S.marks
        t2 = t2 or t
        s = self._wedge_offset(S, j, j2)
        D = self._cylinder(S, j, t, t2, s)
        N = multimodule_service.twist_multimodule(S.north.parent, j)
        B, rho = multimodule_service.combine(N)
        D.place(len(B.word), coupon(f, ref="f"))
        D.place(0, coupon(rho, ref=f"{N.name}.rho"))
        if s:
            D.place(0, coupon(self.phi_power(S.north, -s), ref=f"{N.name}.phi^{-s}"))
        return D

    def psi(self, S: DefectSphereObject, t: Optional[int] = None, t2: Optional[int] = None,
            j: Optional[int] = None, j2: Optional[int] = None) -> LinearMap:
        """Cylinder map Hom(B_t (x) M, N) -> Hom(B_t2 (x) M, N), transported from wedge j to j2"""
        j = S.star if j is None else j
        j2 = j if j2 is None else j2
        t = t or S.marks
        t2 = t2 or t
        s = self._wedge_offset(S, j, j2)
        C = S.category
        M = multimodule_service.twist_multimodule(S.south.parent, j)
        N = multimodule_service.twist_multimodule(S.north.parent, j)
        M2 = multimodule_service.twist_multimodule(S.south.parent, j2)
        B, rho_n = multimodule_service.combine(N)
        lower = diagram_service.evaluate(self._cylinder(S, j, t, t2, s))
        upper = self.phi_power(S.north, -s) if s else None
        dom = self._marked(M.actions, t) + M.word
        source = h.hom_basis_states(C, dom, N.word)
        target = h.hom_basis_states(C, self._marked(M2.actions, t2) + M.word, N.word)
        columns = []
        for unit in source:
            f = h.from_entries(C, dom, N.word, [(unit[0], unit[1], ONE)])
            image = h.compose_all(rho_n, h.embed(f, left=B.word), lower)
            if upper is not None:
                image = h.compose(upper, image)
            columns.append(h.to_vector(image, target))
        console.info(f"Cylinder map on {len(source)}-dimensional space (t={t}->{t2}, wedge {j}->{j2})")
        return LinearMap(source, target, columns)

    def state_space_dim(self, S: DefectSphereObject, t: Optional[int] = None, j: Optional[int] = None) -> int:
        """Rank of the cylinder idempotent"""
        return self.psi(S, t, t, j, j).rank()

    # -- ribbons -----------------------------------------------------------

    @staticmethod
    def ribbon_module(C: MtcData, label: int) -> MultiModule:
        """U_label over the trivial algebra from both sides"""
        one = frobenius_service.trivial_algebra(C)
        word = (SSObject.simple(label),)
        rho = h.identity(C, word)
        return MultiModule(f"U{label}", C, word, [ModuleAction(one, "+", rho), ModuleAction(one, "-", rho)])

    def ribbon_as_defect(self, C: MtcData, fragment: str, labels: Sequence[int], bare: bool = False) -> SlicedDiagram:
        """Loop, twisted loop or Hopf link whose ribbons are encoded as line defects between trivial surfaces"""
        labels = list(labels)
        expected = {"loop": 1, "twist": 1, "hopf": 2}
        if fragment not in expected or len(labels) != expected[fragment]:
            raise InvalidInputError("unknown fragment or wrong number of labels",
                                    {"fragment": fragment, "labels": labels})
        if bare:
            bad = [a for a in labels if not C.theta[a].is_one()]
            if bad:
                raise InvalidInputError("a line without adjacent surfaces needs theta_X = 1", {"label": bad[0]})
        D = SlicedDiagram(C)
        for position, label in enumerate(labels):
            D.place(position, cup(Strand(SSObject.simple(label))))
        for position, label in enumerate([] if bare else labels):
            M = self.ribbon_module(C, label)
            for index, action in enumerate(M.actions):
                D.place(position, coupon(action.rho, ref=f"{M.name}.rho{index + 1}"))
        if fragment == "twist":
            D.place(0, twist_generator())
        if fragment == "hopf":
            D.place(0, braid_generator()).place(0, braid_generator())
            D.place(1, cap())
        return D.place(0, cap())

    # -- files -------------------------------------------------------------

    def load_sphere(self, path: Path, trust: bool = False, samples: int = 1000, seed: int = 1,
                    verify: bool = True) -> DefectSphereObject:
        data = serialization_service.read_model(path, SphereFile)
        memo: Dict = {}
        lines = [(serialization_service.load_algebra(resolve_path(d.algebra, path), trust=trust, samples=samples,
                                                     seed=seed, memo=memo), d.sign) for d in data.lines]
        poles = []
        for ref in (data.south, data.north):
            _, cyclic = serialization_service.load_module(resolve_path(ref, path), trust=trust, samples=samples,
                                                          seed=seed, memo=memo)
            if cyclic is None:
                raise InvalidInputError("sphere poles need a cyclic structure (phi)", {"module": ref})
            poles.append(cyclic)
        return self.sphere(lines, poles[0], poles[1], data.star, data.marks, verify=verify)

    def state_space_out(self, S: DefectSphereObject, t: Optional[int] = None, j: Optional[int] = None) -> StateSpaceOut:
        t = t or S.marks
        j = S.star if j is None else j
        M = multimodule_service.twist_multimodule(S.south.parent, j)
        N = multimodule_service.twist_multimodule(S.north.parent, j)
        return StateSpaceOut(lines=S.n, star=j, marks=t, dimension=self.state_space_dim(S, t, j),
                             module_hom_dim=multimodule_service.module_hom_dim(M, N))


def _flipped(decorations: Sequence[Tuple[str, str]]) -> List[Tuple[str, str]]:
    return [(f, "-" if e == "+" else "+") for f, e in reversed(decorations)]


def _is_rotation(a: Sequence, b: Sequence) -> bool:
    if len(a) != len(b):
        return False
    return not a or any(list(a[i:]) + list(a[:i]) == list(b) for i in range(len(a)))


defect_service = DefectService()

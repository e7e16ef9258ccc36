"""
Invariant Service

Left and right centers, the full-center matrix and the invariants of
surfaces embedded in S2xS1 and T3.

The centers are the images of P = mu o c^(+-1) o Delta. The full-center
matrix counts bimodule maps between alpha-induced bimodules A (x) U_i; which
index convention is meant is settled by a calibration suite run once per
algebra, and the chosen variant travels with the result.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from cachetools import LRUCache

from ..core.config import settings
from ..core.console import console
from ..core.exceptions import CalibrationError, InvalidInputError, MtcdefError, VerificationError
from ..models.invariant_schemas import (
    CenterOut,
    ConventionOut,
    FullCenterOut,
    SphereInvariantOut,
    T3Out,
    TableOut,
    TableRow,
)
from ..models.scalar_schemas import ReportValue, render_value
from .category_service import MtcData, category_service
from .cyclotomic_service import ONE, ZERO, CycScalar, cyclotomic_service
from .frobenius_service import FrobeniusAlgebra, frobenius_service
from .homspace_service import Morphism, SSObject, homspace_service, sector
from .multimodule_service import ModuleAction, MultiModule, multimodule_service

h = homspace_service

# (name, pairing of signs, whether the second index is dualized)
VARIANTS: List[Tuple[str, Tuple[str, str], bool]] = [
    ("plus-minus", ("+", "-"), False),
    ("plus-minus-dual", ("+", "-"), True),
    ("minus-plus", ("-", "+"), False),
    ("minus-plus-dual", ("-", "+"), True),
]

# Z^RT of the catalogued manifolds, as a function of the category
CATALOG = {
    "S2xS1": lambda C: ONE,
    "T3": lambda C: CycScalar.from_int(C.size),
}


@dataclass
class CenterData:
    algebra: FrobeniusAlgebra
    side: str
    projector: Morphism
    multiplicities: Dict[int, int] = field(default_factory=dict)
    qdim: CycScalar = ZERO

    @property
    def obj(self) -> SSObject:
        return SSObject({c: n for c, n in self.multiplicities.items() if n})

    def to_out(self) -> CenterOut:
        return CenterOut(algebra=self.algebra.name, side=self.side,
                         multiplicities=dict(self.multiplicities), qdim=render_value(self.qdim))


@dataclass
class FullCenterMatrix:
    algebra: FrobeniusAlgebra
    Z: List[List[int]]
    variant: str
    passing: List[str] = field(default_factory=list)

    @property
    def trace(self) -> int:
        return sum(self.Z[i][i] for i in range(len(self.Z)))

    def convention(self) -> ConventionOut:
        return ConventionOut(variant=self.variant, passing=list(self.passing))

    def to_out(self) -> FullCenterOut:
        return FullCenterOut(algebra=self.algebra.name, Z=self.Z, trace=self.trace, convention=self.convention())


class InvariantService:
    """Centers, full centers and embedded-surface invariants"""

    def __init__(self, parallelism: Optional[int] = None):
        self.parallelism = parallelism or settings.PARALLELISM
        self._identity_anchor: LRUCache = LRUCache(maxsize=32)

    # -- centers -----------------------------------------------------------

    def center_projector(self, A: FrobeniusAlgebra, side: str = "left") -> CenterData:
        """Image of mu o c_{A,A} o Delta (left) or mu o c_{A,A}^-1 o Delta (right)"""
        if side not in ("left", "right"):
            raise InvalidInputError("side must be 'left' or 'right'", {"side": side})
        C, W = A.category, A.word
        P = h.compose_all(A.mu, h.braid_block(C, W, W, inverse=side == "right"), A.delta)
        if h.compose(P, P) != P:
            raise VerificationError(f"{side} center projector of {A.name} is not idempotent")
        image_pair = h.tensor(P, P)
        products = h.compose(A.mu, image_pair)
        if h.compose(h.compose(A.mu, h.braid_block(C, W, W)), image_pair) != products:
            raise VerificationError(f"{side} center of {A.name} is not commutative")
        if h.compose(P, products) != products:
            raise VerificationError(f"{side} center of {A.name} is not closed under the product")
        multiplicities = self._sector_ranks(P)
        data = CenterData(A, side, P, multiplicities, h.qtrace(P))
        console.success(f"{side} center of {A.name}: {multiplicities}, qdim {data.qdim}")
        return data

    @staticmethod
    def _sector_ranks(P: Morphism) -> Dict[int, int]:
        """Rank of P on each simple sector"""
        C = P.category
        by_sector: Dict[int, List] = {}
        for s in h.states(C, P.dom):
            by_sector.setdefault(sector(s), []).append(s)
        ranks = {}
        for c, states in sorted(by_sector.items()):
            rows = [[P.column(s).get(t, ZERO) for s in states] for t in states]
            r = cyclotomic_service.rank(rows)
            if r:
                ranks[c] = r
        return ranks

    # -- alpha induction ---------------------------------------------------

    def alpha_bimodule(self, A: FrobeniusAlgebra, i: int, sign: str = "+") -> MultiModule:
        """A (x) U_i with A acting on the left by mu and on the right past U_i"""
        if sign not in ("+", "-"):
            raise InvalidInputError("sign must be '+' or '-'", {"sign": sign})
        C, W = A.category, A.word
        U = (SSObject.simple(i),)
        word = W + U
        left = h.embed(A.mu, right=U)
        past = h.braid_block(C, U, W, inverse=sign == "-")
        right = h.compose(h.embed(A.mu, right=U), h.embed(past, left=W))
        rho = h.compose(right, h.braid_block(C, W, word))
        M = MultiModule(f"alpha{sign}({A.name}, {i})", C, word,
                        [ModuleAction(A, "+", left), ModuleAction(A, "-", rho)])
        return M

    # -- full center -------------------------------------------------------

    def _entries(self, A: FrobeniusAlgebra, signs: Tuple[str, str], dualize: bool) -> List[List[int]]:
        C = A.category
        first = [self.alpha_bimodule(A, i, signs[0]) for i in C.labels]
        second = {j: self.alpha_bimodule(A, j, signs[1]) for j in C.labels}

        def entry(pair: Tuple[int, int]) -> int:
            i, j = pair
            target = second[C.dual(j) if dualize else j]
            if not h.hom_basis_states(C, first[i].word, target.word):
                return 0
            return multimodule_service.module_hom_dim(first[i], target)

        pairs = [(i, j) for i in C.labels for j in C.labels]
        with ThreadPoolExecutor(max_workers=max(self.parallelism, 1)) as pool:
            values = list(console.track(pool.map(entry, pairs), desc=f"Z({A.name})", total=len(pairs)))
        size = C.size
        return [values[r * size:(r + 1) * size] for r in range(size)]

    def _calibration_failures(self, A: FrobeniusAlgebra, Z: List[List[int]], name: str) -> List[str]:
        C = A.category
        failures = []
        if Z[0][0] != 1:
            failures.append("Z_00 != 1")
        Zc = [[CycScalar.from_int(x) for x in row] for row in Z]
        for label, M in (("S", category_service.smatrix(C)), ("T", category_service.tmatrix(C))):
            if _matmul(M, Zc) != _matmul(Zc, M):
                failures.append(f"does not commute with {label}")
        if not self._identity_at_unit(C, name):
            failures.append("not the identity for the trivial algebra")
        k = C.size - 1
        if C.name.startswith("sl2_") and k % 4 == 0 and len(A.word) == 1 \
                and A.word[0].multiplicities == ((0, 1), (k, 1)):
            anchor = sum(row[i] for i, row in enumerate(self.d_series_invariant(C)))
            if sum(Z[i][i] for i in C.labels) != anchor:
                failures.append(f"trace differs from the D-series anchor {anchor}")
        return failures

    def _identity_at_unit(self, C: MtcData, name: str) -> bool:
        key = (C.name, name)
        if key not in self._identity_anchor:
            _, signs, dualize = next(v for v in VARIANTS if v[0] == name)
            Z = self._entries(frobenius_service.trivial_algebra(C), signs, dualize)
            self._identity_anchor[key] = all(Z[i][j] == (1 if i == j else 0)
                                             for i in C.labels for j in C.labels)
        return self._identity_anchor[key]

    def full_center_matrix(self, A: FrobeniusAlgebra) -> FullCenterMatrix:
        """Z(A)_ij under the first index convention that passes calibration"""
        computed: Dict[Tuple[Tuple[str, str], Tuple[int, ...]], List[List[int]]] = {}
        passing: List[Tuple[str, List[List[int]]]] = []
        dump = {}
        C = A.category
        for name, signs, dualize in VARIANTS:
            index_map = tuple(C.dual(j) if dualize else j for j in C.labels)
            key = (signs, index_map)
            if key not in computed:
                computed[key] = self._entries(A, signs, dualize)
            Z = computed[key]
            failures = self._calibration_failures(A, Z, name)
            dump[name] = {"Z": Z, "failures": failures}
            if not failures:
                passing.append((name, Z))
        if not passing:
            raise CalibrationError(f"no full-center convention passes calibration for {A.name}", dump)
        name, Z = passing[0]
        result = FullCenterMatrix(A, Z, name, [p for p, _ in passing])
        console.success(f"Full center of {A.name} ({name}): trace {result.trace}")
        return result

    @staticmethod
    def d_series_invariant(C: MtcData) -> List[List[int]]:
        """Block-diagonal D-series modular invariant of sl(2)_k for k = 0 mod 4"""
        k = C.size - 1
        if k % 4:
            raise InvalidInputError("the block-diagonal D-series needs level k = 0 mod 4", {"k": k})
        Z = [[0] * C.size for _ in C.labels]
        for i in range(0, k + 1, 2):
            if i == k // 2:
                Z[i][i] = 2
            else:
                Z[i][i] = Z[i][k - i] = 1
        return Z

    # -- embedded surfaces -------------------------------------------------

    @staticmethod
    def iota1(C: MtcData, center: CenterData) -> int:
        """sum over i and c of mult_c N_{i c}^i"""
        return sum(n * C.N(i, c, i) for i in C.labels for c, n in center.multiplicities.items())

    @staticmethod
    def iota1_homspace(C: MtcData, center: CenterData) -> int:
        """Same count through hom spaces: sum over i of dim Hom(i (x) Z, i)"""
        Z = center.obj
        return sum(h.hom_dim(C, [SSObject.simple(i), Z], [SSObject.simple(i)]) for i in C.labels)

    def t3_invariants(self, A: FrobeniusAlgebra, with_full_center: bool = True) -> T3Out:
        C = A.category
        size = CycScalar.from_int(C.size)
        centers = {side: self.center_projector(A, side) for side in ("left", "right")}
        iota1 = {}
        for side, center in centers.items():
            value = self.iota1(C, center)
            if value != self.iota1_homspace(C, center):
                raise VerificationError(f"the two counts of iota1 disagree for the {side} center of {A.name}")
            iota1[side] = value
        full = self.full_center_matrix(A) if with_full_center else None
        return T3Out(
            algebra=A.name,
            iota0_plus=render_value(centers["left"].qdim * size),
            iota0_minus=render_value(centers["right"].qdim * size),
            iota1_plus=iota1["left"],
            iota1_minus=iota1["right"],
            iota2=full.trace if full else 0,
            center={side: c.to_out() for side, c in centers.items()},
            convention=full.convention() if full else None,
        )

    def sphere_embedding_invariant(self, A: FrobeniusAlgebra, manifold: str) -> SphereInvariantOut:
        """dim(A) times Z^RT of the ambient manifold"""
        if manifold not in CATALOG:
            raise InvalidInputError(f"manifold {manifold!r} is not in the catalog", {"catalog": sorted(CATALOG)})
        value = frobenius_service.dimension(A) * CATALOG[manifold](A.category)
        return SphereInvariantOut(algebra=A.name, manifold=manifold, value=render_value(value))

    # -- table -------------------------------------------------------------

    def table(self, C: MtcData, algebras: Sequence[Tuple[str, Optional[FrobeniusAlgebra]]],
              seed: Optional[int] = None, diagnostics: Optional[Dict[str, List[str]]] = None) -> TableOut:
        """Rows iota0, iota1 (plus and minus) and iota2; one column per algebra.

        A column whose algebra is missing or whose invariants fail is emitted
        with null values and its diagnostics; the table is then not passed.
        """
        diagnostics = {name: list(lines) for name, lines in (diagnostics or {}).items()}

        def column(item: Tuple[str, Optional[FrobeniusAlgebra]]) -> Optional[T3Out]:
            name, A = item
            if A is None:
                diagnostics.setdefault(name, ["no algebra"])
                return None
            try:
                return self.t3_invariants(A)
            except MtcdefError as e:
                console.failure(f"T3 invariants of {name} failed: {e.message}")
                diagnostics.setdefault(name, []).append(e.message)
                return None

        with ThreadPoolExecutor(max_workers=max(self.parallelism, 1)) as pool:
            results = list(pool.map(column, algebras))

        def values(field_name: str) -> List[Optional[ReportValue]]:
            return [getattr(r, field_name) if r is not None else None for r in results]

        rows = [
            TableRow(invariant="iota0", values=values("iota0_plus"), minus=values("iota0_minus")),
            TableRow(invariant="iota1", values=values("iota1_plus"), minus=values("iota1_minus")),
            TableRow(invariant="iota2", values=values("iota2")),
        ]
        return TableOut(category=C.name, columns=[name for name, _ in algebras], rows=rows, seed=seed,
                        diagnostics=diagnostics, passed=all(r is not None for r in results))

    def standard_algebras(self, C: MtcData) -> Tuple[List[Tuple[str, Optional[FrobeniusAlgebra]]], Dict[str, List[str]]]:
        """Trivial, D-series and E7 algebras of sl(2)_16, in table order.

        An algebra the solver does not find is returned as None together with
        the solver diagnostics under its column name.
        """
        if C.size != 17:
            raise InvalidInputError("the A17/D10/E7 table lives at level 16", {"category": C.name})
        found: List[Tuple[str, Optional[FrobeniusAlgebra]]] = [("A17", frobenius_service.trivial_algebra(C))]
        diagnostics: Dict[str, List[str]] = {}
        for name, text in (("D10", "0+16"), ("E7", "0+8+16")):
            outcome = frobenius_service.solve_haploid_algebra(C, SSObject.parse(text))
            if not outcome.algebras:
                console.failure(f"No algebra found on {text}")
                diagnostics[name] = [f"no algebra found on {text}"] + list(outcome.diagnostics)
                found.append((name, None))
                continue
            A = outcome.algebras[0]
            A.name = name
            found.append((name, A))
        return found, diagnostics


def _matmul(X: List[List[CycScalar]], Y: List[List[CycScalar]]) -> List[List[CycScalar]]:
    n = len(Y[0]) if Y else 0
    out = []
    for row in X:
        line = []
        for j in range(n):
            total = ZERO
            for a, y in zip(row, Y):
                if not a.is_zero() and not y[j].is_zero():
                    total = total + a * y[j]
            line.append(total)
        out.append(line)
    return out


invariant_service = InvariantService()

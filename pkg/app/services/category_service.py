"""
Category Service

Skeletal modular tensor categories: fusion rings, F- and R-symbols, twists and
quantum dimensions, the sl(2)_k generator, and the axiom verifiers.

Only multiplicity-free categories are supported: every fusion coefficient
N_ab^c is 0 or 1, so F- and R-symbols carry no multiplicity indices.

Conventions:
    ((a b)_e c)_d = sum_f F^{abc}_{d;ef} (a (b c)_f)_d
    c_{a,b} on (a b)_c = R^{ab}_c (b a)_c
"""

import json
import random
from pathlib import Path
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from cachetools import cached

from ..core.cache import category_cache, verified_store
from ..core.console import console
from ..core.exceptions import InvalidInputError, VerificationError
from ..models.category_schemas import AnomalyOut, CategoryFile, FEntry, REntry, SmatrixOut
from ..models.report_schemas import CheckFailure, ReportBundle, VerificationReport
from ..models.scalar_schemas import CycScalarSchema, render_value
from .cyclotomic_service import ONE, ZERO, CycScalar, cyclotomic_service

Label = int
SixTuple = Tuple[int, int, int, int, int, int]


class FusionRing:
    """Labels, duality and a 0/1 fusion table with unit label 0"""

    def __init__(self, labels: Sequence[str], dual: Sequence[int], triples: Iterable[Tuple[int, int, int]]):
        self.labels = list(labels)
        self.size = len(self.labels)
        self.dual = list(dual)
        self._triples = set(tuple(t) for t in triples)
        channels: Dict[Tuple[int, int], List[int]] = {(a, b): [] for a in range(self.size) for b in range(self.size)}
        for a, b, c in sorted(self._triples):
            channels[(a, b)].append(c)
        self._channels = {key: tuple(value) for key, value in channels.items()}

    def channels(self, a: Label, b: Label) -> Tuple[int, ...]:
        return self._channels[(a, b)]

    def N(self, a: Label, b: Label, c: Label) -> int:
        return 1 if (a, b, c) in self._triples else 0

    def triples(self) -> List[Tuple[int, int, int]]:
        return sorted(self._triples)

    def check(self) -> List[str]:
        """Unit, duality and associativity of the fusion table"""
        problems = []
        labels = range(self.size)
        for j in labels:
            if self.channels(0, j) != (j,) or self.channels(j, 0) != (j,):
                problems.append(f"unit fusion fails for label {j}")
        for i in labels:
            for j in labels:
                if self.N(i, j, 0) != (1 if j == self.dual[i] else 0):
                    problems.append(f"duality fusion fails for ({i}, {j})")
        for i in labels:
            for j in labels:
                for k in labels:
                    for l in labels:
                        left = sum(self.N(e, k, l) for e in self.channels(i, j))
                        right = sum(self.N(i, f, l) for f in self.channels(j, k))
                        if left != right:
                            problems.append(f"fusion associativity fails for ({i}, {j}, {k}, {l})")
        return problems


class MtcData:
    """Skeletal modular tensor category with lazily memoized symbols"""

    def __init__(
        self,
        name: str,
        ring: FusionRing,
        theta: Sequence[CycScalar],
        qdim: Sequence[CycScalar],
        F: Optional[Dict[SixTuple, CycScalar]] = None,
        R: Optional[Dict[Tuple[int, int, int], CycScalar]] = None,
        f_provider: Optional[Callable[..., CycScalar]] = None,
        finv_provider: Optional[Callable[..., CycScalar]] = None,
        r_provider: Optional[Callable[..., CycScalar]] = None,
    ):
        self.name = name
        self.ring = ring
        self.theta = list(theta)
        self.qdim = list(qdim)
        self._F = dict(F or {})
        self._R = dict(R or {})
        self._f_provider = f_provider
        self._finv_provider = finv_provider
        self._r_provider = r_provider
        self._Finv: Dict[SixTuple, CycScalar] = {}
        self._Rinv: Dict[Tuple[int, int, int], CycScalar] = {}
        self._theta_inv = [None] * ring.size

    # -- labels ------------------------------------------------------------

    @property
    def size(self) -> int:
        return self.ring.size

    @property
    def labels(self) -> range:
        return range(self.ring.size)

    def dual(self, a: Label) -> Label:
        return self.ring.dual[a]

    def channels(self, a: Label, b: Label) -> Tuple[int, ...]:
        return self.ring.channels(a, b)

    def N(self, a: Label, b: Label, c: Label) -> int:
        return self.ring.N(a, b, c)

    def f_admissible(self, a, b, c, d, e, f) -> bool:
        N = self.ring.N
        return bool(N(a, b, e) and N(e, c, d) and N(b, c, f) and N(a, f, d))

    def left_channels(self, a, b, c, d) -> List[int]:
        """Intermediate charges e of ((a b)_e c)_d"""
        return [e for e in self.channels(a, b) if self.N(e, c, d)]

    def right_channels(self, a, b, c, d) -> List[int]:
        """Intermediate charges f of (a (b c)_f)_d"""
        return [f for f in self.channels(b, c) if self.N(a, f, d)]

    # -- symbols -----------------------------------------------------------

    def F(self, a, b, c, d, e, f) -> CycScalar:
        key = (a, b, c, d, e, f)
        value = self._F.get(key)
        if value is not None:
            return value
        if not self.f_admissible(*key) or self._f_provider is None:
            return ZERO
        value = self._f_provider(*key)
        self._F[key] = value
        return value

    def Finv(self, a, b, c, d, f, e) -> CycScalar:
        """Inverse F-matrix entry: sum_f F^{abc}_{d;ef} Finv^{abc}_{d;fe'} = delta_{ee'}"""
        key = (a, b, c, d, f, e)
        value = self._Finv.get(key)
        if value is not None:
            return value
        if not self.f_admissible(a, b, c, d, e, f):
            return ZERO
        if self._finv_provider is not None:
            value = self._finv_provider(self, a, b, c, d, f, e)
            self._Finv[key] = value
            return value
        self._invert_block(a, b, c, d)
        return self._Finv.get(key, ZERO)

    def _invert_block(self, a, b, c, d):
        es = self.left_channels(a, b, c, d)
        fs = self.right_channels(a, b, c, d)
        if len(es) != len(fs):
            raise VerificationError(f"F-block ({a},{b},{c},{d}) is not square")
        n = len(es)
        augmented = [[self.F(a, b, c, d, e, f) for f in fs] + [ONE if i == j else ZERO for j in range(n)]
                     for i, e in enumerate(es)]
        reduced, pivots = cyclotomic_service.rref(augmented)
        if pivots[:n] != list(range(n)) or len(pivots) < n:
            raise VerificationError(f"F-block ({a},{b},{c},{d}) is singular")
        # reduced[:, n:] is the inverse, rows indexed by f, columns by e
        for row, f in zip(reduced, fs):
            for j, e in enumerate(es):
                self._Finv[(a, b, c, d, f, e)] = row[n + j]

    def R(self, a, b, c) -> CycScalar:
        key = (a, b, c)
        value = self._R.get(key)
        if value is not None:
            return value
        if not self.N(a, b, c) or self._r_provider is None:
            return ZERO
        value = self._r_provider(a, b, c)
        self._R[key] = value
        return value

    def Rinv(self, a, b, c) -> CycScalar:
        key = (a, b, c)
        value = self._Rinv.get(key)
        if value is None:
            value = self.R(a, b, c).inv()
            self._Rinv[key] = value
        return value

    def theta_inv(self, a: Label) -> CycScalar:
        if self._theta_inv[a] is None:
            self._theta_inv[a] = self.theta[a].inv()
        return self._theta_inv[a]

    # -- enumeration -------------------------------------------------------

    def admissible_six(self) -> Iterator[SixTuple]:
        for a in self.labels:
            for b in self.labels:
                for c in self.labels:
                    for d in self.labels:
                        for e in self.left_channels(a, b, c, d):
                            for f in self.right_channels(a, b, c, d):
                                yield (a, b, c, d, e, f)

    def perturbed(self, kind: str, key: Tuple[int, ...], delta: CycScalar = ONE) -> "MtcData":
        """Copy with one F, R, theta or qdim entry shifted by delta"""
        F = dict(self._F)
        R = dict(self._R)
        theta = list(self.theta)
        qdim = list(self.qdim)
        if kind == "F":
            F[key] = self.F(*key) + delta
        elif kind == "R":
            R[key] = self.R(*key) + delta
        elif kind == "theta":
            theta[key[0]] = theta[key[0]] + delta
        elif kind == "qdim":
            qdim[key[0]] = qdim[key[0]] + delta
        else:
            raise InvalidInputError(f"unknown symbol kind '{kind}'")
        return MtcData(f"{self.name}~{kind}{list(key)}", self.ring, theta, qdim, F, R,
                       f_provider=self._f_provider, r_provider=self._r_provider)


class SL2kSymbols:
    """q-number data and symbol formulas for sl(2)_k in a rational gauge"""

    def __init__(self, k: int):
        self.k = k
        self.conductor = 4 * (k + 2)
        self.qint = [ZERO] + [self._q_integer(n) for n in range(1, k + 3)]
        self.fact = [ONE]
        for n in range(1, k + 2):
            self.fact.append(self.fact[-1] * self.qint[n])
        inv = [ONE] * (k + 2)
        inv[k + 1] = self.fact[k + 1].inv()
        for n in range(k + 1, 0, -1):
            inv[n - 1] = inv[n] * self.qint[n]
        self.invfact = inv

    def _q_integer(self, n: int) -> CycScalar:
        # [n] with q = zeta_N^2
        return CycScalar.from_terms(self.conductor, [(2 * (n - 1 - 2 * m), 1) for m in range(n)])

    def inv_qint(self, n: int) -> CycScalar:
        return self.fact[n - 1] * self.invfact[n]

    def delta_sq(self, x, y, z) -> CycScalar:
        fact, invfact = self.fact, self.invfact
        return fact[(x + y - z) // 2] * fact[(x - y + z) // 2] * fact[(-x + y + z) // 2] * invfact[(x + y + z) // 2 + 1]

    def delta_sq_inv(self, x, y, z) -> CycScalar:
        fact, invfact = self.fact, self.invfact
        return invfact[(x + y - z) // 2] * invfact[(x - y + z) // 2] * invfact[(-x + y + z) // 2] * fact[(x + y + z) // 2 + 1]

    def F(self, a, b, c, d, e, f) -> CycScalar:
        tops = ((a + b + e) // 2, (e + c + d) // 2, (b + c + f) // 2, (a + f + d) // 2)
        bottoms = ((a + b + c + d) // 2, (a + c + e + f) // 2, (b + d + e + f) // 2)
        total = ZERO
        for z in range(max(tops), min(bottoms) + 1):
            if z + 1 > self.k + 1:
                continue
            term = self.fact[z + 1]
            for t in tops:
                term = term * self.invfact[z - t]
            for s in bottoms:
                term = term * self.invfact[s - z]
            total = total - term if z % 2 else total + term
        if total.is_zero():
            return ZERO
        value = self.qint[f + 1] * self.delta_sq(b, c, f) * self.delta_sq(a, f, d) * total
        return -value if ((a + b + c + d) // 2) % 2 else value

    def Finv(self, category: MtcData, a, b, c, d, f, e) -> CycScalar:
        value = category.F(a, b, c, d, e, f)
        if value.is_zero():
            return ZERO
        return (value * self.qint[e + 1] * self.delta_sq(a, b, e) * self.delta_sq(e, c, d)
                * self.inv_qint(f + 1) * self.delta_sq_inv(b, c, f) * self.delta_sq_inv(a, f, d))

    def R(self, a, b, c) -> CycScalar:
        twice = c * (c + 2) - a * (a + 2) - b * (b + 2)
        value = CycScalar.root_of_unity(self.conductor, twice // 2)
        return -value if ((c - a - b) // 2) % 2 else value

    def theta(self, i: int) -> CycScalar:
        return CycScalar.root_of_unity(self.conductor, i * (i + 2))

    def fusion_triples(self) -> List[Tuple[int, int, int]]:
        k = self.k
        return [(i, j, l) for i in range(k + 1) for j in range(k + 1) for l in range(k + 1)
                if abs(i - j) <= l <= min(i + j, 2 * k - i - j) and (i + j + l) % 2 == 0]


@cached(cache=category_cache)
def gen_sl2k(k: int) -> MtcData:
    """The sl(2)_k category with labels 0..k"""
    if k < 1:
        raise InvalidInputError("level must be at least 1", {"level": k})
    symbols = SL2kSymbols(k)
    ring = FusionRing([str(i) for i in range(k + 1)], list(range(k + 1)), symbols.fusion_triples())
    console.info(f"Generated sl(2)_{k} data over Q(zeta_{symbols.conductor})")
    return MtcData(
        f"sl2_{k}",
        ring,
        [symbols.theta(i) for i in range(k + 1)],
        [symbols.qint[i + 1] for i in range(k + 1)],
        f_provider=symbols.F,
        finv_provider=symbols.Finv,
        r_provider=symbols.R,
    )


def trivial_category() -> MtcData:
    ring = FusionRing(["0"], [0], [(0, 0, 0)])
    return MtcData("trivial", ring, [ONE], [ONE], F={(0, 0, 0, 0, 0, 0): ONE}, R={(0, 0, 0): ONE})


def _failure(check: str, labels: Sequence[int], lhs: CycScalar, rhs: CycScalar, message: str = "") -> CheckFailure:
    return CheckFailure(check=check, labels=list(labels), lhs=render_value(lhs), rhs=render_value(rhs), message=message)


class CategoryService:
    """Verifiers, S/T matrices and file handling for MtcData"""

    # -- pentagon ----------------------------------------------------------

    @staticmethod
    def pentagon_sides(C: MtcData, a, b, c, d, e, f, g, k, l) -> Tuple[CycScalar, CycScalar]:
        """Both sides of the pentagon for (((ab)_f c)_g d)_e -> (a (b (cd)_l)_k)_e"""
        lhs = C.F(f, c, d, e, g, l) * C.F(a, b, l, e, f, k)
        rhs = ZERO
        for h in C.channels(b, c):
            x = C.F(a, b, c, g, f, h)
            if x.is_zero():
                continue
            y = C.F(a, h, d, e, g, k)
            if y.is_zero():
                continue
            rhs = rhs + x * y * C.F(b, c, d, k, h, l)
        return lhs, rhs

    @staticmethod
    def _pentagon_instances(C: MtcData) -> Iterator[Tuple[int, ...]]:
        for a in C.labels:
            for b in C.labels:
                for c in C.labels:
                    for d in C.labels:
                        for f in C.channels(a, b):
                            for g in C.channels(f, c):
                                for e in C.channels(g, d):
                                    for l in C.channels(c, d):
                                        for k in C.channels(b, l):
                                            if C.N(a, k, e):
                                                yield (a, b, c, d, e, f, g, k, l)

    @staticmethod
    def _sample_pentagon_instance(C: MtcData, rng: random.Random) -> Tuple[int, ...]:
        n = C.size
        while True:
            a, b, c, d = (rng.randrange(n) for _ in range(4))
            f = rng.choice(C.channels(a, b))
            g = rng.choice(C.channels(f, c))
            e = rng.choice(C.channels(g, d))
            l = rng.choice(C.channels(c, d))
            ks = [k for k in C.channels(b, l) if C.N(a, k, e)]
            if ks:
                return (a, b, c, d, e, f, g, rng.choice(ks), l)

    def _unit_failure(self, C: MtcData) -> Optional[CheckFailure]:
        for (a, b, c, d, e, f) in C.admissible_six():
            if 0 in (a, b, c):
                value = C.F(a, b, c, d, e, f)
                if value != ONE:
                    return _failure("pentagon", [a, b, c, d, e, f], value, ONE, "F-symbol with a unit leg must be 1")
        return None

    def verify_pentagon(self, C: MtcData, mode: str = "full", samples: int = 100000, seed: int = 1) -> VerificationReport:
        console.check(f"Pentagon check on {C.name} ({mode})")
        failure = self._unit_failure(C) if mode == "full" else None
        count = 0
        if failure is None:
            if mode == "full":
                instances = self._pentagon_instances(C)
                total = None
            else:
                rng = random.Random(seed)
                instances = (self._sample_pentagon_instance(C, rng) for _ in range(samples))
                total = samples
            for labels in console.track(instances, desc="pentagon", total=total):
                count += 1
                lhs, rhs = self.pentagon_sides(C, *labels)
                if lhs != rhs:
                    failure = _failure("pentagon", labels, lhs, rhs, "labels are (a,b,c,d,e,f,g,k,l)")
                    break
        report = VerificationReport(check="pentagon", passed=failure is None, mode=mode,
                                    seed=seed if mode == "sampled" else None, instances=count, failure=failure)
        self._announce(report, C)
        return report

    # -- hexagon -----------------------------------------------------------

    @staticmethod
    def hexagon_sides(C: MtcData, a, b, c, d, e, g, inverse: bool = False) -> Tuple[CycScalar, CycScalar]:
        """Hexagon for c_{a, b(x)c}; inverse=True uses the reverse braiding c^{-1}_{-, a}"""
        if inverse:
            rv = lambda x, y, z: C.Rinv(y, x, z)
        else:
            rv = C.R
        lhs = ZERO
        for f in C.right_channels(a, b, c, d):
            x = C.F(a, b, c, d, e, f)
            if x.is_zero():
                continue
            y = C.F(b, c, a, d, f, g)
            if y.is_zero():
                continue
            lhs = lhs + x * rv(a, f, d) * y
        rhs = rv(a, b, e) * C.F(b, a, c, d, e, g) * rv(a, c, g)
        return lhs, rhs

    def verify_hexagon(self, C: MtcData) -> VerificationReport:
        console.check(f"Hexagon check on {C.name}")
        failure = None
        count = 0
        for b in C.labels:
            for unit_side in (C.R(0, b, b), C.R(b, 0, b)):
                if unit_side != ONE:
                    failure = _failure("hexagon", [0, b, b], unit_side, ONE, "braiding with the unit must be 1")
                    break
            if failure:
                break
        labels = C.labels
        for a in labels if failure is None else ():
            for b in labels:
                for c in labels:
                    for d in labels:
                        for e in C.left_channels(a, b, c, d):
                            for g in C.channels(a, c):
                                if not C.N(b, g, d):
                                    continue
                                for inverse in (False, True):
                                    count += 1
                                    lhs, rhs = self.hexagon_sides(C, a, b, c, d, e, g, inverse)
                                    if lhs != rhs:
                                        failure = _failure("hexagon", [a, b, c, d, e, g], lhs, rhs,
                                                           "inverse braiding" if inverse else "braiding")
                                        break
                                if failure:
                                    break
                            if failure:
                                break
                        if failure:
                            break
                    if failure:
                        break
                if failure:
                    break
            if failure:
                break
        report = VerificationReport(check="hexagon", passed=failure is None, instances=count, failure=failure)
        self._announce(report, C)
        return report

    # -- ribbon ------------------------------------------------------------

    def verify_ribbon(self, C: MtcData) -> VerificationReport:
        console.check(f"Ribbon check on {C.name}")
        failure = None
        count = 0
        if C.theta[0] != ONE:
            failure = _failure("ribbon", [0], C.theta[0], ONE, "unit twist must be 1")
        for i in C.labels if failure is None else ():
            j = C.dual(i)
            if C.theta[i] != C.theta[j]:
                failure = _failure("ribbon", [i, j], C.theta[i], C.theta[j], "twist of dual differs")
            elif C.qdim[i] != C.qdim[j]:
                failure = _failure("ribbon", [i, j], C.qdim[i], C.qdim[j], "dimension of dual differs")
            elif C.qdim[i].is_zero():
                failure = _failure("ribbon", [i], C.qdim[i], ONE, "dimension is zero")
            else:
                pivotal = C.qdim[i] * C.qdim[i] * C.F(i, j, i, i, 0, 0) * C.F(j, i, j, j, 0, 0)
                if pivotal != ONE:
                    failure = _failure("ribbon", [i], pivotal, ONE, "dimension inconsistent with F-symbols")
            if failure:
                break
        for a, b, c in C.ring.triples() if failure is None else ():
            count += 1
            lhs = C.theta[c]
            rhs = C.theta[a] * C.theta[b] * C.R(b, a, c) * C.R(a, b, c)
            if lhs != rhs:
                failure = _failure("ribbon", [a, b, c], lhs, rhs, "twist must equal the double braiding")
                break
        report = VerificationReport(check="ribbon", passed=failure is None, instances=count, failure=failure)
        self._announce(report, C)
        return report

    # -- S and T -----------------------------------------------------------

    def smatrix(self, C: MtcData) -> List[List[CycScalar]]:
        """Unnormalized Hopf-link values: sum_c N_ij^c theta_c / (theta_i theta_j) d_c"""
        matrix = []
        for i in C.labels:
            row = []
            for j in C.labels:
                total = ZERO
                for c in C.channels(i, j):
                    total = total + C.theta[c] * C.qdim[c]
                row.append(total * C.theta_inv(i) * C.theta_inv(j))
            matrix.append(row)
        return matrix

    @staticmethod
    def tmatrix(C: MtcData) -> List[List[CycScalar]]:
        return [[C.theta[i] if i == j else ZERO for j in C.labels] for i in C.labels]

    def verify_modularity(self, C: MtcData) -> VerificationReport:
        console.check(f"Modularity check on {C.name}")
        det = cyclotomic_service.determinant(self.smatrix(C))
        failure = None
        if det.is_zero():
            failure = _failure("modularity", [], det, ONE, "S-matrix is singular")
        report = VerificationReport(check="modularity", passed=failure is None, instances=1, failure=failure,
                                    details={"determinant_nonzero": not det.is_zero()})
        self._announce(report, C)
        return report

    def smatrix_out(self, C: MtcData) -> SmatrixOut:
        S = self.smatrix(C)
        det = cyclotomic_service.determinant(S)
        return SmatrixOut(
            category=C.name,
            S=[[CycScalarSchema.from_scalar(x) for x in row] for row in S],
            T=[CycScalarSchema.from_scalar(C.theta[i]) for i in C.labels],
            determinant_nonzero=not det.is_zero(),
        )

    def anomaly_check(self, C: MtcData) -> AnomalyOut:
        """Gauss-type sums weighted by d_i and by d_i^2, reported side by side"""
        p_plus = p_minus = ZERO
        p_plus_sq = p_minus_sq = ZERO
        for i in C.labels:
            d = C.qdim[i]
            p_plus = p_plus + C.theta[i] * d
            p_minus = p_minus + C.theta_inv(i) * d
            p_plus_sq = p_plus_sq + C.theta[i] * d * d
            p_minus_sq = p_minus_sq + C.theta_inv(i) * d * d
        return AnomalyOut(
            category=C.name,
            p_plus=CycScalarSchema.from_scalar(p_plus),
            p_minus=CycScalarSchema.from_scalar(p_minus),
            anomaly_free_linear=p_plus == p_minus,
            p_plus_squared=CycScalarSchema.from_scalar(p_plus_sq),
            p_minus_squared=CycScalarSchema.from_scalar(p_minus_sq),
            anomaly_free_squared=p_plus_sq == p_minus_sq,
        )

    # -- bundles -----------------------------------------------------------

    def verify_all(self, C: MtcData, checks: Sequence[str] = ("pentagon", "hexagon", "ribbon", "modularity"),
                   mode: str = "sampled", samples: int = 100000, seed: int = 1) -> ReportBundle:
        reports = []
        for check in checks:
            if check == "pentagon":
                reports.append(self.verify_pentagon(C, mode, samples, seed))
            elif check == "hexagon":
                reports.append(self.verify_hexagon(C))
            elif check == "ribbon":
                reports.append(self.verify_ribbon(C))
            elif check == "modularity":
                reports.append(self.verify_modularity(C))
            else:
                raise InvalidInputError(f"unknown check '{check}'")
        return ReportBundle(category=C.name, passed=all(r.passed for r in reports),
                            seed=seed if mode == "sampled" else None, reports=reports)

    @staticmethod
    def _announce(report: VerificationReport, C: MtcData):
        if report.passed:
            console.success(f"{report.check} passed on {C.name} ({report.instances} instances)")
        else:
            console.failure(f"{report.check} failed on {C.name} at labels {report.failure.labels}")

    # -- files -------------------------------------------------------------

    @staticmethod
    def to_file(C: MtcData) -> CategoryFile:
        F = []
        for key in C.admissible_six():
            value = C.F(*key)
            if not value.is_zero():
                F.append(FEntry(l=key, v=CycScalarSchema.from_scalar(value, with_float=False)))
        R = [REntry(l=t, v=CycScalarSchema.from_scalar(C.R(*t), with_float=False)) for t in C.ring.triples()]
        return CategoryFile(
            name=C.name,
            labels=C.ring.labels,
            unit=0,
            dual=C.ring.dual,
            fusion=C.ring.triples(),
            F=F,
            R=R,
            theta=[CycScalarSchema.from_scalar(x, with_float=False) for x in C.theta],
            qdim=[CycScalarSchema.from_scalar(x, with_float=False) for x in C.qdim],
        )

    @staticmethod
    def from_file(data: CategoryFile) -> MtcData:
        if data.unit != 0:
            raise InvalidInputError("the unit label must have index 0", {"unit": data.unit})
        size = len(data.labels)
        if len(data.dual) != size or len(data.theta) != size or len(data.qdim) != size:
            raise InvalidInputError("label-indexed arrays have inconsistent lengths")
        for triple in data.fusion:
            if not all(0 <= x < size for x in triple):
                raise InvalidInputError("fusion triple out of range", {"triple": list(triple)})
        ring = FusionRing(data.labels, data.dual, data.fusion)
        problems = ring.check()
        if problems:
            raise InvalidInputError(f"invalid fusion ring: {problems[0]}", {"problems": problems[:10]})
        F = {tuple(entry.l): entry.v.to_scalar() for entry in data.F}
        R = {tuple(entry.l): entry.v.to_scalar() for entry in data.R}
        return MtcData(data.name, ring, [x.to_scalar() for x in data.theta], [x.to_scalar() for x in data.qdim], F, R)

    def dump_category(self, C: MtcData, path: Path):
        path = Path(path)
        path.write_text(self.to_file(C).model_dump_json(indent=2, by_alias=True))
        console.success(f"Wrote {C.name} to {path}")

    def load_category(self, path: Path, trust: bool = False, samples: int = 1000, seed: int = 1) -> MtcData:
        """Load a category file; re-verifies unless trusted or cached as verified"""
        path = Path(path)
        try:
            text = path.read_text()
            data = CategoryFile.model_validate(json.loads(text))
        except (OSError, ValueError) as e:
            raise InvalidInputError(f"cannot read category file {path}: {e}")
        C = self.from_file(data)
        if trust:
            console.warning(f"Skipping verification of {C.name} (--trust)")
            return C
        digest = verified_store.content_hash(text)
        if verified_store.is_verified(digest):
            console.info(f"{C.name} found in verified cache")
            return C
        bundle = self.verify_all(C, ("pentagon", "hexagon", "ribbon"), mode="sampled", samples=samples, seed=seed)
        if not bundle.passed:
            raise VerificationError(f"category file {path} failed verification", bundle)
        verified_store.mark_verified(digest)
        return C


category_service = CategoryService()

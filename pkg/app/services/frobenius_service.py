"""
Frobenius Service

Symmetric Delta-separable Frobenius algebras inside a category: structure
maps, an axiom checker, the standard constructions (trivial, opposite,
tensor product) and a search for haploid algebras on a given object.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import sympy

from ..core.console import console
from ..core.exceptions import InvalidInputError, TypeMismatchError
from ..models.algebra_schemas import AlgebraReport, AxiomFailure
from .category_service import MtcData
from .cyclotomic_service import ONE, ZERO, CycPoly, CycScalar, cyclotomic_service
from .homspace_service import Morphism, SSObject, Word, homspace_service

h = homspace_service


class FrobeniusAlgebra:
    """An algebra object with multiplication, unit, comultiplication and counit"""

    def __init__(self, name: str, category: MtcData, word: Sequence[SSObject],
                 mu: Morphism, eta: Morphism, delta: Morphism, eps: Morphism):
        self.name = name
        self.category = category
        self.word: Word = tuple(word)
        self.mu = mu
        self.eta = eta
        self.delta = delta
        self.eps = eps
        self.flags: Dict[str, bool] = {}

    @property
    def obj(self) -> SSObject:
        """Underlying object when the algebra sits on a single factor"""
        if len(self.word) != 1:
            raise InvalidInputError("algebra object is a tensor word", {"algebra": self.name})
        return self.word[0]

    def __repr__(self) -> str:
        return f"FrobeniusAlgebra({self.name!r}, {list(self.word)})"


@dataclass
class SolverOutcome:
    algebras: List[FrobeniusAlgebra] = field(default_factory=list)
    gauge: List[Tuple[int, int, int]] = field(default_factory=list)
    diagnostics: List[str] = field(default_factory=list)


class FrobeniusService:
    """Construction, verification and search of Frobenius algebras"""

    MAX_GAUGES = 32

    # -- verification ------------------------------------------------------

    def check_algebra(self, A: FrobeniusAlgebra) -> AlgebraReport:
        C, W = A.category, A.word
        for name, m, dom, cod in (("mu", A.mu, W + W, W), ("eta", A.eta, (), W),
                                  ("delta", A.delta, W, W + W), ("eps", A.eps, W, ())):
            if m.dom != tuple(dom) or m.cod != tuple(cod):
                raise TypeMismatchError(f"{name} has the wrong type", (m.dom, m.cod), (dom, cod))

        failures: List[AxiomFailure] = []

        def holds(axiom: str, lhs: Morphism, rhs: Morphism) -> bool:
            if lhs == rhs:
                return True
            failures.append(AxiomFailure(axiom=axiom, message=f"{lhs!r} != {rhs!r}"))
            return False

        ident = h.identity(C, W)
        mu, delta = A.mu, A.delta
        left_unit = holds("left unit", h.compose(mu, h.embed(A.eta, right=W)), ident)
        right_unit = holds("right unit", h.compose(mu, h.embed(A.eta, left=W)), ident)
        assoc = holds("associativity", h.compose(mu, h.embed(mu, right=W)), h.compose(mu, h.embed(mu, left=W)))
        left_counit = holds("left counit", h.compose(h.embed(A.eps, right=W), delta), ident)
        right_counit = holds("right counit", h.compose(h.embed(A.eps, left=W), delta), ident)
        coassoc = holds("coassociativity", h.compose(h.embed(delta, right=W), delta),
                        h.compose(h.embed(delta, left=W), delta))
        middle = h.compose(delta, mu)
        frob_left = holds("frobenius (left)", h.compose(h.embed(mu, right=W), h.embed(delta, left=W)), middle)
        frob_right = holds("frobenius (right)", h.compose(h.embed(mu, left=W), h.embed(delta, right=W)), middle)

        pairing = h.compose(A.eps, mu)
        twisted = h.compose_all(pairing, h.braid_block(C, W, W), h.embed(h.twist(C, W), left=W))
        flags = {
            "unit": left_unit and right_unit,
            "associative": assoc,
            "counit": left_counit and right_counit,
            "coassociative": coassoc,
            "frobenius": frob_left and frob_right,
            "symmetric": twisted == pairing,
            "delta_separable": h.compose(mu, delta) == ident,
            "commutative": h.compose(mu, h.braid_block(C, W, W)) == mu,
            "haploid": h.hom_dim(C, (), W) == 1,
        }
        flags["is_frobenius"] = all(flags[k] for k in ("unit", "associative", "counit", "coassociative", "frobenius"))
        A.flags = flags
        return AlgebraReport(algebra=A.name, passed=flags["is_frobenius"], flags=flags, failures=failures)

    def is_symmetric_special(self, A: FrobeniusAlgebra) -> bool:
        flags = A.flags or self.check_algebra(A).flags
        return flags["is_frobenius"] and flags["symmetric"] and flags["delta_separable"]

    def dimension(self, A: FrobeniusAlgebra) -> CycScalar:
        return h.qtrace(h.identity(A.category, A.word))

    # -- constructions -----------------------------------------------------

    def trivial_algebra(self, C: MtcData) -> FrobeniusAlgebra:
        unit = h.identity(C, ())
        return FrobeniusAlgebra("1", C, (), unit, unit, unit, unit)

    def opposite(self, A: FrobeniusAlgebra) -> FrobeniusAlgebra:
        C, W = A.category, A.word
        mu = h.compose(A.mu, h.braid_block(C, W, W))
        delta = h.compose(h.braid_block(C, W, W, inverse=True), A.delta)
        return FrobeniusAlgebra(f"{A.name}^op", C, W, mu, A.eta, delta, A.eps)

    def tensor_algebra(self, A: FrobeniusAlgebra, B: FrobeniusAlgebra) -> FrobeniusAlgebra:
        """A (x) B with the braiding c_{B,A} in the middle of the product"""
        if A.category is not B.category:
            raise TypeMismatchError("algebras live in different categories", A.category.name, B.category.name)
        C, U, V = A.category, A.word, B.word
        swap = h.embed(h.braid_block(C, V, U), left=U, right=V)
        mu = h.compose(h.tensor(A.mu, B.mu), swap)
        unswap = h.embed(h.braid_block(C, U, V, inverse=True), left=U, right=V)
        delta = h.compose(unswap, h.tensor(A.delta, B.delta))
        return FrobeniusAlgebra(f"{A.name}(x){B.name}", C, U + V, mu, h.tensor(A.eta, B.eta),
                                delta, h.tensor(A.eps, B.eps))

    def from_structure_constants(self, C: MtcData, obj: SSObject, m: Dict[Tuple[int, int, int], CycScalar],
                                 name: str = "A") -> Optional[FrobeniusAlgebra]:
        """Algebra on a multiplicity-free object from m(a,b;c), normalized so that mu o delta = id"""
        W = (obj,)
        S = obj.labels

        mu_cols = {}
        for a in S:
            for b in S:
                for c in C.channels(a, b):
                    if a == 0 or b == 0:
                        value = ONE if c == a + b else ZERO
                    else:
                        value = m.get((a, b, c), ZERO)
                    if c in S and not value.is_zero():
                        mu_cols[(((a, 0), (b, 0)), (a, c))] = {(((c, 0),), (c,)): value}
        mu = Morphism(C, W + W, W, mu_cols)
        eta = Morphism(C, (), W, {((), ()): {(((0, 0),), (0,)): ONE}})
        eps = Morphism(C, W, (), {(((0, 0),), (0,)): {((), ()): ONE}})
        pairing = h.compose(eps, mu)

        copairing = {}
        for a in S:
            ad = C.dual(a)
            if ad not in S:
                return None
            unit_weight = Morphism(C, (), W + W, {((), ()): {(((ad, 0), (a, 0)), (ad, 0)): ONE}})
            state = (((a, 0),), (a,))
            out = h.run([(unit_weight, 1), (pairing, 0)], {state: ONE})
            s = out.get(state, ZERO)
            if s.is_zero():
                return None
            copairing[(((ad, 0), (a, 0)), (ad, 0))] = s.inv()
        omega = Morphism(C, (), W + W, {((), ()): copairing})
        delta = h.materialize(C, W, W + W, [(omega, 1), (mu, 0)])

        special = h.compose(mu, delta)
        unit_state = (((0, 0),), (0,))
        beta = special.column(unit_state).get(unit_state, ZERO)
        if beta.is_zero() or special != h.identity(C, W).scale(beta):
            return None
        return FrobeniusAlgebra(name, C, W, mu, eta, delta.scale(beta.inv()), eps.scale(beta))

    # -- haploid search ----------------------------------------------------

    def _equations(self, C: MtcData, S: Tuple[int, ...], index: Dict[Tuple[int, int, int], int]) -> List[CycPoly]:
        count = len(index)
        one, zero = CycPoly.constant(ONE, count), CycPoly.constant(ZERO, count)

        def m(a: int, b: int, c: int) -> CycPoly:
            if a == 0 or b == 0:
                return one if c == a + b else zero
            if c not in S or (a, b, c) not in index:
                return zero
            return CycPoly.variable(index[(a, b, c)], count)

        equations: List[CycPoly] = []
        nonunit = [s for s in S if s != 0]
        for a, b, c in itertools.product(nonunit, repeat=3):
            for d in S:
                for e in C.left_channels(a, b, c, d):
                    eq = m(a, b, e) * m(e, c, d)
                    for f in C.right_channels(a, b, c, d):
                        F = C.F(a, b, c, d, e, f)
                        if not F.is_zero():
                            eq = eq - m(b, c, f) * m(a, f, d) * F
                    if not eq.is_zero():
                        equations.append(eq)
        for a in nonunit:
            ad = C.dual(a)
            eq = m(a, ad, 0) - m(ad, a, 0) * (C.theta[ad] * C.R(a, ad, 0))
            if not eq.is_zero():
                equations.append(eq)
        return equations

    def _gauge_choices(self, unknowns: List[Tuple[int, int, int]], nonunit: List[int]) -> List[Tuple[int, ...]]:
        """Unknown subsets fixable to 1 by rescaling simple summands, best-conditioned first"""
        r = len(nonunit)
        if r == 0:
            return [()]
        pos = {x: i for i, x in enumerate(nonunit)}

        def weight(u: Tuple[int, int, int]) -> List[int]:
            w = [0] * r
            a, b, c = u
            w[pos[a]] += 1
            w[pos[b]] += 1
            if c != 0:
                w[pos[c]] -= 1
            return w

        scored = []
        for subset in itertools.combinations(range(len(unknowns)), r):
            det = abs(int(sympy.Matrix([weight(unknowns[i]) for i in subset]).det()))
            if det:
                scored.append((det, subset))
        scored.sort()
        return [subset for _, subset in scored[: self.MAX_GAUGES]]

    def _solve(self, equations: List[CycPoly], fixed: Dict[int, CycPoly], nonzero: set,
               diagnostics: List[str]) -> List[Dict[int, CycPoly]]:
        fixed = dict(fixed)
        equations = list(equations)
        while True:
            reduced = []
            for eq in equations:
                hits = eq.variables() & fixed.keys()
                while hits:
                    var = min(hits)
                    eq = eq.substitute(var, fixed[var])
                    hits = eq.variables() & fixed.keys()
                for var in nonzero:
                    eq = eq.divide_out(var)
                if eq.is_zero():
                    continue
                if eq.is_constant():
                    return []
                reduced.append(eq)
            equations = reduced
            if not equations:
                return [fixed]

            step = self._univariate_step(equations, fixed, nonzero, diagnostics)
            if step is not None:
                return step
            if self._eliminate(equations, fixed):
                continue
            diagnostics.append(f"stuck with {len(equations)} nonlinear equations in "
                               f"{len(set().union(*(eq.variables() for eq in equations)))} unknowns")
            return []

    def _univariate_step(self, equations: List[CycPoly], fixed: Dict[int, CycPoly], nonzero: set,
                         diagnostics: List[str]) -> Optional[List[Dict[int, CycPoly]]]:
        for eq in sorted(equations, key=len):
            variables = eq.variables()
            if len(variables) != 1:
                continue
            var = variables.pop()
            coeffs = eq.univariate(var)
            degree = max(coeffs)
            c0, c1, c2 = (coeffs.get(i, ZERO) for i in range(3))
            if degree == 1:
                roots = [-c0 / c1]
            elif degree == 2:
                root = cyclotomic_service.sqrt_exact(c1 * c1 - 4 * c2 * c0)
                if root is None:
                    diagnostics.append(f"quadratic in unknown {var} has no root in the cyclotomic field")
                    return []
                roots = []
                for candidate in ((-c1 + root) / (2 * c2), (-c1 - root) / (2 * c2)):
                    if not any(candidate == r for r in roots):
                        roots.append(candidate)
            else:
                continue
            branches: List[Dict[int, CycPoly]] = []
            for value in roots:
                if var in nonzero and value.is_zero():
                    continue
                branch = dict(fixed)
                branch[var] = CycPoly.constant(value, eq.count)
                branches.extend(self._solve(equations, branch, nonzero, diagnostics))
            return branches
        return None

    @staticmethod
    def _eliminate(equations: List[CycPoly], fixed: Dict[int, CycPoly]) -> bool:
        """Solve one equation for an unknown occurring only linearly with a constant coefficient"""
        for eq in sorted(equations, key=len):
            monomials = eq.monomials()
            for var in sorted(eq.variables()):
                linear = tuple(1 if i == var else 0 for i in range(eq.count))
                if any(mono[var] and mono != linear for mono in monomials):
                    continue
                coeff = monomials[linear]
                rest = (eq - CycPoly.variable(var, eq.count) * coeff) * -coeff.inv()
                for other, value in list(fixed.items()):
                    if var in value.variables():
                        fixed[other] = value.substitute(var, rest)
                fixed[var] = rest
                return True
        return False

    @staticmethod
    def _resolve(raw: Dict[int, CycPoly], count: int) -> Optional[List[CycScalar]]:
        values = []
        for i in range(count):
            if i not in raw:
                return None
            p = raw[i]
            hits = p.variables()
            while hits:
                var = min(hits)
                if var not in raw:
                    return None
                p = p.substitute(var, raw[var])
                hits = p.variables()
            values.append(p.value())
        return values

    def solve_haploid_algebra(self, C: MtcData, obj: SSObject) -> SolverOutcome:
        """All symmetric special haploid Frobenius structures on obj, up to the first gauge that admits one"""
        if 0 not in obj.labels or any(n != 1 for _, n in obj.multiplicities):
            raise InvalidInputError("haploid search needs a multiplicity-free object containing the unit",
                                    {"object": repr(obj)})
        S = obj.labels
        nonunit = [s for s in S if s != 0]
        outcome = SolverOutcome()
        if any(C.dual(a) not in S for a in nonunit):
            outcome.diagnostics.append("object is not self-dual so no nondegenerate pairing exists")
            return outcome

        unknowns = [(a, b, c) for a in nonunit for b in nonunit for c in C.channels(a, b) if c in S]
        index = {u: i for i, u in enumerate(unknowns)}
        equations = self._equations(C, S, index)
        nonzero = {index[(a, C.dual(a), 0)] for a in nonunit}
        console.info(f"Searching algebras on {obj!r}: {len(unknowns)} unknowns, {len(equations)} equations")

        for gauge in self._gauge_choices(unknowns, nonunit):
            fixed = {i: CycPoly.constant(ONE, len(unknowns)) for i in gauge}
            found: List[Tuple[List[CycScalar], FrobeniusAlgebra]] = []
            for raw in self._solve(equations, fixed, nonzero, outcome.diagnostics):
                values = self._resolve(raw, len(unknowns))
                if values is None:
                    outcome.diagnostics.append("solution is not isolated after gauge fixing")
                    continue
                if any(values[i].is_zero() for i in nonzero):
                    continue
                if any(all(v == w for v, w in zip(values, prev)) for prev, _ in found):
                    continue
                A = self.from_structure_constants(C, obj, dict(zip(unknowns, values)), name=repr(obj))
                if A is None:
                    outcome.diagnostics.append("candidate is degenerate or not special")
                    continue
                if self.check_algebra(A).passed and self.is_symmetric_special(A):
                    found.append((values, A))
            if found:
                found.sort(key=lambda item: [str(cyclotomic_service.encode(v)) for v in item[0]])
                outcome.algebras = [A for _, A in found]
                outcome.gauge = [unknowns[i] for i in gauge]
                console.success(f"Found {len(found)} algebra structure(s) on {obj!r}")
                return outcome
        console.warning(f"No symmetric special Frobenius algebra on {obj!r}")
        return outcome


frobenius_service = FrobeniusService()

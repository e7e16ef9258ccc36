"""
Multi-module Service

Objects with several commuting algebra actions, their twists, cyclic
structures and spaces of multi-module maps.

Actions are listed anticlockwise around a defect line. An action with
sign "-" is stored as a genuine action of the opposite algebra. Two
actions i < j are compatible when

    rho_i (1 (x) rho_j) = rho_j (1 (x) rho_i) ((c_{A_j,A_i})^-1 (x) 1_M)

so A_j always passes over A_i.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from ..core.console import console
from ..core.exceptions import InvalidInputError, TypeMismatchError
from ..models.algebra_schemas import AlgebraReport, AxiomFailure
from .category_service import MtcData
from .cyclotomic_service import ONE, ZERO, CycScalar, cyclotomic_service
from .frobenius_service import FrobeniusAlgebra, frobenius_service
from .homspace_service import Morphism, Word, homspace_service

h = homspace_service


@dataclass
class ModuleAction:
    algebra: FrobeniusAlgebra
    sign: str
    rho: Morphism
    _acting: Optional[FrobeniusAlgebra] = field(default=None, repr=False)

    @property
    def acting(self) -> FrobeniusAlgebra:
        """The algebra that acts: A for sign '+', A^op for sign '-'"""
        if self._acting is None:
            self._acting = self.algebra if self.sign == "+" else frobenius_service.opposite(self.algebra)
        return self._acting

    def decoration(self) -> Tuple[int, str]:
        return id(self.algebra), self.sign


class MultiModule:
    """An object M with an ordered list of compatible actions"""

    def __init__(self, name: str, category: MtcData, word: Sequence, actions: Sequence[ModuleAction]):
        self.name = name
        self.category = category
        self.word: Word = tuple(word)
        self.actions: List[ModuleAction] = list(actions)
        for action in self.actions:
            if action.sign not in ("+", "-"):
                raise InvalidInputError("action sign must be '+' or '-'", {"sign": action.sign})

    @property
    def decorations(self) -> List[Tuple[int, str]]:
        return [a.decoration() for a in self.actions]

    def __repr__(self) -> str:
        labels = ", ".join(f"{a.algebra.name}{a.sign}" for a in self.actions)
        return f"MultiModule({self.name!r}, [{labels}])"


@dataclass
class CyclicStructure:
    parent: MultiModule
    k: int
    phi: Morphism

    @property
    def name(self) -> str:
        return self.parent.name

    @property
    def actions(self) -> List[ModuleAction]:
        return self.parent.actions


def minimal_period(decorations: Sequence) -> int:
    n = len(decorations)
    for k in range(1, n + 1):
        if n % k == 0 and all(decorations[i] == decorations[(i + k) % n] for i in range(n)):
            return k
    return max(n, 1)


def sigma(a: int, b: int, m: int) -> int:
    """Carry of a + b in Z/m using representatives 0..m-1"""
    a, b = a % m, b % m
    return (a + b - (a + b) % m) // m


class MultiModuleService:
    """Checks, constructions and hom spaces of multi-modules"""

    # -- verification ------------------------------------------------------

    def _check_types(self, M: MultiModule):
        for i, action in enumerate(M.actions):
            if action.algebra.category is not M.category:
                raise TypeMismatchError(f"action {i + 1} lives in another category",
                                        action.algebra.category.name, M.category.name)
            dom, cod = action.algebra.word + M.word, M.word
            if action.rho.dom != dom or action.rho.cod != cod:
                raise TypeMismatchError(f"action {i + 1} has the wrong type", (action.rho.dom, action.rho.cod), (dom, cod))

    def action_failures(self, action: ModuleAction, word: Word, index: int) -> List[AxiomFailure]:
        B, rho = action.acting, action.rho
        failures = []
        if h.compose(rho, h.embed(B.eta, right=word)) != h.identity(B.category, word):
            failures.append(AxiomFailure(axiom=f"unit of action {index}"))
        if h.compose(rho, h.embed(B.mu, right=word)) != h.compose(rho, h.embed(rho, left=B.word)):
            failures.append(AxiomFailure(axiom=f"associativity of action {index}"))
        return failures

    def compatible(self, M: MultiModule, i: int, j: int) -> bool:
        C = M.category
        Ai, Aj = M.actions[i], M.actions[j]
        U, V = Ai.algebra.word, Aj.algebra.word
        lhs = h.compose(Ai.rho, h.embed(Aj.rho, left=U))
        swap = h.embed(h.braid_block(C, U, V, inverse=True), right=M.word)
        rhs = h.compose_all(Aj.rho, h.embed(Ai.rho, left=V), swap)
        return lhs == rhs

    def check_multimodule(self, M: MultiModule) -> AlgebraReport:
        self._check_types(M)
        failures: List[AxiomFailure] = []
        for i, action in enumerate(M.actions):
            failures.extend(self.action_failures(action, M.word, i + 1))
        for i in range(len(M.actions)):
            for j in range(i + 1, len(M.actions)):
                if not self.compatible(M, i, j):
                    failures.append(AxiomFailure(axiom=f"compatibility of actions {i + 1} and {j + 1}"))
        for failure in failures:
            console.warning(f"{M.name}: {failure.axiom} fails")
        return AlgebraReport(algebra=M.name, passed=not failures, failures=failures)

    # -- combined actions --------------------------------------------------

    def combined_algebra(self, M: MultiModule) -> FrobeniusAlgebra:
        if not M.actions:
            return frobenius_service.trivial_algebra(M.category)
        B = M.actions[0].acting
        for action in M.actions[1:]:
            B = frobenius_service.tensor_algebra(B, action.acting)
        return B

    def combine(self, M: MultiModule) -> Tuple[FrobeniusAlgebra, Morphism]:
        """Single action of A_1 (x) ... (x) A_n: the rightmost algebra acts first"""
        B = self.combined_algebra(M)
        ops = []
        offset = len(B.word)
        for action in reversed(M.actions):
            offset -= len(action.algebra.word)
            ops.append((action.rho, offset))
        rho = h.materialize(M.category, B.word + M.word, M.word, ops)
        return B, rho

    def split(self, name: str, actions: Sequence[Tuple[FrobeniusAlgebra, str]], word: Sequence,
              rho: Morphism) -> MultiModule:
        """Recover the individual actions by inserting units of the other algebras"""
        C = rho.category
        word = tuple(word)
        acting = [A if s == "+" else frobenius_service.opposite(A) for A, s in actions]
        result = []
        for i, (A, s) in enumerate(actions):
            ops = []
            position = 0
            for j, B in enumerate(acting):
                if j != i:
                    ops.append((B.eta, position))
                position += len(B.word)
            rho_i = h.compose(rho, h.materialize(C, A.word + word, rho.dom, ops))
            result.append(ModuleAction(A, s, rho_i, _acting=acting[i]))
        M = MultiModule(name, C, word, result)
        report = self.check_multimodule(M)
        if not report.passed:
            raise InvalidInputError(f"combined action does not split into a multi-module: "
                                    f"{report.failures[0].axiom}", report.model_dump())
        return M

    # -- twists and cyclic structures ---------------------------------------

    def twist_action(self, action: ModuleAction, word: Word) -> ModuleAction:
        """rho^tw = theta_M o rho o (1 (x) theta_M^-1)"""
        C = action.rho.category
        rho = h.compose_all(h.twist(C, word), action.rho,
                            h.embed(h.twist(C, word, inverse=True), left=action.algebra.word))
        return ModuleAction(action.algebra, action.sign, rho, _acting=action._acting)

    def twist_multimodule(self, M: MultiModule, j: int) -> MultiModule:
        n = len(M.actions)
        if not 0 <= j <= n:
            raise InvalidInputError("twist index out of range", {"j": j, "n": n})
        if j == 0:
            return M
        actions = M.actions[j:] + [self.twist_action(a, M.word) for a in M.actions[:j]]
        return MultiModule(f"{M.name}^tw{j}", M.category, M.word, actions)

    def cn_action(self, M: MultiModule, a: int, period: Optional[int] = None) -> MultiModule:
        """Image of M under the group element a of Z/(n/period)"""
        n = len(M.actions)
        period = period or minimal_period(M.decorations)
        m = n // period
        return self.twist_multimodule(M, (a % m) * period)

    def tau(self, a: int, b: int, M: MultiModule, m: int) -> Morphism:
        """(theta_M^-1)^sigma(a, b)"""
        return h.power(h.twist(M.category, M.word, inverse=True), sigma(a, b, m))

    def is_intertwiner(self, f: Morphism, M: MultiModule, N: MultiModule) -> bool:
        if len(M.actions) != len(N.actions):
            return False
        for am, an in zip(M.actions, N.actions):
            lhs = h.compose(f, am.rho)
            rhs = h.compose(an.rho, h.embed(f, left=am.algebra.word))
            if lhs != rhs:
                return False
        return True

    def check_cyclic(self, S: CyclicStructure) -> AlgebraReport:
        M = S.parent
        n = len(M.actions)
        failures: List[AxiomFailure] = []
        k = minimal_period(M.decorations)
        if S.k != k:
            failures.append(AxiomFailure(axiom="minimal period", message=f"declared {S.k}, minimal {k}"))
        if S.phi.dom != M.word or S.phi.cod != M.word:
            raise TypeMismatchError("phi must be an endomorphism of M", (S.phi.dom, S.phi.cod), M.word)
        twisted = self.twist_multimodule(M, S.k) if n else M
        if not self.is_intertwiner(S.phi, twisted, M):
            failures.append(AxiomFailure(axiom="phi intertwines M^tw_k with M"))
        power = h.power(S.phi, n // S.k if n else 1)
        if power != h.twist(M.category, M.word, inverse=True):
            failures.append(AxiomFailure(axiom="phi^(n/k) = theta_M^-1"))
        return AlgebraReport(algebra=M.name, passed=not failures, failures=failures)

    # -- standard modules --------------------------------------------------

    def regular_module(self, A: FrobeniusAlgebra) -> MultiModule:
        return MultiModule(A.name, A.category, A.word, [ModuleAction(A, "+", A.mu)])

    def regular_bimodule(self, A: FrobeniusAlgebra) -> MultiModule:
        """A over (A, +) and (A, -), the right action read as a left A^op action"""
        right = h.compose(A.mu, h.braid_block(A.category, A.word, A.word))
        return MultiModule(f"{A.name}_AA", A.category, A.word, [ModuleAction(A, "+", A.mu), ModuleAction(A, "-", right)])

    def commutative_bimodule(self, A: FrobeniusAlgebra) -> MultiModule:
        """A over (A, +) twice, both actions by the product"""
        return MultiModule(f"{A.name}_AA", A.category, A.word, [ModuleAction(A, "+", A.mu), ModuleAction(A, "+", A.mu)])

    def tensor_cyclic(self, M: MultiModule) -> CyclicStructure:
        """M (x) M over (A, A) with phi = (1 (x) theta_M^-1) o (c_{M,M})^-1"""
        if len(M.actions) != 1 or M.actions[0].sign != "+":
            raise InvalidInputError("tensor_cyclic needs a module with a single '+' action", {"module": M.name})
        C, W = M.category, M.word
        action = M.actions[0]
        U = action.algebra.word
        first = h.embed(action.rho, right=W)
        second = h.compose(h.embed(action.rho, left=W), h.embed(h.braid_block(C, U, W), right=W))
        MM = MultiModule(f"{M.name}(x){M.name}", C, W + W,
                         [ModuleAction(action.algebra, "+", first, _acting=action._acting),
                          ModuleAction(action.algebra, "+", second, _acting=action._acting)])
        phi = h.compose(h.embed(h.twist(C, W, inverse=True), left=W), h.braid_block(C, W, W, inverse=True))
        return CyclicStructure(MM, 1, phi)

    # -- hom spaces --------------------------------------------------------

    @staticmethod
    def _check_decorations(M: MultiModule, N: MultiModule):
        if M.decorations != N.decorations or M.category is not N.category:
            raise InvalidInputError("multi-modules are decorated by different algebra lists",
                                    {"left": repr(M), "right": repr(N)})

    def average(self, f: Morphism, am: ModuleAction, an: ModuleAction) -> Morphism:
        """rho_N o (1 (x) f) o (1 (x) rho_M) o ((Delta o eta) (x) 1_M)"""
        B = am.acting
        C = B.category
        omega = h.compose(B.delta, B.eta)
        width = len(B.word)
        ops = [(omega, 0), (am.rho, width), (f, width), (an.rho, 0)]
        return h.materialize(C, f.dom, f.cod, ops)

    def module_hom_basis(self, M: MultiModule, N: MultiModule) -> List[Morphism]:
        """Image of the product of averaging idempotents, in reduced row-echelon form"""
        self._check_decorations(M, N)
        C = M.category
        units = h.hom_basis_states(C, M.word, N.word)
        rows = [[ONE if i == j else ZERO for j in range(len(units))] for i in range(len(units))]
        for am, an in zip(M.actions, N.actions):
            images = []
            for row in rows:
                f = h.from_vector(C, M.word, N.word, units, row)
                images.append(h.to_vector(self.average(f, am, an), units))
            rows, _ = cyclotomic_service.rref(images)
            if not rows:
                break
        return [h.from_vector(C, M.word, N.word, units, row) for row in rows]

    def module_hom_dim(self, M: MultiModule, N: MultiModule) -> int:
        return len(self.module_hom_basis(M, N))

    def intertwiner_dim(self, M: MultiModule, N: MultiModule) -> int:
        """Dimension of the solution space of the intertwiner equations, solved directly"""
        self._check_decorations(M, N)
        C = M.category
        units = h.hom_basis_states(C, M.word, N.word)
        if not units:
            return 0
        columns: List[List[CycScalar]] = [[] for _ in units]
        for am, an in zip(M.actions, N.actions):
            U = am.algebra.word
            targets = h.hom_basis_states(C, U + M.word, N.word)
            for k, unit in enumerate(units):
                e = h.from_entries(C, M.word, N.word, [(unit[0], unit[1], ONE)])
                defect = h.compose(an.rho, h.embed(e, left=U)) - h.compose(e, am.rho)
                columns[k].extend(h.to_vector(defect, targets))
        matrix = [list(row) for row in zip(*columns)]
        return len(units) - (cyclotomic_service.rank(matrix) if matrix else 0)


multimodule_service = MultiModuleService()

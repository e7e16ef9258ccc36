"""
Diagram Service

Sliced ribbon diagrams and their evaluation. A diagram is a stack of
slices read bottom to top; each slice is a row of generators covering the
strands left to right. Strands carry an object and an orientation, and a
downward strand labelled X stands for X* in the underlying word.

Half-twist markers are bookkeeping on ribbons: they must pair up along
each connected strand path. A pair of the same chirality evaluates to a
full twist (theta for "+", theta^-1 for "-"); a mixed pair cancels.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from ..core.console import console
from ..core.exceptions import InvalidInputError, TypeMismatchError
from ..models.diagram_schemas import DiagramFile, GeneratorSpec, StrandSpec, TypecheckReport
from .category_service import MtcData
from .cyclotomic_service import ONE, ZERO, CycScalar
from .frobenius_service import FrobeniusAlgebra
from .homspace_service import Morphism, SSObject, homspace_service
from .multimodule_service import CyclicStructure, MultiModule
from .serialization_service import resolve_path, serialization_service

h = homspace_service


class Strand(NamedTuple):
    obj: SSObject
    up: bool = True

    def reversed(self) -> Strand:
        return Strand(self.obj, not self.up)

    def word(self, C: MtcData) -> SSObject:
        return self.obj if self.up else self.obj.dual(C)

    def __repr__(self) -> str:
        return f"{self.obj!r}{'^' if self.up else 'v'}"


ARITY = {"id": 1, "braid+": 2, "braid-": 2, "cup": 0, "cap": 2, "twist+": 1, "twist-": 1,
         "half+": 1, "half-": 1}


@dataclass(frozen=True, eq=False)
class Generator:
    kind: str
    strand: Optional[Strand] = None
    morphism: Optional[Morphism] = None
    ref: Optional[str] = None

    @property
    def arity(self) -> int:
        if self.morphism is not None:
            return len(self.morphism.dom)
        return ARITY[self.kind]

    def outputs(self, inputs: Sequence[Strand]) -> Tuple[Strand, ...]:
        kind = self.kind
        if kind in ("id", "twist+", "twist-", "half+", "half-"):
            return tuple(inputs)
        if kind in ("braid+", "braid-"):
            return inputs[1], inputs[0]
        if kind == "cup":
            return self.strand, self.strand.reversed()
        if kind == "cap":
            if inputs[1] != inputs[0].reversed():
                raise TypeMismatchError("cap needs a strand and its reverse", inputs[0], inputs[1])
            return ()
        expected = tuple(Strand(x) for x in self.morphism.dom)
        if tuple(inputs) != expected:
            raise TypeMismatchError(f"{self} does not fit its input strands", tuple(inputs), expected)
        return tuple(Strand(x) for x in self.morphism.cod)

    def __str__(self) -> str:
        return self.ref or self.kind


def identity() -> Generator:
    return Generator("id")


def braid(inverse: bool = False) -> Generator:
    return Generator("braid-" if inverse else "braid+")


def cup(strand: Strand) -> Generator:
    return Generator("cup", strand=strand)


def cap() -> Generator:
    return Generator("cap")


def twist(inverse: bool = False) -> Generator:
    return Generator("twist-" if inverse else "twist+")


def coupon(f: Morphism, ref: Optional[str] = None) -> Generator:
    return Generator("named" if ref else "coupon", morphism=f, ref=ref)


def half_twist(chirality: str) -> Generator:
    if chirality not in "+-" or len(chirality) != 1:
        raise InvalidInputError("chirality must be '+' or '-'", {"chirality": chirality})
    return Generator(f"half{chirality}")


class SlicedDiagram:
    """Boundary strands plus a bottom-to-top list of slices"""

    def __init__(self, category: MtcData, boundary_in: Iterable[Strand] = (),
                 slices: Optional[List[List[Generator]]] = None):
        self.category = category
        self.boundary_in: Tuple[Strand, ...] = tuple(boundary_in)
        self.slices: List[List[Generator]] = [list(row) for row in slices or []]
        self._top: Optional[Tuple[Strand, ...]] = None

    @property
    def top(self) -> Tuple[Strand, ...]:
        if self._top is None:
            types = self.boundary_in
            for index, row in enumerate(self.slices):
                types = _slice_outputs(types, row, index)
            self._top = types
        return self._top

    def add_slice(self, row: Sequence[Generator]) -> SlicedDiagram:
        """Append a full-width slice; raises on a type mismatch"""
        self._top = _slice_outputs(self.top, row, len(self.slices))
        self.slices.append(list(row))
        return self

    def place(self, position: int, *generators: Generator) -> SlicedDiagram:
        """Append a slice with generators starting at position and identities elsewhere"""
        used = sum(g.arity for g in generators)
        if position < 0 or position + used > len(self.top):
            raise TypeMismatchError("generators do not fit the current strands", len(self.top), (position, used))
        row = [identity() for _ in range(position)] + list(generators)
        row += [identity() for _ in range(len(self.top) - position - used)]
        return self.add_slice(row)

    @property
    def boundary_out(self) -> Tuple[Strand, ...]:
        return self.top

    @property
    def closed(self) -> bool:
        return not self.boundary_in and not self.top

    def __len__(self) -> int:
        return len(self.slices)


def _slice_outputs(inputs: Sequence[Strand], row: Sequence[Generator], index: int) -> Tuple[Strand, ...]:
    out: List[Strand] = []
    position = 0
    for g in row:
        chunk = tuple(inputs[position:position + g.arity])
        if len(chunk) != g.arity:
            raise TypeMismatchError(f"slice {index}: {g} runs past the last strand", len(inputs), position + g.arity)
        out.extend(g.outputs(chunk))
        position += g.arity
    if position != len(inputs):
        raise TypeMismatchError(f"slice {index} covers {position} of {len(inputs)} strands", position, len(inputs))
    return tuple(out)


class _Paths:
    """Union-find over strand segments"""

    def __init__(self):
        self.parent: Dict[int, int] = {}

    def new(self) -> int:
        node = len(self.parent)
        self.parent[node] = node
        return node

    def find(self, node: int) -> int:
        while self.parent[node] != node:
            self.parent[node] = self.parent[self.parent[node]]
            node = self.parent[node]
        return node

    def union(self, a: int, b: int):
        self.parent[self.find(a)] = self.find(b)


class GeneratorRegistry:
    """Named structure maps of algebras and modules, addressable from diagram files"""

    def __init__(self):
        self.entries: Dict[str, Morphism] = {}

    def register(self, name: str, f: Morphism):
        self.entries[name] = f

    def register_algebra(self, A: FrobeniusAlgebra, name: Optional[str] = None):
        """name.mu, name.eta, name.delta and name.eps"""
        name = name or A.name
        for part in ("mu", "eta", "delta", "eps"):
            self.register(f"{name}.{part}", getattr(A, part))

    def register_module(self, M: MultiModule, cyclic: Optional[CyclicStructure] = None, name: Optional[str] = None):
        """name.rho1 .. name.rhon, and name.phi when a cyclic structure is given"""
        name = name or M.name
        for i, action in enumerate(M.actions):
            self.register(f"{name}.rho{i + 1}", action.rho)
        if cyclic is not None:
            self.register(f"{name}.phi", cyclic.phi)

    def resolve(self, name: str) -> Morphism:
        if name not in self.entries:
            raise InvalidInputError(f"unknown named generator {name!r}", {"known": sorted(self.entries)})
        return self.entries[name]


class DiagramService:
    """Type checking and exact evaluation of sliced diagrams"""

    def _analyse(self, D: SlicedDiagram) -> Tuple[TypecheckReport, Dict[Tuple[int, int], int]]:
        paths = _Paths()
        types = D.boundary_in
        ids = [paths.new() for _ in types]
        markers: Dict[Tuple[int, int], int] = {}
        for si, row in enumerate(D.slices):
            try:
                outputs = _slice_outputs(types, row, si)
            except TypeMismatchError as e:
                return TypecheckReport(passed=False, slice=si, message=e.message), {}
            new_ids: List[int] = []
            position = 0
            for gi, g in enumerate(row):
                segment = ids[position:position + g.arity]
                kind = g.kind
                if kind in ("id", "twist+", "twist-"):
                    new_ids.extend(segment)
                elif kind in ("half+", "half-"):
                    markers[(si, gi)] = segment[0]
                    new_ids.extend(segment)
                elif kind in ("braid+", "braid-"):
                    new_ids.extend([segment[1], segment[0]])
                elif kind == "cup":
                    node = paths.new()
                    new_ids.extend([node, node])
                elif kind == "cap":
                    paths.union(segment[0], segment[1])
                else:
                    new_ids.extend(paths.new() for _ in g.morphism.cod)
                position += g.arity
            types, ids = outputs, new_ids

        roots = {key: paths.find(node) for key, node in markers.items()}
        counts: Dict[int, int] = {}
        for root in roots.values():
            counts[root] = counts.get(root, 0) + 1
        odd = sorted(key for key, root in roots.items() if counts[root] % 2)
        n_paths = len({paths.find(node) for node in paths.parent})
        if odd:
            return TypecheckReport(passed=False, slice=odd[0][0], message="odd half-twist count", paths=n_paths), {}
        closed = not D.boundary_in and not types
        return TypecheckReport(passed=True, closed=closed, paths=n_paths), roots

    def typecheck(self, D: SlicedDiagram) -> TypecheckReport:
        return self._analyse(D)[0]

    def _generator_morphism(self, C: MtcData, g: Generator, inputs: Sequence[Strand],
                            pairing: Dict[int, str], root: Optional[int]) -> Optional[Morphism]:
        kind = g.kind
        if kind == "id":
            return None
        if kind in ("braid+", "braid-"):
            return h.braid(C, inputs[0].word(C), inputs[1].word(C), inverse=kind == "braid-")
        if kind in ("twist+", "twist-"):
            return h.twist(C, (inputs[0].word(C),), inverse=kind == "twist-")
        if kind == "cup":
            return h.coev(C, g.strand.obj) if g.strand.up else h.coev_prime(C, g.strand.obj)
        if kind == "cap":
            return h.ev_prime(C, inputs[0].obj) if inputs[0].up else h.ev(C, inputs[0].obj)
        if kind in ("half+", "half-"):
            chirality = kind[-1]
            first = pairing.pop(root, None)
            if first is None:
                pairing[root] = chirality
                return None
            if first != chirality:
                return None
            return h.twist(C, (inputs[0].word(C),), inverse=chirality == "-")
        return g.morphism

    def _operations(self, D: SlicedDiagram) -> List[Tuple[Morphism, int]]:
        report, roots = self._analyse(D)
        if not report.passed:
            raise TypeMismatchError(f"diagram does not typecheck at slice {report.slice}: {report.message}",
                                    report.slice, report.message)
        C = D.category
        ops: List[Tuple[Morphism, int]] = []
        pairing: Dict[int, str] = {}
        types = D.boundary_in
        for si, row in enumerate(D.slices):
            row_ops = []
            position = 0
            for gi, g in enumerate(row):
                inputs = types[position:position + g.arity]
                f = self._generator_morphism(C, g, inputs, pairing, roots.get((si, gi)))
                if f is not None:
                    row_ops.append((f, position))
                position += g.arity
            ops.extend(reversed(row_ops))
            types = _slice_outputs(types, row, si)
        return ops

    def evaluate(self, D: SlicedDiagram) -> Morphism:
        C = D.category
        ops = self._operations(D)
        dom = tuple(s.word(C) for s in D.boundary_in)
        cod = tuple(s.word(C) for s in D.top)
        return h.materialize(C, dom, cod, ops)

    def evaluate_closed(self, D: SlicedDiagram) -> CycScalar:
        if not D.closed:
            raise InvalidInputError("diagram has open boundary strands",
                                    {"in": repr(D.boundary_in), "out": repr(D.top)})
        ops = self._operations(D)
        vacuum = ((), ())
        value = h.run(ops, {vacuum: ONE}).get(vacuum, ZERO)
        console.info(f"Closed diagram with {len(D)} slices evaluates to {value}")
        return value

    # -- builders ----------------------------------------------------------

    @staticmethod
    def unknot(C: MtcData, label: int, twists: int = 0) -> SlicedDiagram:
        strand = Strand(SSObject.simple(label))
        D = SlicedDiagram(C).place(0, cup(strand))
        for _ in range(abs(twists)):
            D.place(0, twist(inverse=twists < 0))
        return D.place(0, cap())

    @staticmethod
    def hopf_link(C: MtcData, i: int, j: int) -> SlicedDiagram:
        """Closure of the double braiding of U_i and U_j"""
        si, sj = Strand(SSObject.simple(i)), Strand(SSObject.simple(j))
        D = SlicedDiagram(C).place(0, cup(si)).place(1, cup(sj))
        D.place(0, braid()).place(0, braid())
        return D.place(1, cap()).place(0, cap())

    @staticmethod
    def disjoint_union(left: SlicedDiagram, right: SlicedDiagram) -> SlicedDiagram:
        """Side by side: left's slices first, then right's, each padded with identities"""
        if left.category is not right.category:
            raise TypeMismatchError("diagrams over different categories", left.category.name, right.category.name)
        D = SlicedDiagram(left.category, left.boundary_in + right.boundary_in)
        for row in left.slices:
            D.add_slice(list(row) + [identity() for _ in right.boundary_in])
        for row in right.slices:
            D.add_slice([identity() for _ in left.top] + list(row))
        return D

    # -- files -------------------------------------------------------------

    @staticmethod
    def _strand(entry: StrandSpec) -> Strand:
        return Strand(SSObject(entry.obj), entry.up)

    def from_file(self, C: MtcData, data: DiagramFile, registry: Optional[GeneratorRegistry] = None) -> SlicedDiagram:
        """Build a diagram from its JSON form; slice types are checked by typecheck"""
        rows = []
        for si, row in enumerate(data.slices):
            gens = []
            for entry in row:
                gens.append(self._generator(C, entry, registry, si))
            rows.append(gens)
        return SlicedDiagram(C, [self._strand(s) for s in data.boundary_in], rows)

    def _generator(self, C: MtcData, entry: GeneratorSpec, registry: Optional[GeneratorRegistry],
                   si: int) -> Generator:
        if entry.gen == "cup":
            if entry.strand is None:
                raise InvalidInputError(f"slice {si}: cup needs a strand", {"slice": si})
            return cup(self._strand(entry.strand))
        if entry.gen == "coupon":
            if entry.morphism is None:
                raise InvalidInputError(f"slice {si}: coupon needs a morphism", {"slice": si})
            return coupon(serialization_service.morphism_from_schema(C, entry.morphism))
        if entry.gen == "named":
            if registry is None or entry.ref is None:
                raise InvalidInputError(f"slice {si}: named generator without a registry entry", {"ref": entry.ref})
            return coupon(registry.resolve(entry.ref), ref=entry.ref)
        return Generator(entry.gen)

    def load_diagram(self, path, registry: Optional[GeneratorRegistry] = None, trust: bool = False,
                     samples: int = 1000, seed: int = 1) -> SlicedDiagram:
        """Read a diagram file; the algebras and modules it names become named generators"""
        data = serialization_service.read_model(path, DiagramFile)
        memo: Dict = {}
        C = serialization_service.resolve_category(data.category, base=path, trust=trust, samples=samples,
                                                   seed=seed, memo=memo)
        registry = registry or GeneratorRegistry()
        for name, ref in data.algebras.items():
            A = serialization_service.load_algebra(resolve_path(ref, path), trust=trust, samples=samples,
                                                   seed=seed, memo=memo)
            if A.category is not C:
                raise InvalidInputError(f"algebra {name!r} lives over another category", {"algebra": ref})
            registry.register_algebra(A, name)
        for name, ref in data.modules.items():
            M, cyclic = serialization_service.load_module(resolve_path(ref, path), trust=trust, samples=samples,
                                                          seed=seed, memo=memo)
            if M.category is not C:
                raise InvalidInputError(f"module {name!r} lives over another category", {"module": ref})
            registry.register_module(M, cyclic, name)
        console.info(f"Loaded diagram with {len(registry.entries)} named generators")
        return self.from_file(C, data, registry)


diagram_service = DiagramService()

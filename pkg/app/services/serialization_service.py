"""
Serialization Service

JSON forms of morphisms, algebras and modules, and resolution of the
category reference every such file carries. A category reference is
either a generated family name ("sl2_16", "trivial") or a path to a
category file, relative to the referring file.
"""

import json
import re
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Type, TypeVar

from pydantic import BaseModel, ValidationError

from ..core.console import console
from ..core.exceptions import InvalidInputError, VerificationError
from ..models.algebra_schemas import AlgebraFile, ModuleFile, MorphismEntry, MorphismSchema, TreeState
from ..models.algebra_schemas import ModuleAction as ModuleActionSchema
from ..models.scalar_schemas import CycScalarSchema
from .category_service import MtcData, category_service, gen_sl2k, trivial_category
from .frobenius_service import FrobeniusAlgebra, frobenius_service
from .homspace_service import Morphism, SSObject, homspace_service
from .multimodule_service import CyclicStructure, ModuleAction, MultiModule, minimal_period

SchemaT = TypeVar("SchemaT", bound=BaseModel)

_GENERATED = re.compile(r"^sl2_(\d+)$")


class SerializationService:
    """Conversion between domain objects and their JSON schemas"""

    # -- files -------------------------------------------------------------

    @staticmethod
    def read_model(path: Path, model: Type[SchemaT]) -> SchemaT:
        path = Path(path)
        try:
            return model.model_validate(json.loads(path.read_text()))
        except (OSError, ValueError, ValidationError) as e:
            raise InvalidInputError(f"cannot read {model.__name__} from {path}: {e}")

    @staticmethod
    def write_model(path: Path, payload: BaseModel):
        Path(path).write_text(payload.model_dump_json(indent=2, by_alias=True))
        console.success(f"Wrote {path}")

    def resolve_category(self, ref: str, base: Optional[Path] = None, trust: bool = False,
                         samples: int = 1000, seed: int = 1, memo: Optional[Dict] = None) -> MtcData:
        match = _GENERATED.match(ref)
        if match:
            return gen_sl2k(int(match.group(1)))
        if ref == "trivial":
            return trivial_category()
        path = resolve_path(ref, base)
        memo = {} if memo is None else memo
        key = ("category", str(path.resolve()))
        if key not in memo:
            memo[key] = category_service.load_category(path, trust=trust, samples=samples, seed=seed)
        return memo[key]

    # -- objects and morphisms ---------------------------------------------

    @staticmethod
    def word_to_schema(word) -> List[List[Tuple[int, int]]]:
        return [list(x.multiplicities) for x in word]

    @staticmethod
    def word_from_schema(data) -> Tuple[SSObject, ...]:
        return tuple(SSObject(pairs) for pairs in data)

    def morphism_to_schema(self, f: Morphism) -> MorphismSchema:
        entries = [
            MorphismEntry(
                src=TreeState(keys=list(src[0]), tree=list(src[1])),
                dst=TreeState(keys=list(dst[0]), tree=list(dst[1])),
                v=CycScalarSchema.from_scalar(value, with_float=False),
            )
            for src, dst, value in f.entries()
        ]
        return MorphismSchema(dom=self.word_to_schema(f.dom), cod=self.word_to_schema(f.cod), entries=entries)

    def morphism_from_schema(self, C: MtcData, data: MorphismSchema) -> Morphism:
        dom, cod = self.word_from_schema(data.dom), self.word_from_schema(data.cod)
        valid_src = set(homspace_service.states(C, dom))
        valid_dst = set(homspace_service.states(C, cod))
        entries = []
        for entry in data.entries:
            src = (tuple(tuple(k) for k in entry.src.keys), tuple(entry.src.tree))
            dst = (tuple(tuple(k) for k in entry.dst.keys), tuple(entry.dst.tree))
            if src not in valid_src or dst not in valid_dst:
                raise InvalidInputError("morphism entry refers to a state outside its type",
                                        {"src": entry.src.model_dump(), "dst": entry.dst.model_dump()})
            entries.append((src, dst, entry.v.to_scalar()))
        return homspace_service.from_entries(C, dom, cod, entries)

    # -- algebras ----------------------------------------------------------

    def algebra_to_file(self, A: FrobeniusAlgebra, category_ref: str) -> AlgebraFile:
        return AlgebraFile(
            name=A.name,
            category=category_ref,
            object=self.word_to_schema(A.word),
            mu=self.morphism_to_schema(A.mu),
            eta=self.morphism_to_schema(A.eta),
            delta=self.morphism_to_schema(A.delta),
            eps=self.morphism_to_schema(A.eps),
        )

    def algebra_from_file(self, C: MtcData, data: AlgebraFile) -> FrobeniusAlgebra:
        word = self.word_from_schema(data.object)
        parts = {name: self.morphism_from_schema(C, getattr(data, name)) for name in ("mu", "eta", "delta", "eps")}
        return FrobeniusAlgebra(data.name, C, word, **parts)

    def load_algebra(self, path: Path, trust: bool = False, samples: int = 1000, seed: int = 1,
                     memo: Optional[Dict] = None, verify: bool = True) -> FrobeniusAlgebra:
        """Algebras loaded through one memo are the same object, so decorations compare equal.

        Unless trusted, the axioms are re-checked and a file that is not a
        symmetric special Frobenius algebra raises VerificationError.
        """
        memo = {} if memo is None else memo
        key = ("algebra", str(Path(path).resolve()))
        if key not in memo:
            data = self.read_model(path, AlgebraFile)
            C = self.resolve_category(data.category, base=path, trust=trust, samples=samples, seed=seed, memo=memo)
            A = self.algebra_from_file(C, data)
            if verify and not trust:
                self.verify_algebra(A, path)
            memo[key] = A
        return memo[key]

    @staticmethod
    def verify_algebra(A: FrobeniusAlgebra, path: Path):
        report = frobenius_service.check_algebra(A)
        if not report.passed:
            raise VerificationError(f"{path}: {report.failures[0].axiom} fails for {A.name}", report)
        if not frobenius_service.is_symmetric_special(A):
            missing = [flag for flag in ("symmetric", "delta_separable") if not report.flags[flag]]
            raise VerificationError(f"{path}: {A.name} is not {' and '.join(missing)}", report)
        console.check(f"Verified algebra {A.name} from {path}")

    # -- modules -----------------------------------------------------------

    def module_to_file(self, M: MultiModule, category_ref: str, algebra_refs: Dict[str, str],
                       cyclic: Optional[CyclicStructure] = None) -> ModuleFile:
        """algebra_refs maps algebra names to the file paths written into the module file"""
        actions = [
            ModuleActionSchema(algebra=algebra_refs[a.algebra.name], sign=a.sign, rho=self.morphism_to_schema(a.rho))
            for a in M.actions
        ]
        return ModuleFile(
            name=M.name,
            category=category_ref,
            object=self.word_to_schema(M.word),
            actions=actions,
            period=cyclic.k if cyclic else None,
            phi=self.morphism_to_schema(cyclic.phi) if cyclic else None,
        )

    def load_module(self, path: Path, trust: bool = False, samples: int = 1000, seed: int = 1,
                    memo: Optional[Dict] = None) -> Tuple[MultiModule, Optional[CyclicStructure]]:
        memo = {} if memo is None else memo
        data = self.read_model(path, ModuleFile)
        C = self.resolve_category(data.category, base=path, trust=trust, samples=samples, seed=seed, memo=memo)
        word = self.word_from_schema(data.object)
        actions = []
        for entry in data.actions:
            if entry.sign not in ("+", "-"):
                raise InvalidInputError("action sign must be '+' or '-'", {"sign": entry.sign})
            A = self.load_algebra(resolve_path(entry.algebra, path), trust=trust, samples=samples, seed=seed, memo=memo)
            if A.category is not C:
                raise InvalidInputError("module action uses an algebra over another category", {"algebra": entry.algebra})
            actions.append(ModuleAction(A, entry.sign, self.morphism_from_schema(C, entry.rho)))
        M = MultiModule(data.name, C, word, actions)
        if data.phi is None:
            return M, None
        period = data.period or minimal_period(M.decorations)
        return M, CyclicStructure(M, period, self.morphism_from_schema(C, data.phi))


def resolve_path(ref: str, base: Optional[Path]) -> Path:
    """A file reference relative to the file that names it"""
    path = Path(ref)
    if base is not None and not path.is_absolute():
        path = Path(base).parent / path
    return path


serialization_service = SerializationService()

"""
Homspace Service

Exact morphisms between tensor words of semisimple objects, stored in
left-nested ("staircase") fusion-tree bases.

A basis state of a word (X_1, ..., X_n) picks one simple summand key
(label, copy) per factor and a staircase of intermediate charges
(t_1, ..., t_n) with t_1 = label_1 and t_i in t_{i-1} (x) label_i. The last
charge is the total sector; the empty word has the single state ((), ())
in sector 0.

Local morphisms act on a block of adjacent factors by rewriting the
surrounding tree with F-moves: ((a x_1) ... x_l)_e is re-associated into
(a (x_1 ... x_l)_b)_e, the block acts on its own staircase, and the result
is moved back.
"""

from __future__ import annotations

import weakref
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from ..core.exceptions import InvalidInputError, TypeMismatchError
from .category_service import MtcData
from .cyclotomic_service import ONE, ZERO, CycScalar

Key = Tuple[int, int]
Tree = Tuple[int, ...]
State = Tuple[Tuple[Key, ...], Tree]
Vector = Dict[State, CycScalar]


class SSObject:
    """Formal direct sum of simples with explicit copy indices"""

    __slots__ = ("multiplicities", "keys", "_hash")

    def __init__(self, multiplicities: Union[Dict[int, int], Iterable[Tuple[int, int]]]):
        items = multiplicities.items() if isinstance(multiplicities, dict) else multiplicities
        mult: Dict[int, int] = {}
        for label, count in items:
            if count < 0:
                raise InvalidInputError("negative multiplicity", {"label": label})
            if count:
                mult[int(label)] = mult.get(int(label), 0) + int(count)
        self.multiplicities = tuple(sorted(mult.items()))
        self.keys = tuple((label, copy) for label, count in self.multiplicities for copy in range(count))
        self._hash = hash(self.multiplicities)

    @classmethod
    def simple(cls, label: int) -> SSObject:
        return cls({label: 1})

    @classmethod
    def parse(cls, text: str) -> SSObject:
        """Parse '0+8+16' or '0+2*8' into a direct sum"""
        mult: Dict[int, int] = {}
        try:
            for part in text.replace(" ", "").split("+"):
                count, _, label = part.rpartition("*")
                mult[int(label)] = mult.get(int(label), 0) + (int(count) if count else 1)
        except ValueError:
            raise InvalidInputError(f"cannot parse object '{text}'")
        return cls(mult)

    @property
    def labels(self) -> Tuple[int, ...]:
        return tuple(label for label, _ in self.multiplicities)

    def multiplicity(self, label: int) -> int:
        return dict(self.multiplicities).get(label, 0)

    def dual(self, C: MtcData) -> SSObject:
        return SSObject([(C.dual(label), count) for label, count in self.multiplicities])

    def qdim(self, C: MtcData) -> CycScalar:
        total = ZERO
        for label, count in self.multiplicities:
            total = total + C.qdim[label] * count
        return total

    def __eq__(self, other) -> bool:
        return isinstance(other, SSObject) and self.multiplicities == other.multiplicities

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        if not self.multiplicities:
            return "0"
        return "+".join(f"{count}*U{label}" if count > 1 else f"U{label}" for label, count in self.multiplicities)


Word = Tuple[SSObject, ...]


def key_labels(keys: Sequence[Key]) -> Tuple[int, ...]:
    return tuple(k[0] for k in keys)


def sector(state: State) -> int:
    tree = state[1]
    return tree[-1] if tree else 0


def _prune(vec: Vector) -> Vector:
    return {s: v for s, v in vec.items() if not v.is_zero()}


def _axpy(target: Vector, scale: CycScalar, vec: Vector):
    for s, v in vec.items():
        term = v if scale is ONE else scale * v
        current = target.get(s)
        target[s] = term if current is None else current + term


class Morphism:
    """Exact linear map dom -> cod; columns map dom states to sparse cod vectors"""

    __slots__ = ("category", "dom", "cod", "cols")

    def __init__(self, category: MtcData, dom: Sequence[SSObject], cod: Sequence[SSObject], cols: Dict[State, Vector]):
        self.category = category
        self.dom: Word = tuple(dom)
        self.cod: Word = tuple(cod)
        self.cols = {s: col for s, col in ((s, _prune(c)) for s, c in cols.items()) if col}

    def column(self, state: State) -> Vector:
        return self.cols.get(state, {})

    def is_zero(self) -> bool:
        return not self.cols

    def entries(self) -> Iterable[Tuple[State, State, CycScalar]]:
        for src in sorted(self.cols):
            col = self.cols[src]
            for dst in sorted(col):
                yield src, dst, col[dst]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Morphism):
            return NotImplemented
        if self.dom != other.dom or self.cod != other.cod:
            return False
        if self.cols.keys() != other.cols.keys():
            return False
        for s, col in self.cols.items():
            other_col = other.cols[s]
            if col.keys() != other_col.keys():
                return False
            if any(col[t] != other_col[t] for t in col):
                return False
        return True

    __hash__ = None

    def __repr__(self) -> str:
        return f"Morphism({list(self.dom)} -> {list(self.cod)}, {sum(len(c) for c in self.cols.values())} entries)"

    # -- linear structure --------------------------------------------------

    def scale(self, factor: CycScalar) -> Morphism:
        return Morphism(self.category, self.dom, self.cod,
                        {s: {t: factor * v for t, v in col.items()} for s, col in self.cols.items()})

    def __add__(self, other: Morphism) -> Morphism:
        if self.dom != other.dom or self.cod != other.cod:
            raise TypeMismatchError("cannot add morphisms of different types",
                                    (self.dom, self.cod), (other.dom, other.cod))
        cols: Dict[State, Vector] = {s: dict(col) for s, col in self.cols.items()}
        for s, col in other.cols.items():
            _axpy(cols.setdefault(s, {}), ONE, col)
        return Morphism(self.category, self.dom, self.cod, cols)

    def __neg__(self) -> Morphism:
        return self.scale(CycScalar.from_int(-1))

    def __sub__(self, other: Morphism) -> Morphism:
        return self + (-other)


class _TreeTables:
    """Memoized re-association tables for one category"""

    def __init__(self):
        self.forward: Dict[Tuple, Dict[Tree, CycScalar]] = {}
        self.backward: Dict[Tuple, Dict[Tree, CycScalar]] = {}
        self.states: Dict[Word, List[State]] = {}


class HomspaceService:
    """Fusion-tree calculus: states, local application, structural morphisms"""

    def __init__(self):
        self._tables: "weakref.WeakKeyDictionary[MtcData, _TreeTables]" = weakref.WeakKeyDictionary()

    def _t(self, C: MtcData) -> _TreeTables:
        tables = self._tables.get(C)
        if tables is None:
            tables = _TreeTables()
            self._tables[C] = tables
        return tables

    # -- bases -------------------------------------------------------------

    def states(self, C: MtcData, word: Sequence[SSObject]) -> List[State]:
        """All staircase basis states of a word, in canonical order"""
        word = tuple(word)
        cache = self._t(C).states
        if word in cache:
            return cache[word]
        partial: List[State] = [((), ())]
        for factor in word:
            grown = []
            for keys, tree in partial:
                charge = tree[-1] if tree else 0
                for key in factor.keys:
                    for nxt in C.channels(charge, key[0]):
                        grown.append((keys + (key,), tree + (nxt,)))
            partial = grown
        result = sorted(partial)
        cache[word] = result
        return result

    def sector_counts(self, C: MtcData, word: Sequence[SSObject]) -> Dict[int, int]:
        counts: Dict[int, int] = {}
        for state in self.states(C, word):
            c = sector(state)
            counts[c] = counts.get(c, 0) + 1
        return counts

    def hom_dim(self, C: MtcData, X: Sequence[Union[int, SSObject]], Y: Sequence[Union[int, SSObject]]) -> int:
        """dim Hom(X, Y) from fusion-tree counts per sector"""
        left = self.sector_counts(C, as_word(X))
        right = self.sector_counts(C, as_word(Y))
        return sum(n * right.get(c, 0) for c, n in left.items())

    # -- re-association ----------------------------------------------------

    def _forward(self, C: MtcData, a: int, labels: Tuple[int, ...], suffix: Tree) -> Dict[Tree, CycScalar]:
        """((a x_1)_{s_1} ... x_l)_{s_l} -> sum over block trees Y of (a Y_b)_{s_l}"""
        key = (a, labels, suffix)
        table = self._t(C).forward
        if key in table:
            return table[key]
        l = len(labels)
        if l == 0:
            result = {(): ONE}
        elif l == 1:
            result = {(labels[0],): ONE}
        else:
            e = suffix[-1]
            s_prev = suffix[-2]
            x = labels[-1]
            result: Dict[Tree, CycScalar] = {}
            for ytree, coeff in self._forward(C, a, labels[:-1], suffix[:-1]).items():
                b_prev = ytree[-1]
                for b in C.channels(b_prev, x):
                    if not C.N(a, b, e):
                        continue
                    f = C.F(a, b_prev, x, e, s_prev, b)
                    if f.is_zero():
                        continue
                    nxt = ytree + (b,)
                    term = coeff * f
                    result[nxt] = result[nxt] + term if nxt in result else term
            result = {t: v for t, v in result.items() if not v.is_zero()}
        table[key] = result
        return result

    def _backward(self, C: MtcData, a: int, labels: Tuple[int, ...], e: int, ytree: Tree) -> Dict[Tree, CycScalar]:
        """(a Y_b)_e -> sum over staircase suffixes of ((a x_1) ... x_l)_e"""
        key = (a, labels, e, ytree)
        table = self._t(C).backward
        if key in table:
            return table[key]
        l = len(labels)
        if l == 0:
            result = {(): ONE} if e == a else {}
        elif l == 1:
            result = {(e,): ONE}
        else:
            b = ytree[-1]
            b_prev = ytree[-2]
            x = labels[-1]
            result: Dict[Tree, CycScalar] = {}
            for s in C.channels(a, b_prev):
                if not C.N(s, x, e):
                    continue
                finv = C.Finv(a, b_prev, x, e, b, s)
                if finv.is_zero():
                    continue
                for prefix, coeff in self._backward(C, a, labels[:-1], s, ytree[:-1]).items():
                    nxt = prefix + (e,)
                    term = coeff * finv
                    result[nxt] = result[nxt] + term if nxt in result else term
            result = {t: v for t, v in result.items() if not v.is_zero()}
        table[key] = result
        return result

    # -- application -------------------------------------------------------

    def apply(self, g: Morphism, vec: Vector, position: int = 0) -> Vector:
        """Apply g to the factors starting at position of every state in vec"""
        C = g.category
        width = len(g.dom)
        out: Vector = {}
        for (keys, tree), coeff in vec.items():
            if len(keys) < position + width:
                raise TypeMismatchError("local morphism does not fit the word", len(keys), (position, width))
            a = tree[position - 1] if position > 0 else 0
            mid_keys = keys[position:position + width]
            suffix = tree[position:position + width]
            e = suffix[-1] if width else a
            head_keys, head_tree = keys[:position], tree[:position]
            tail_keys, tail_tree = keys[position + width:], tree[position + width:]
            if a == 0:
                forward = {suffix: ONE}
            else:
                forward = self._forward(C, a, key_labels(mid_keys), suffix)
            for ytree, c1 in forward.items():
                col = g.cols.get((mid_keys, ytree))
                if not col:
                    continue
                for (new_keys, new_ytree), c2 in col.items():
                    if a == 0:
                        backward = {new_ytree: ONE}
                    else:
                        backward = self._backward(C, a, key_labels(new_keys), e, new_ytree)
                    for new_suffix, c3 in backward.items():
                        state = (head_keys + new_keys + tail_keys, head_tree + new_suffix + tail_tree)
                        term = coeff * c1 * c2 * c3
                        current = out.get(state)
                        out[state] = term if current is None else current + term
        return _prune(out)

    def run(self, ops: Sequence[Tuple[Morphism, int]], vec: Vector) -> Vector:
        for g, position in ops:
            vec = self.apply(g, vec, position)
            if not vec:
                break
        return vec

    def materialize(self, C: MtcData, dom: Sequence[SSObject], cod: Sequence[SSObject],
                    ops: Sequence[Tuple[Morphism, int]]) -> Morphism:
        """Morphism obtained by running a sequence of local operations on every dom state"""
        cols = {}
        for state in self.states(C, dom):
            out = self.run(ops, {state: ONE})
            if out:
                cols[state] = out
        return Morphism(C, dom, cod, cols)

    # -- composition and tensor product ------------------------------------

    def compose(self, g: Morphism, f: Morphism) -> Morphism:
        """g after f"""
        if f.cod != g.dom:
            raise TypeMismatchError("cannot compose: codomain of f differs from domain of g", f.cod, g.dom)
        cols = {}
        for state, col in f.cols.items():
            out = self.apply(g, col, 0)
            if out:
                cols[state] = out
        return Morphism(f.category, f.dom, g.cod, cols)

    def compose_all(self, *morphisms: Morphism) -> Morphism:
        """compose_all(h, g, f) = h after g after f"""
        result = morphisms[-1]
        for m in reversed(morphisms[:-1]):
            result = self.compose(m, result)
        return result

    def tensor(self, f: Morphism, g: Morphism) -> Morphism:
        C = f.category
        offset = len(f.dom)
        return self.materialize(C, f.dom + g.dom, f.cod + g.cod, [(g, offset), (f, 0)])

    def tensor_all(self, *morphisms: Morphism) -> Morphism:
        result = morphisms[0]
        for m in morphisms[1:]:
            result = self.tensor(result, m)
        return result

    def embed(self, g: Morphism, left: Sequence[SSObject] = (), right: Sequence[SSObject] = ()) -> Morphism:
        """id_left (x) g (x) id_right"""
        left, right = tuple(left), tuple(right)
        return self.materialize(g.category, left + g.dom + right, left + g.cod + right, [(g, len(left))])

    def power(self, f: Morphism, n: int) -> Morphism:
        if f.dom != f.cod:
            raise TypeMismatchError("power needs an endomorphism", f.dom, f.cod)
        result = self.identity(f.category, f.dom)
        for _ in range(n):
            result = self.compose(f, result)
        return result

    # -- structural morphisms ----------------------------------------------

    def identity(self, C: MtcData, word: Sequence[SSObject]) -> Morphism:
        word = tuple(word)
        return Morphism(C, word, word, {s: {s: ONE} for s in self.states(C, word)})

    def braid(self, C: MtcData, X: SSObject, Y: SSObject, inverse: bool = False) -> Morphism:
        """c_{X,Y}; with inverse=True the map (c_{Y,X})^{-1}, also X (x) Y -> Y (x) X"""
        cols = {}
        for kx in X.keys:
            for ky in Y.keys:
                x, y = kx[0], ky[0]
                for z in C.channels(x, y):
                    value = C.Rinv(y, x, z) if inverse else C.R(x, y, z)
                    cols[((kx, ky), (x, z))] = {((ky, kx), (y, z)): value}
        return Morphism(C, (X, Y), (Y, X), cols)

    def braid_ops(self, C: MtcData, X: Sequence[SSObject], Y: Sequence[SSObject], inverse: bool = False,
                  offset: int = 0) -> List[Tuple[Morphism, int]]:
        """Adjacent braidings moving block X to the right of block Y"""
        X, Y = tuple(X), tuple(Y)
        ops = []
        m, n = len(X), len(Y)
        for i in reversed(range(m)):
            for j in range(n):
                ops.append((self.braid(C, X[i], Y[j], inverse), offset + i + j))
        return ops

    def braid_block(self, C: MtcData, X: Sequence[SSObject], Y: Sequence[SSObject], inverse: bool = False) -> Morphism:
        """c_{X,Y} for tensor blocks (or (c_{Y,X})^{-1} when inverse)"""
        X, Y = tuple(X), tuple(Y)
        return self.materialize(C, X + Y, Y + X, self.braid_ops(C, X, Y, inverse))

    def twist(self, C: MtcData, word: Sequence[SSObject], inverse: bool = False) -> Morphism:
        """theta acting on each total sector"""
        word = tuple(word)
        cols = {}
        for s in self.states(C, word):
            c = sector(s)
            cols[s] = {s: C.theta_inv(c) if inverse else C.theta[c]}
        return Morphism(C, word, word, cols)

    def coev(self, C: MtcData, X: SSObject) -> Morphism:
        """1 -> X (x) X*"""
        Xd = X.dual(C)
        cols = {((), ()): {((k, (C.dual(k[0]), k[1])), (k[0], 0)): ONE for k in X.keys}}
        return Morphism(C, (), (X, Xd), cols)

    def ev(self, C: MtcData, X: SSObject) -> Morphism:
        """X* (x) X -> 1"""
        Xd = X.dual(C)
        cols = {}
        for k in X.keys:
            i = k[0]
            cols[(((C.dual(i), k[1]), k), (C.dual(i), 0))] = {((), ()): C.F(i, C.dual(i), i, i, 0, 0).inv()}
        return Morphism(C, (Xd, X), (), cols)

    def ev_prime(self, C: MtcData, X: SSObject) -> Morphism:
        """X (x) X* -> 1"""
        Xd = X.dual(C)
        cols = {((k, (C.dual(k[0]), k[1])), (k[0], 0)): {((), ()): C.qdim[k[0]]} for k in X.keys}
        return Morphism(C, (X, Xd), (), cols)

    def coev_prime(self, C: MtcData, X: SSObject) -> Morphism:
        """1 -> X* (x) X"""
        Xd = X.dual(C)
        col = {}
        for k in X.keys:
            i = k[0]
            j = C.dual(i)
            col[(((j, k[1]), k), (j, 0))] = (C.qdim[i] * C.F(j, i, j, j, 0, 0)).inv()
        return Morphism(C, (), (Xd, X), {((), ()): col})

    # -- traces and vectors ------------------------------------------------

    def qtrace(self, f: Morphism) -> CycScalar:
        if f.dom != f.cod:
            raise TypeMismatchError("trace needs an endomorphism", f.dom, f.cod)
        C = f.category
        total = ZERO
        for s, col in f.cols.items():
            value = col.get(s)
            if value is not None:
                total = total + C.qdim[sector(s)] * value
        return total

    def from_entries(self, C: MtcData, dom: Sequence[SSObject], cod: Sequence[SSObject],
                     entries: Iterable[Tuple[State, State, CycScalar]]) -> Morphism:
        cols: Dict[State, Vector] = {}
        for src, dst, value in entries:
            if sector(src) != sector(dst):
                raise InvalidInputError("morphism entry changes the total sector", {"src": src, "dst": dst})
            col = cols.setdefault(src, {})
            col[dst] = col[dst] + value if dst in col else value
        return Morphism(C, dom, cod, cols)

    def hom_basis_states(self, C: MtcData, dom: Sequence[SSObject], cod: Sequence[SSObject]) -> List[Tuple[State, State]]:
        """Matrix units of Hom(dom, cod): pairs of states in the same sector"""
        targets: Dict[int, List[State]] = {}
        for t in self.states(C, cod):
            targets.setdefault(sector(t), []).append(t)
        return [(s, t) for s in self.states(C, dom) for t in targets.get(sector(s), [])]

    def to_vector(self, f: Morphism, units: Sequence[Tuple[State, State]]) -> List[CycScalar]:
        return [f.cols.get(s, {}).get(t, ZERO) for s, t in units]

    def from_vector(self, C: MtcData, dom, cod, units: Sequence[Tuple[State, State]], vector: Sequence[CycScalar]) -> Morphism:
        return self.from_entries(C, dom, cod, ((s, t, v) for (s, t), v in zip(units, vector) if not v.is_zero()))


def as_word(items: Sequence[Union[int, SSObject]]) -> Word:
    return tuple(x if isinstance(x, SSObject) else SSObject.simple(x) for x in items)


homspace_service = HomspaceService()

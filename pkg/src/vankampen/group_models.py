"""Word problem for Z^d * F_k via syllable normal forms.

Elements are alternating products of nonzero lattice vectors and nonempty
freely reduced words in the free factor.  The normal form is unique, so
triviality, and with it Wise's cell-embedding condition, is decidable by
plain multiplication.
"""

from __future__ import annotations

from typing import Dict, NamedTuple, Sequence, Tuple

from .presentation import (
    CyclicWord,
    Presentation,
    Word,
    invert_ints,
    parse_letters,
    reduce_ints,
)


class ModelError(ValueError):
    """Invalid model data or unsupported query."""


class LatticeVector(NamedTuple):
    x: int
    y: int


# syllables: ("z", vector-tuple) or ("f", reduced-letter-tuple)
Syllable = Tuple[str, Tuple[int, ...]]


class GroupElement:
    """Normal form in Z^d * F_k."""

    __slots__ = ("syllables",)

    def __init__(self, syllables: Sequence[Syllable] = ()):
        self.syllables: Tuple[Syllable, ...] = tuple(syllables)
        prev = None
        for kind, data in self.syllables:
            if kind == "z":
                if not any(data):
                    raise ModelError("trivial lattice syllable")
            elif kind == "f":
                if not data or reduce_ints(data) != tuple(data):
                    raise ModelError("free syllable must be nonempty and reduced")
            else:
                raise ModelError(f"bad syllable kind {kind!r}")
            if prev == kind:
                raise ModelError("syllables must alternate")
            prev = kind

    @classmethod
    def identity(cls) -> "GroupElement":
        return cls(())

    @classmethod
    def lattice(cls, vec: Sequence[int]) -> "GroupElement":
        v = tuple(vec)
        return cls((("z", v),)) if any(v) else cls(())

    @classmethod
    def free(cls, letters: Sequence[int]) -> "GroupElement":
        w = reduce_ints(letters)
        return cls((("f", w),)) if w else cls(())

    @property
    def is_identity(self) -> bool:
        return not self.syllables

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        stack: list[Syllable] = list(self.syllables)
        for syl in other.syllables:
            _push(stack, syl)
        return GroupElement(tuple(stack))

    def inverse(self) -> "GroupElement":
        out: list[Syllable] = []
        for kind, data in reversed(self.syllables):
            if kind == "z":
                out.append(("z", tuple(-x for x in data)))
            else:
                out.append(("f", invert_ints(data)))
        return GroupElement(tuple(out))

    def lattice_part(self) -> Tuple[int, ...]:
        """Image under the projection killing the free factor."""
        total: Tuple[int, ...] | None = None
        for kind, data in self.syllables:
            if kind == "z":
                total = data if total is None else tuple(a + b for a, b in zip(total, data))
        return total if total is not None else ()

    def __eq__(self, other) -> bool:
        return isinstance(other, GroupElement) and self.syllables == other.syllables

    def __hash__(self) -> int:
        return hash(self.syllables)

    def __repr__(self) -> str:
        if self.is_identity:
            return "GroupElement(1)"
        bits = []
        for kind, data in self.syllables:
            bits.append(f"z{data}" if kind == "z" else f"f{data}")
        return "GroupElement(" + "·".join(bits) + ")"


def _push(stack: list, syl: Syllable) -> None:
    kind, data = syl
    while True:
        if kind == "z" and not any(data):
            return
        if kind == "f" and not data:
            return
        if not stack or stack[-1][0] != kind:
            stack.append((kind, tuple(data)))
            return
        pkind, pdata = stack.pop()
        if kind == "z":
            data = tuple(a + b for a, b in zip(pdata, data))
            if any(data):
                stack.append((kind, data))
                return
        else:
            data = reduce_ints(pdata + tuple(data))
            if data:
                stack.append((kind, data))
                return
        # merged to nothing: the neighbours (same kind) may now combine
        if not stack:
            return
        kind, data = stack.pop()


class FreeProductModel:
    """Generator images in Z^d * F_k for a presentation.

    Every relator must map to the identity; this is checked on
    construction.
    """

    __slots__ = ("presentation", "abelian_rank", "free_rank", "images", "_pi")

    def __init__(
        self,
        presentation: Presentation,
        abelian_rank: int,
        free_rank: int,
        images: Dict[str, GroupElement],
    ):
        self.presentation = presentation
        self.abelian_rank = abelian_rank
        self.free_rank = free_rank
        self.images = dict(images)
        for name in presentation.names:
            if name not in self.images:
                raise ModelError(f"no image for generator {name!r}")
        for g in self.images.values():
            for kind, data in g.syllables:
                if kind == "z" and len(data) != abelian_rank:
                    raise ModelError("lattice syllable rank mismatch")
                if kind == "f" and any(abs(x) > free_rank for x in data):
                    raise ModelError("free letter outside free rank")
        self._pi = {}
        for name in presentation.names:
            part = self.images[name].lattice_part()
            self._pi[name] = part if part else (0,) * abelian_rank
        for r in presentation.relators:
            if not self._product(r.letters).is_identity:
                raise ModelError(f"relator {r.text()!r} is nontrivial under the model")

    def _product(self, letters: Sequence[int]) -> GroupElement:
        names = self.presentation.names
        out = GroupElement.identity()
        for x in letters:
            img = self.images[names[abs(x) - 1]]
            out = out * (img if x > 0 else img.inverse())
        return out

    def pi(self, name: str) -> Tuple[int, ...]:
        """Lattice projection of a generator image."""
        return self._pi[name]


def normal_form(w: Word, m: FreeProductModel) -> GroupElement:
    """Product of generator images, in normal form."""
    if w.alphabet != m.presentation.names:
        raise ModelError("word alphabet does not match the model's presentation")
    return m._product(w.letters)


def is_trivial(w: Word, m: FreeProductModel) -> bool:
    return normal_form(w, m).is_identity


def project_z2(w: Word, m: FreeProductModel) -> LatticeVector:
    """Abelianized image in the lattice factor (rank-2 models only)."""
    if m.abelian_rank != 2:
        raise ModelError("project_z2 needs abelian rank 2")
    if w.alphabet != m.presentation.names:
        raise ModelError("word alphabet does not match the model's presentation")
    x = y = 0
    names = m.presentation.names
    for v in w.letters:
        px, py = m.pi(names[abs(v) - 1])
        if v > 0:
            x += px
            y += py
        else:
            x -= px
            y -= py
    return LatticeVector(x, y)


def cell_embeds(r: CyclicWord, m: FreeProductModel) -> bool:
    """Wise's condition: every proper nonempty cyclic subword is nontrivial.

    Equivalently the cell's boundary circuit lifts to a simple circuit in
    the universal cover.
    """
    w = r.letters
    n = len(w)
    if n == 0:
        raise ModelError("empty cell boundary")
    names = m.presentation.names
    doubled = w + w
    for i in range(n):
        g = GroupElement.identity()
        for length in range(1, n):
            x = doubled[i + length - 1]
            img = m.images[names[abs(x) - 1]]
            g = g * (img if x > 0 else img.inverse())
            if g.is_identity:
                return False
    return True


def trivial_subword_witness(r: CyclicWord, m: FreeProductModel):
    """A proper nonempty cyclic subword that dies in the group, if any."""
    w = r.letters
    n = len(w)
    names = m.presentation.names
    doubled = w + w
    for i in range(n):
        g = GroupElement.identity()
        for length in range(1, n):
            x = doubled[i + length - 1]
            img = m.images[names[abs(x) - 1]]
            g = g * (img if x > 0 else img.inverse())
            if g.is_identity:
                return Word(doubled[i : i + length], r.alphabet)
    return None


def parse_model_file(text: str, presentation: Presentation) -> FreeProductModel:
    """Parse ``abelian_rank`` / ``free_rank`` / ``image g = expr`` lines.

    Expressions are words in the lattice basis ``e1..ed`` and free letters
    ``f1..fk``.
    """
    d = k = None
    image_lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "abelian_rank":
            d = int(parts[1])
        elif parts[0] == "free_rank":
            k = int(parts[1])
        elif parts[0] == "image":
            rest = line[len("image") :].strip()
            if "=" not in rest:
                raise ModelError(f"bad image line {line!r}")
            gen, expr = rest.split("=", 1)
            image_lines.append((gen.strip(), expr.strip()))
        else:
            raise ModelError(f"unrecognized model line {line!r}")
    if d is None or k is None:
        raise ModelError("model file needs abelian_rank and free_rank")
    basis = tuple(f"e{i + 1}" for i in range(d)) + tuple(f"f{i + 1}" for i in range(k))
    images = {}
    for gen, expr in image_lines:
        g = GroupElement.identity()
        if expr not in ("", "1"):
            for x in parse_letters(expr, basis):
                idx = abs(x) - 1
                if idx < d:
                    vec = [0] * d
                    vec[idx] = 1 if x > 0 else -1
                    g = g * GroupElement.lattice(vec)
                else:
                    g = g * GroupElement.free((x - d if x > 0 else x + d,))
        images[gen] = g
    return FreeProductModel(presentation, d, k, images)


def model_file_text(m: FreeProductModel) -> str:
    lines = [f"abelian_rank {m.abelian_rank}", f"free_rank {m.free_rank}"]
    for name in m.presentation.names:
        g = m.images[name]
        bits = []
        for kind, data in g.syllables:
            if kind == "z":
                for i, v in enumerate(data):
                    tok = f"e{i + 1}"
                    bits += [tok if v > 0 else tok + "^-1"] * abs(v)
            else:
                for x in data:
                    tok = f"f{abs(x)}"
                    bits.append(tok if x > 0 else tok + "^-1")
        lines.append(f"image {name} = {' '.join(bits) if bits else '1'}")
    return "\n".join(lines) + "\n"

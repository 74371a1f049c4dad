"""Words of C_n acting on the free group F_n.

A free word is a tuple of nonzero ints: ``k`` is x_k and ``-k`` its inverse.
An automorphism is stored by the images of x_1..x_n.

The Artin formulas come in several variants and the word
action can be composed in two orders. :func:`select_convention` tries the
candidates against every defining relation of C_4 and the module uses the
first one that passes; see ``CONVENTION``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .errors import GeneratorIndexError
from .representation import relation_instances
from .words import Gen, Word, expand_T

FreeWord = tuple


def reduce_free(letters: Sequence[int]) -> FreeWord:
    out: list[int] = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def inverse_free(w: FreeWord) -> FreeWord:
    return tuple(-x for x in reversed(w))


def render_free(w: FreeWord) -> str:
    if not w:
        return "1"
    return " ".join(f"x{abs(x)}" if x > 0 else f"x{abs(x)}^-1" for x in w)


@dataclass(frozen=True)
class Automorphism:
    images: tuple  # images[k-1] is the image of x_k

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> "Automorphism":
        return cls(tuple((k,) for k in range(1, n + 1)))

    def apply(self, w: Sequence[int]) -> FreeWord:
        """Substitute the images into a free word."""
        images = self.images
        out: list[int] = []
        for x in w:
            img = images[x - 1] if x > 0 else [-y for y in reversed(images[-x - 1])]
            for y in img:
                if out and out[-1] == -y:
                    out.pop()
                else:
                    out.append(y)
        return tuple(out)

    def then(self, other: "Automorphism") -> "Automorphism":
        """The automorphism x -> other(self(x)) (self first, as a substitution)."""
        return Automorphism(tuple(other.apply(img) for img in self.images))

    def render(self) -> str:
        return ", ".join(f"x{k + 1} -> {render_free(img)}" for k, img in enumerate(self.images))

    def __str__(self):
        return self.render()


# candidate formulas for sigma_i: (image of x_i, image of x_{i+1}) with i -> 1, i+1 -> 2
_SIGMA_VARIANTS = {
    "left-conjugate": ((1, 2, -1), (1,)),  # x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i
    "right-conjugate": ((2,), (-2, 1, 2)),  # x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
}
_ORDERS = ("substitute-left-first", "substitute-right-first")


@dataclass(frozen=True)
class Convention:
    sigma_variant: str
    order: str


def _sigma_aut(n: int, i: int, variant: str) -> Automorphism:
    xi, xj = _SIGMA_VARIANTS[variant]
    rename = {1: i, 2: i + 1, -1: -i, -2: -(i + 1)}
    images = [(k,) for k in range(1, n + 1)]
    images[i - 1] = tuple(rename[x] for x in xi)
    images[i] = tuple(rename[x] for x in xj)
    return Automorphism(tuple(images))


_INVERSE_VARIANT = {"left-conjugate": "right-conjugate", "right-conjugate": "left-conjugate"}


def _alpha_aut(n: int, i: int) -> Automorphism:
    images = [(k,) for k in range(1, n + 1)]
    images[i - 1], images[i] = (i + 1,), (i,)
    return Automorphism(tuple(images))


def _generator_under(g: Gen, n: int, conv: Convention) -> Automorphism:
    if not 1 <= g.index <= n - 1:
        raise GeneratorIndexError(f"{g} does not exist in C_{n}")
    if g.kind == "a":
        return _alpha_aut(n, g.index)
    if g.power == 1:
        return _sigma_aut(n, g.index, conv.sigma_variant)
    return _sigma_aut(n, g.index, _INVERSE_VARIANT[conv.sigma_variant])


def _apply_under(w: Word, n: int, conv: Convention) -> Automorphism:
    result = Automorphism.identity(n)
    letters = expand_T(w).letters
    for g in letters:
        a = _generator_under(g, n, conv)
        result = result.then(a) if conv.order == "substitute-left-first" else a.then(result)
    return result


def candidate_conventions() -> list[Convention]:
    return [Convention(v, o) for v in _SIGMA_VARIANTS for o in _ORDERS]


def convention_passes(conv: Convention, n: int = 4) -> bool:
    return all(
        _apply_under(inst.lhs, n, conv) == _apply_under(inst.rhs, n, conv) for inst in relation_instances(n)
    )


@lru_cache(maxsize=None)
def select_convention(n: int = 4) -> tuple[Convention, tuple]:
    """The convention used by this module, plus every candidate that satisfies all relations on F_n."""
    passing = tuple(c for c in candidate_conventions() if convention_passes(c, n))
    if not passing:
        raise AssertionError("no Artin convention satisfies the C_n relations")
    return passing[0], passing


CONVENTION = Convention("left-conjugate", "substitute-left-first")


def artin_generator(g: Gen, n: int) -> Automorphism:
    """The automorphism of F_n for a single letter (T is expanded for n = 3)."""
    if g.kind == "T":
        return apply_word(Word((g,), 3), 3)
    return _generator_under(g, n, CONVENTION)


def apply_word(w: Word, n: int | None = None) -> Automorphism:
    """Compose the letters of ``w`` in word order; images stay freely reduced."""
    return _apply_under(w, n or w.n, CONVENTION)


def compose_in_word_order(parts: Sequence[Automorphism]) -> Automorphism:
    """The automorphism of the concatenated word whose pieces act as ``parts``."""
    result = Automorphism.identity(parts[0].n) if parts else None
    for a in parts:
        result = result.then(a) if CONVENTION.order == "substitute-left-first" else a.then(result)
    return result


def is_identity(a: Automorphism) -> bool:
    return all(img == (k + 1,) for k, img in enumerate(a.images))


def conjugating_shape(img: FreeWord) -> tuple[FreeWord, int] | None:
    """Split a free word as f^-1 x_j f; returns (f, j) or None."""
    L = len(img)
    if L % 2 == 0:
        return None
    mid = L // 2
    pivot = img[mid]
    if pivot <= 0:
        return None
    f = img[mid + 1:]
    if inverse_free(f) != img[:mid]:
        return None
    return f, pivot


def has_conjugating_shape(a: Automorphism) -> bool:
    """Every image is f^-1 x_{Pi(k)} f with Pi a permutation."""
    targets = []
    for img in a.images:
        split = conjugating_shape(img)
        if split is None:
            return False
        targets.append(split[1])
    return sorted(targets) == list(range(1, a.n + 1))

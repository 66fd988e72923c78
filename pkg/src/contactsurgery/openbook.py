"""Symbolic open books: surfaces, signed Dehn-twist words, and rewrites.

Curves are names tagged with first-homology classes; isotopy data is
deliberately absent.  A monodromy word is a sequence of (curve, sign)
letters, the rightmost letter acting first, and its checkable shadow is
the induced transvection action on H1.  Monodromy words present open
books, so they are compared as cyclic words after free cancellation.

The lantern rewrite trades the subword c12^-1 c1 c2 c3 for
c13 c23 c4^-1 (and back) inside a declared seven-curve configuration;
windows may wrap around the end of the word.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace

from .errors import (
    CannotCapLastBoundary,
    InvalidStabilization,
    PatternMismatch,
    UnknownCurve,
)

Letter = tuple[str, str]
PLUS = "+"
MINUS = "-"


class InvariantStatus(enum.Enum):
    ZERO = "Zero"
    NONZERO = "NonZero"
    UNKNOWN = "Unknown"


class BindingVerdict(enum.Enum):
    FORCES_ZERO = "ForcesZero"
    NO_CONCLUSION = "NoConclusion"


@dataclass(frozen=True)
class SurfaceModel:
    """A surface with boundary, its H1 pairing, and a named curve alphabet.

    h1 rank is 2*genus + boundary_count - 1; every curve class and every
    boundary class is an integer vector of that length.  The pairing is
    skew-symmetric and declared boundary classes pair to zero with each
    other.
    """

    genus: int
    boundary_count: int
    pairing: tuple[tuple[int, ...], ...]
    curves: tuple[tuple[str, tuple[int, ...]], ...] = ()
    boundary_classes: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self) -> None:
        rank = self.h1_rank
        if self.genus < 0 or self.boundary_count < 1:
            raise ValueError("need genus >= 0 and at least one boundary")
        if len(self.pairing) != rank or any(len(r) != rank for r in self.pairing):
            raise ValueError(f"pairing must be {rank} x {rank}")
        for i in range(rank):
            for j in range(rank):
                if self.pairing[i][j] != -self.pairing[j][i]:
                    raise ValueError("pairing must be skew-symmetric")
        names = [name for name, _ in self.curves]
        if len(names) != len(set(names)):
            raise ValueError("duplicate curve names in the alphabet")
        for name, cls in self.curves:
            if len(cls) != rank:
                raise ValueError(f"curve {name!r} class has wrong length")
        for cls in self.boundary_classes:
            if len(cls) != rank:
                raise ValueError("boundary class has wrong length")
        for i, b1 in enumerate(self.boundary_classes):
            for b2 in self.boundary_classes[i:]:
                if self._pair(b1, b2) != 0:
                    raise ValueError("boundary classes must pairwise pair to zero")

    @property
    def h1_rank(self) -> int:
        return 2 * self.genus + self.boundary_count - 1

    def _pair(self, x, y) -> int:
        return sum(
            x[i] * self.pairing[i][j] * y[j]
            for i in range(len(x))
            for j in range(len(y))
        )

    def curve_class(self, name: str) -> tuple[int, ...]:
        for curve, cls in self.curves:
            if curve == name:
                return cls
        raise UnknownCurve(f"curve {name!r} is not in the alphabet")

    def has_curve(self, name: str) -> bool:
        return any(curve == name for curve, _ in self.curves)

    def with_curve(self, name: str, cls) -> "SurfaceModel":
        if self.has_curve(name):
            raise ValueError(f"curve {name!r} already declared")
        return replace(self, curves=self.curves + ((name, tuple(cls)),))


def word(*letters) -> tuple[Letter, ...]:
    """Convenience constructor: word(("a", "+"), ("b", "-"))."""
    out = []
    for name, sign in letters:
        if sign not in (PLUS, MINUS):
            raise ValueError(f"twist sign must be '+' or '-', got {sign!r}")
        out.append((name, sign))
    return tuple(out)


def free_reduce(letters) -> tuple[Letter, ...]:
    """Cancel adjacent inverse pairs until none remain."""
    out: list[Letter] = []
    for letter in letters:
        if out and out[-1][0] == letter[0] and out[-1][1] != letter[1]:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def cyclic_words_equal(first, second) -> bool:
    """Equality of monodromy words: free reduction, then up to rotation."""
    a, b = free_reduce(first), free_reduce(second)
    if len(a) != len(b):
        return False
    if not a:
        return True
    return any(a[i:] + a[:i] == b for i in range(len(a)))


def _transvection(surface: SurfaceModel, cls, sign: str):
    rank = surface.h1_rank
    image = [
        sum(surface.pairing[j][k] * cls[k] for k in range(rank)) for j in range(rank)
    ]
    s = 1 if sign == PLUS else -1
    return tuple(
        tuple((1 if i == k else 0) + s * cls[i] * image[k] for k in range(rank))
        for i in range(rank)
    )


def homology_action(letters, surface: SurfaceModel):
    """Matrix of the word acting on H1, rightmost letter acting first.

    The action is a monoid homomorphism for concatenation in this order:
    action(w1 + w2) = action(w1) . action(w2).
    """
    from .linalg import identity_int, mat_mul_int

    result = identity_int(surface.h1_rank)
    for name, sign in letters:
        cls = surface.curve_class(name)
        result = mat_mul_int(result, _transvection(surface, cls, sign))
    return result


@dataclass(frozen=True)
class LanternConfiguration:
    """Seven named curves asserted to form a lantern in the surface.

    Roles 1, 2, 3, 4 are the boundary curves and roles 12, 13, 23 the
    pair-encircling curves.  Validation checks the
    homology relations [c12] = [c1] + [c2], [c13] = [c1] + [c3],
    [c23] = [c2] + [c3], [c4] = -[c1] - [c2] - [c3], and that the classes
    of roles 1, 2, 3 pairwise pair to zero (so the rewrite preserves the
    homology action).  Distinct roles may name the same curve: parallel
    copies fill several roles.
    """

    one: str
    two: str
    three: str
    four: str
    one_two: str
    one_three: str
    two_three: str

    def validate(self, surface: SurfaceModel) -> None:
        c1 = surface.curve_class(self.one)
        c2 = surface.curve_class(self.two)
        c3 = surface.curve_class(self.three)
        c4 = surface.curve_class(self.four)
        c12 = surface.curve_class(self.one_two)
        c13 = surface.curve_class(self.one_three)
        c23 = surface.curve_class(self.two_three)

        def add(*vecs):
            return tuple(sum(parts) for parts in zip(*vecs))

        def neg(vec):
            return tuple(-x for x in vec)

        relations = [
            (c12, add(c1, c2), "12 = 1 + 2"),
            (c13, add(c1, c3), "13 = 1 + 3"),
            (c23, add(c2, c3), "23 = 2 + 3"),
            (c4, neg(add(c1, c2, c3)), "4 = -(1 + 2 + 3)"),
        ]
        for got, expected, label in relations:
            if got != expected:
                raise ValueError(f"lantern homology relation {label} fails")
        for x in (c1, c2, c3):
            for y in (c1, c2, c3):
                if surface._pair(x, y) != 0:
                    raise ValueError("lantern boundary roles must pair to zero")

    def source(self, direction: str) -> tuple[Letter, ...]:
        left = (
            (self.one_two, MINUS),
            (self.one, PLUS),
            (self.two, PLUS),
            (self.three, PLUS),
        )
        right = (
            (self.one_three, PLUS),
            (self.two_three, PLUS),
            (self.four, MINUS),
        )
        if direction == "LtoR":
            return left
        if direction == "RtoL":
            return right
        raise ValueError(f"direction must be 'LtoR' or 'RtoL', got {direction!r}")

    def target(self, direction: str) -> tuple[Letter, ...]:
        return self.source("RtoL" if direction == "LtoR" else "LtoR")


def lantern_rewrite(
    letters,
    config: LanternConfiguration,
    at: int,
    direction: str,
    surface: SurfaceModel | None = None,
):
    """Replace one side of the lantern relation by the other at a position.

    The source pattern must match the word letterwise starting at index
    `at`; since monodromy words are cyclic, the window may wrap past the
    end, in which case the result is anchored at the window start.  When
    a surface is supplied the configuration is validated against it, so
    the rewrite preserves the homology action.
    """
    letters = tuple(letters)
    if surface is not None:
        config.validate(surface)
    pattern = config.source(direction)
    n = len(letters)
    if not 0 <= at < n or len(pattern) > n:
        raise PatternMismatch(f"no room for the pattern at position {at}")
    window = [(at + k) % n for k in range(len(pattern))]
    for idx, expected in zip(window, pattern):
        if letters[idx] != expected:
            raise PatternMismatch(
                f"letter {letters[idx]!r} at position {idx} does not match "
                f"{expected!r}"
            )
    target = config.target(direction)
    if window[-1] >= at:
        return letters[:at] + target + letters[at + len(pattern):]
    # Wrapped window: write the replacement at the window start and then
    # the surviving letters in cyclic order.
    survivors = tuple(
        letters[i] for i in range((window[-1] + 1) % n, at)
    )
    return target + survivors


def giroux_stabilize(
    surface: SurfaceModel,
    letters,
    new_curve: str,
    new_class,
    *,
    mode: str = "boundary",
    side: str = "right",
    pairing_row=None,
    boundary_class=None,
    extra_curves=(),
):
    """Plumb a positive Hopf band: rank grows by one and the word gains a
    positive twist along the new curve on the declared side.

    mode 'boundary' keeps the genus and adds a boundary component whose
    class the caller may declare; mode 'genus' adds genus and merges the
    two most recently listed boundary components.  The new curve class
    lives in the extended lattice and must cross the new handle once
    (last coordinate +1 or -1).  extra_curves lets the caller realize
    further named curves on the stabilized page in the same step.
    """
    letters = tuple(letters)
    old_rank = surface.h1_rank
    new_class = tuple(new_class)
    if len(new_class) != old_rank + 1:
        raise InvalidStabilization(
            f"new curve class must have length {old_rank + 1}"
        )
    if abs(new_class[-1]) != 1:
        raise InvalidStabilization(
            "the stabilizing curve must cross the new handle exactly once"
        )
    if pairing_row is None:
        pairing_row = (0,) * (old_rank + 1)
    pairing_row = tuple(pairing_row)
    if len(pairing_row) != old_rank + 1 or pairing_row[-1] != 0:
        raise InvalidStabilization("pairing row must extend the old lattice")
    new_pairing = tuple(
        tuple(list(row) + [-pairing_row[i]]) for i, row in enumerate(surface.pairing)
    ) + (pairing_row,)

    def extend(vec):
        return tuple(vec) + (0,)

    curves = tuple((name, extend(cls)) for name, cls in surface.curves)
    curves += ((new_curve, new_class),)
    for name, cls in extra_curves:
        cls = tuple(cls)
        if len(cls) != old_rank + 1:
            raise InvalidStabilization(f"extra curve {name!r} class has wrong length")
        curves += ((name, cls),)

    boundaries = tuple(extend(b) for b in surface.boundary_classes)
    if mode == "boundary":
        genus = surface.genus
        boundary_count = surface.boundary_count + 1
        added = tuple(boundary_class) if boundary_class is not None else (0,) * (
            old_rank + 1
        )
        if len(added) != old_rank + 1:
            raise InvalidStabilization("boundary class has wrong length")
        boundaries += (added,)
    elif mode == "genus":
        if surface.boundary_count < 2:
            raise InvalidStabilization("genus mode needs two boundaries to merge")
        genus = surface.genus + 1
        boundary_count = surface.boundary_count - 1
        if len(boundaries) >= 2:
            merged = tuple(a + b for a, b in zip(boundaries[-2], boundaries[-1]))
            boundaries = boundaries[:-2] + (merged,)
    else:
        raise InvalidStabilization(f"unknown stabilization mode {mode!r}")

    if side not in ("left", "right"):
        raise InvalidStabilization(f"side must be 'left' or 'right', got {side!r}")
    stabilized = SurfaceModel(
        genus=genus,
        boundary_count=boundary_count,
        pairing=new_pairing,
        curves=curves,
        boundary_classes=boundaries,
    )
    twist = (new_curve, PLUS)
    new_word = letters + (twist,) if side == "right" else (twist,) + letters
    return stabilized, new_word


def giroux_destabilize(
    surface: SurfaceModel,
    letters,
    curve: str,
    *,
    drop_index: int | None = None,
    drop_boundary: int | None = None,
):
    """Undo a stabilization: remove the unique positive twist on the curve,
    drop one lattice direction, and reduce every class modulo the curve.

    The destabilized curve must carry exactly one letter, positive, and
    its class must be unimodular in the dropped direction so that the
    reduction lands in the smaller lattice.  The curve itself bounds in
    the destabilized surface and leaves the alphabet.
    """
    letters = tuple(letters)
    cls = surface.curve_class(curve)
    hits = [i for i, (name, _) in enumerate(letters) if name == curve]
    if len(hits) != 1 or letters[hits[0]][1] != PLUS:
        raise InvalidStabilization(
            f"destabilization needs exactly one positive twist on {curve!r}"
        )
    if surface.boundary_count < 2:
        raise InvalidStabilization("cannot destabilize past one boundary component")
    if drop_index is None:
        drop_index = next(
            (i for i in range(len(cls) - 1, -1, -1) if abs(cls[i]) == 1), None
        )
        if drop_index is None:
            raise InvalidStabilization(
                f"class of {curve!r} has no unimodular coordinate to drop"
            )
    if abs(cls[drop_index]) != 1:
        raise InvalidStabilization(
            f"class of {curve!r} is not unimodular at index {drop_index}"
        )

    def reduce(vec):
        factor = vec[drop_index] * cls[drop_index]
        reduced = [v - factor * c for v, c in zip(vec, cls)]
        del reduced[drop_index]
        return tuple(reduced)

    curves = tuple(
        (name, reduce(vec)) for name, vec in surface.curves if name != curve
    )
    boundaries = list(surface.boundary_classes)
    if drop_boundary is None:
        drop_boundary = len(boundaries) - 1
    if not 0 <= drop_boundary < len(boundaries):
        raise InvalidStabilization("no such boundary component")
    del boundaries[drop_boundary]
    keep = [i for i in range(len(cls)) if i != drop_index]
    pairing = tuple(
        tuple(surface.pairing[i][j] for j in keep) for i in keep
    )
    destabilized = SurfaceModel(
        genus=surface.genus,
        boundary_count=surface.boundary_count - 1,
        pairing=pairing,
        curves=curves,
        boundary_classes=tuple(reduce(b) for b in boundaries),
    )
    new_word = letters[: hits[0]] + letters[hits[0] + 1:]
    return destabilized, new_word


def cap_off(surface: SurfaceModel, letters, boundary_index: int):
    """Fill a boundary component with a disk.

    Twists along curves whose class is the capped boundary class (either
    orientation) cancel and are deleted; the remaining classes are
    reduced modulo the capped class.  The capped class must be in the
    radical of the pairing, which holds for honest boundary classes.
    """
    letters = tuple(letters)
    if surface.boundary_count <= 1:
        raise CannotCapLastBoundary("a page needs at least one binding component")
    if not 0 <= boundary_index < len(surface.boundary_classes):
        raise ValueError(f"no boundary class at index {boundary_index}")
    capped = surface.boundary_classes[boundary_index]
    rank = surface.h1_rank
    for j in range(rank):
        if sum(capped[i] * surface.pairing[i][j] for i in range(rank)) != 0:
            raise ValueError("capped boundary class must pair to zero with H1")

    def matches(vec):
        return vec == capped or vec == tuple(-x for x in capped)

    survivors = tuple(
        letter for letter in letters if not matches(surface.curve_class(letter[0]))
    )
    if all(x == 0 for x in capped):
        # Null-homologous boundary: the lattice does not shrink, but the
        # surface loses the component (a genus handle absorbs the rank).
        raise ValueError("capping a null-homologous boundary is not modeled")
    drop = next((i for i in range(rank - 1, -1, -1) if abs(capped[i]) == 1), None)
    if drop is None:
        raise ValueError("capped boundary class must be unimodular somewhere")

    def reduce(vec):
        factor = vec[drop] * capped[drop]
        reduced = [v - factor * c for v, c in zip(vec, capped)]
        del reduced[drop]
        return tuple(reduced)

    keep = [i for i in range(rank) if i != drop]
    boundaries = tuple(
        reduce(b)
        for i, b in enumerate(surface.boundary_classes)
        if i != boundary_index
    )
    capped_surface = SurfaceModel(
        genus=surface.genus,
        boundary_count=surface.boundary_count - 1,
        pairing=tuple(tuple(surface.pairing[i][j] for j in keep) for i in keep),
        curves=tuple(
            (name, reduce(vec))
            for name, vec in surface.curves
            if not matches(vec)
        ),
        boundary_classes=boundaries,
    )
    return capped_surface, survivors


def attach_surgery_twists(
    surface: SurfaceModel,
    letters,
    knot_curve: str,
    pushoff_curve: str,
    n: int,
):
    """Monodromy of integer contact n-surgery with the all-negative choice:
    append one negative twist along the surgery curve and n - 1 positive
    twists along its stabilized pushoff."""
    if n < 1:
        raise ValueError(f"surgery parameter n must be >= 1, got {n}")
    for name in (knot_curve, pushoff_curve):
        if not surface.has_curve(name):
            raise UnknownCurve(f"curve {name!r} is not in the alphabet")
    return tuple(letters) + ((knot_curve, MINUS),) + ((pushoff_curve, PLUS),) * (n - 1)


def binding_vanishing_rule(
    ambient_invariant: InvariantStatus, b1: int
) -> BindingVerdict:
    """A binding of an open book for a structure with vanishing invariant on
    a rational homology sphere has vanishing framed invariants at every
    framing."""
    if ambient_invariant is InvariantStatus.ZERO and b1 == 0:
        return BindingVerdict.FORCES_ZERO
    return BindingVerdict.NO_CONCLUSION

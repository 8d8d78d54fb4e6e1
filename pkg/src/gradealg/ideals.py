"""Ideals, ideal arithmetic, and lattice enumeration.

Ideals are stored as sorted element index arrays plus an integer bitmask.
Generation works by one additive closure over a multiplicatively saturated
seed: for a two-sided ideal the seed {x} + Rx + xR + RxR is already closed
under left and right multiplication, so closing it additively gives the
ideal in a single pass.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import bitsets
from .caps import Caps, DEFAULT_CAPS, CapExceeded
from .core import FiniteRing
from .grading import GradedRing
from .results import CheckResult

SIDEDNESS = ("two-sided", "left", "right", "subgroup")


class Ideal:
    """An additively closed, sided-closed element set of a FiniteRing.

    The constructor trusts that the element set is already closed; build
    from generators with generate(). Equality compares the element sets of
    ideals in the same ring, ignoring the sidedness tag.
    """

    __slots__ = ("ring", "elements", "mask", "bits", "sidedness")

    def __init__(self, ring: FiniteRing, elements, sidedness: str = "two-sided"):
        if sidedness not in SIDEDNESS:
            raise ValueError(f"unknown sidedness {sidedness!r}")
        self.ring = ring
        self.elements = np.unique(np.asarray(elements, dtype=np.int64))
        mask = np.zeros(ring.order, dtype=bool)
        mask[self.elements] = True
        self.mask = mask
        self.bits = bitsets.from_mask(mask)
        self.sidedness = sidedness

    def contains(self, x: int) -> bool:
        return bool(self.mask[int(x)])

    __contains__ = contains

    def __len__(self) -> int:
        return int(self.elements.size)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring is other.ring and self.bits == other.bits

    def __hash__(self) -> int:
        return hash((id(self.ring), self.bits))

    def issubset(self, other: "Ideal") -> bool:
        return bitsets.issubset(self.bits, other.bits)

    def is_zero(self) -> bool:
        return len(self) == 1

    def is_whole(self) -> bool:
        return len(self) == self.ring.order

    def generators(self) -> list[int]:
        """A small generating set, found greedily; empty for the zero ideal."""
        if self.is_zero():
            return []
        gens: list[int] = []
        have = Ideal(self.ring, [self.ring.zero], self.sidedness)
        for _ in range(len(self)):
            rest = self.elements[~have.mask[self.elements]]
            if rest.size == 0:
                break
            gens.append(int(rest[0]))
            have = generate(self.ring, gens, self.sidedness)
        return gens

    def generator_labels(self) -> list[str]:
        return [self.ring.labels[g] for g in self.generators()]

    def __repr__(self) -> str:
        if self.is_whole():
            body = "whole ring"
        elif self.is_zero():
            body = "{0}"
        else:
            body = "<" + ", ".join(self.generator_labels()) + ">"
        return f"Ideal({self.sidedness}, {body}, size {len(self)})"


def describe_ideal(ideal: Ideal) -> dict:
    """Certificate-friendly view: generators, size, sidedness."""
    return {
        "generators": ideal.generator_labels(),
        "generator_indices": [int(g) for g in ideal.generators()],
        "size": len(ideal),
        "sidedness": ideal.sidedness,
        "is_whole_ring": ideal.is_whole(),
    }


def _additive_span(ring: FiniteRing, elems) -> tuple[np.ndarray, list[int]]:
    """Additive closure plus the greedy generators that built it.

    Grows a subgroup one generator at a time: adding g replaces the group
    H by H + Zg, which is again a subgroup because addition is abelian.
    Work stays proportional to the final size instead of its square.
    """
    arr = np.asarray(list(elems) if not isinstance(elems, np.ndarray) else elems,
                     dtype=np.int64).ravel()
    mask = np.zeros(ring.order, dtype=bool)
    mask[ring.zero] = True
    have = np.asarray([ring.zero], dtype=np.int64)
    gens: list[int] = []
    for e in arr:
        e = int(e)
        if mask[e]:
            continue
        gens.append(e)
        zg = _cyclic_additive(ring, e)
        have = np.unique(ring.add[np.ix_(have, zg)])
        mask[:] = False
        mask[have] = True
    return have, gens


def additive_closure(ring: FiniteRing, elems) -> np.ndarray:
    """Smallest additively closed set containing elems and zero."""
    return _additive_span(ring, elems)[0]


def _cyclic_additive(ring: FiniteRing, x: int) -> np.ndarray:
    out = [ring.zero]
    cur = int(x)
    while cur != ring.zero:
        out.append(cur)
        cur = int(ring.add[cur, x])
    return np.unique(np.asarray(out, dtype=np.int64))


def generate(ring: FiniteRing, gens, sidedness: str = "two-sided") -> Ideal:
    """The sided ideal generated by the given elements.

    two-sided seeds {x} + Rx + xR + RxR, left seeds {x} + Rx, right seeds
    {x} + xR, subgroup just {x}; one additive closure finishes the job.
    """
    if sidedness not in SIDEDNESS:
        raise ValueError(f"unknown sidedness {sidedness!r}")
    gens = np.unique(np.asarray(list(gens), dtype=np.int64))
    if gens.size == 0:
        return Ideal(ring, [ring.zero], sidedness)
    if gens.min() < 0 or gens.max() >= ring.order:
        raise ValueError("generator index out of range")
    pieces = [gens]
    if sidedness in ("two-sided", "left"):
        pieces.append(np.unique(ring.mul[:, gens]))
    if sidedness in ("two-sided", "right"):
        pieces.append(np.unique(ring.mul[gens, :]))
    if sidedness == "two-sided":
        right_part = np.unique(ring.mul[gens, :])
        pieces.append(np.unique(ring.mul[:, right_part]))
    seed = np.unique(np.concatenate(pieces))
    return Ideal(ring, additive_closure(ring, seed), sidedness)


def _closed_under(ring: FiniteRing, mask: np.ndarray, sidedness: str) -> bool:
    elems = np.flatnonzero(mask)
    if sidedness in ("two-sided", "left"):
        if not mask[ring.mul[:, elems]].all():
            return False
    if sidedness in ("two-sided", "right"):
        if not mask[ring.mul[elems, :]].all():
            return False
    return True


def ideal_sum(a: Ideal, b: Ideal) -> Ideal:
    if a.ring is not b.ring:
        raise ValueError("ideals live in different rings")
    if a.sidedness != b.sidedness:
        raise ValueError("ideal sum needs matching sidedness")
    merged = np.concatenate([a.elements, b.elements])
    return Ideal(a.ring, additive_closure(a.ring, merged), a.sidedness)


def ideal_intersect(a: Ideal, b: Ideal) -> Ideal:
    if a.ring is not b.ring:
        raise ValueError("ideals live in different rings")
    tag = a.sidedness if a.sidedness == b.sidedness else "subgroup"
    mask = a.mask & b.mask
    return Ideal(a.ring, np.flatnonzero(mask), tag)


def subset_product(ring: FiniteRing, a, b) -> np.ndarray:
    """Additive closure of all pairwise products of two element sets."""
    a = np.asarray(list(a), dtype=np.int64)
    b = np.asarray(list(b), dtype=np.int64)
    if a.size == 0 or b.size == 0:
        return np.asarray([ring.zero], dtype=np.int64)
    prods = np.unique(ring.mul[np.ix_(a, b)])
    return additive_closure(ring, prods)


def ideal_product(a: Ideal, b: Ideal) -> Ideal:
    """Additive closure of pairwise products, then sided closure if needed.

    For two ideals with the same sidedness the pairwise-product closure is
    already sided-closed; the check is cheap and the repair path exists for
    mixed tags.
    """
    if a.ring is not b.ring:
        raise ValueError("ideals live in different rings")
    ring = a.ring
    closure = subset_product(ring, a.elements, b.elements)
    tag = a.sidedness if a.sidedness == b.sidedness else "subgroup"
    if tag != "subgroup":
        mask = np.zeros(ring.order, dtype=bool)
        mask[closure] = True
        if not _closed_under(ring, mask, tag):
            return generate(ring, closure, tag)
    return Ideal(ring, closure, tag)


def is_graded(gr: GradedRing, target) -> CheckResult:
    """Does every element of the set keep all its components inside?"""
    if isinstance(target, Ideal):
        elems = target.elements
        mask = target.mask
    else:
        elems = np.unique(np.asarray(list(target), dtype=np.int64))
        mask = np.zeros(gr.ring.order, dtype=bool)
        mask[elems] = True
    parts = gr.decomp[elems]
    bad = ~mask[parts]
    if bad.any():
        i, g = np.argwhere(bad)[0]
        x = int(elems[i])
        comp = int(parts[i, g])
        return CheckResult(
            "is-graded",
            False,
            {
                "x": gr.ring.labels[x],
                "x_index": x,
                "degree": gr.group.labels[g],
                "component": gr.ring.labels[comp],
                "component_index": comp,
            },
            f"{gr.ring.labels[x]} is in the set but its degree "
            f"{gr.group.labels[g]} part {gr.ring.labels[comp]} is not",
        )
    return CheckResult("is-graded", True, {"size": int(elems.size)},
                       "every component of every member stays inside")


def _principal_graded(gr: GradedRing, x: int, memo: dict) -> Ideal:
    ring = gr.ring
    zx = _cyclic_additive(ring, x)
    col = np.unique(ring.mul[:, x])
    row = np.unique(ring.mul[x, :])
    key = (zx.tobytes(), col.tobytes(), row.tobytes())
    hit = memo.get(key)
    if hit is None:
        # R(xR) additively spans the same set as R applied to additive
        # generators of xR, because r(a+b) = ra + rb.
        _, row_gens = _additive_span(ring, row)
        if row_gens:
            rxr = np.unique(ring.mul[:, row_gens])
        else:
            rxr = np.asarray([ring.zero], dtype=np.int64)
        seed = np.unique(np.concatenate([zx, col, row, rxr.ravel()]))
        hit = Ideal(ring, additive_closure(ring, seed))
        memo[key] = hit
    return hit


def principal_graded_ideal(gr: GradedRing, x: int) -> Ideal:
    """Two-sided ideal of one homogeneous element; always graded."""
    memo = gr._cache.setdefault("principal_memo", {})
    return _principal_graded(gr, int(x), memo)


def all_graded_ideals(gr: GradedRing, caps: Caps = DEFAULT_CAPS) -> list[Ideal]:
    """Every two-sided graded ideal, via join closure of principal ideals.

    A graded ideal is the sum of the principal ideals of its homogeneous
    elements, so closing the homogeneous principals under pairwise sum
    reaches the whole lattice. Results are sorted by (size, elements) and
    cached on the graded ring.
    """
    cached = gr._cache.get("graded_ideals")
    if cached is not None:
        return cached
    ring = gr.ring
    if ring.order > caps.lattice:
        raise CapExceeded(
            f"ring order {ring.order} exceeds the lattice cap {caps.lattice}"
        )
    hom = gr.homogeneous_elements()
    memo = gr._cache.setdefault("principal_memo", {})
    principals: dict[int, Ideal] = {}
    for x in hom:
        if int(x) == ring.zero:
            continue
        ideal = _principal_graded(gr, int(x), memo)
        principals[ideal.bits] = ideal
    zero = Ideal(ring, [ring.zero])
    lattice: dict[int, Ideal] = {zero.bits: zero}
    for ideal in principals.values():
        lattice[ideal.bits] = ideal
    frontier = list(principals.values())
    whole = (1 << ring.order) - 1
    while frontier:
        current = frontier.pop()
        for p in principals.values():
            if bitsets.issubset(p.bits, current.bits):
                continue
            if current.bits == whole:
                break
            merged = ideal_sum(current, p)
            if merged.bits not in lattice:
                lattice[merged.bits] = merged
                frontier.append(merged)
    result = sorted(lattice.values(), key=lambda i: (len(i), tuple(i.elements)))
    gr._cache["graded_ideals"] = result
    return result


def all_ideals(ring: FiniteRing, sidedness: str = "two-sided",
               caps: Caps = DEFAULT_CAPS) -> list[Ideal]:
    """Every sided ideal of the ring, by the same join-closure method."""
    if ring.order > caps.lattice:
        raise CapExceeded(
            f"ring order {ring.order} exceeds the lattice cap {caps.lattice}"
        )
    principals: dict[int, Ideal] = {}
    for x in range(ring.order):
        if x == ring.zero:
            continue
        ideal = generate(ring, [x], sidedness)
        principals.setdefault(ideal.bits, ideal)
    zero = Ideal(ring, [ring.zero], sidedness)
    lattice: dict[int, Ideal] = {zero.bits: zero}
    for ideal in principals.values():
        lattice[ideal.bits] = ideal
    frontier = list(principals.values())
    while frontier:
        current = frontier.pop()
        for p in principals.values():
            if bitsets.issubset(p.bits, current.bits):
                continue
            merged = ideal_sum(current, p)
            if merged.bits not in lattice:
                lattice[merged.bits] = merged
                frontier.append(merged)
    return sorted(lattice.values(), key=lambda i: (len(i), tuple(i.elements)))


def maximal_graded_ideals(gr: GradedRing, caps: Caps = DEFAULT_CAPS) -> list[Ideal]:
    """Proper graded ideals maximal under inclusion."""
    lattice = all_graded_ideals(gr, caps)
    proper = [i for i in lattice if not i.is_whole()]
    out = []
    for i in proper:
        if not any(i is not j and i.issubset(j) for j in proper):
            out.append(i)
    return out


@dataclass
class ColonSet:
    """(P : Y) inside one component: all x in R_g with x*Y inside P."""

    degree: int
    elements: np.ndarray

    def __len__(self) -> int:
        return int(self.elements.size)


def colon(gr: GradedRing, p, y, g: int) -> ColonSet:
    """Component colon set {x in R_g : x*y in P for every y in Y}.

    Y may be any element set of the ring, P any additively closed set or
    Ideal; the result is an additive subgroup of R_g (verified).
    """
    ring = gr.ring
    comp = gr.components[int(g)]
    pmask = p.mask if isinstance(p, Ideal) else None
    if pmask is None:
        pelems = np.unique(np.asarray(list(p), dtype=np.int64))
        pmask = np.zeros(ring.order, dtype=bool)
        pmask[pelems] = True
    yarr = np.unique(np.asarray(list(y), dtype=np.int64))
    if yarr.size == 0:
        elems = comp.copy()
    else:
        prods = ring.mul[np.ix_(comp, yarr)]
        keep = pmask[prods].all(axis=1)
        elems = comp[keep]
    out = ColonSet(int(g), elems)
    emask = np.zeros(ring.order, dtype=bool)
    emask[elems] = True
    if not emask[ring.zero] or not emask[ring.add[np.ix_(elems, elems)]].all():
        raise ValueError("colon set failed the additive subgroup check")
    return out


def re_submodules(gr: GradedRing, g: int, caps: Caps = DEFAULT_CAPS) -> list[np.ndarray]:
    """All R_e-submodules of the component R_g, as sorted element arrays.

    Every submodule is a join of cyclic ones (Zx + R_e x), so join closure
    over the cyclic submodules enumerates them all. Cached per degree.
    """
    g = int(g)
    cache = gr._cache.setdefault("re_submodules", {})
    if g in cache:
        return cache[g]
    ring = gr.ring
    comp = gr.components[g]
    if comp.size > caps.submodule:
        raise CapExceeded(
            f"component of degree {gr.group.labels[g]} has {comp.size} elements, "
            f"submodule cap is {caps.submodule}"
        )
    re = gr.components[int(gr.group.identity)]
    cyclic: dict[bytes, np.ndarray] = {}
    for x in comp:
        seed = np.concatenate([[x], ring.mul[re, int(x)]])
        sub = additive_closure(ring, np.unique(seed))
        cyclic.setdefault(sub.tobytes(), sub)
    zero = np.asarray([ring.zero], dtype=np.int64)
    found: dict[bytes, np.ndarray] = {zero.tobytes(): zero}
    for sub in cyclic.values():
        found.setdefault(sub.tobytes(), sub)
    frontier = list(cyclic.values())
    while frontier:
        current = frontier.pop()
        for sub in cyclic.values():
            merged = additive_closure(ring, np.concatenate([current, sub]))
            key = merged.tobytes()
            if key not in found:
                found[key] = merged
                frontier.append(merged)
    result = sorted(found.values(), key=lambda a: (a.size, tuple(a)))
    cache[g] = result
    return result

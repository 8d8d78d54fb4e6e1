"""Graded primeness predicates, weakly systems, and the GP/GN/GW radicals.

Every predicate returns a CheckResult whose certificate names concrete
witnesses. Verdicts are three-valued: None marks a question that does not
apply (for example the x*R*y form on a ring without unity).

The radicals use a WHOLE_RING marker when the defining family is empty
(no graded prime at all, or no weakly prime ideal above the input). The
marker is deliberately not the same thing as the improper ideal R: reaching
past every candidate is a different outcome than intersecting down to R.
"""

from __future__ import annotations

import numpy as np

from . import bitsets
from .caps import Caps, DEFAULT_CAPS, CapExceeded
from .grading import GradedRing
from .ideals import (
    Ideal,
    all_graded_ideals,
    describe_ideal,
    ideal_product,
    ideal_sum,
    is_graded,
    re_submodules,
    subset_product,
    _closed_under,
)
from .results import CheckResult


class _WholeRing:
    """Singleton marker: the radical construction found no candidates."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "WHOLE_RING"


WHOLE_RING = _WholeRing()


def _require_graded_two_sided(gr: GradedRing, p: Ideal, allow_whole: bool = False) -> None:
    if not isinstance(p, Ideal):
        raise ValueError(f"expected an Ideal, got {type(p).__name__}")
    if p.ring is not gr.ring:
        raise ValueError("the ideal lives in a different ring")
    if not allow_whole and p.is_whole():
        raise ValueError("the predicate needs a proper ideal")
    if not _closed_under(gr.ring, p.mask, "two-sided"):
        raise ValueError("not a two-sided ideal")
    graded = is_graded(gr, p)
    if graded.verdict is not True:
        raise ValueError("not a graded ideal: " + graded.narration)


def _lattice_product(gr: GradedRing, a: Ideal, b: Ideal) -> Ideal:
    cache = gr._cache.setdefault("lattice_products", {})
    key = (a.bits, b.bits)
    hit = cache.get(key)
    if hit is None:
        hit = ideal_product(a, b)
        cache[key] = hit
    return hit


def is_graded_prime(gr: GradedRing, p: Ideal, caps: Caps = DEFAULT_CAPS) -> CheckResult:
    """Ideal form: I*J inside P forces I inside P or J inside P.

    I and J range over all two-sided graded ideals, the whole ring included.
    """
    _require_graded_two_sided(gr, p)
    cache = gr._cache.setdefault("prime_results", {})
    hit = cache.get(p.bits)
    if hit is not None:
        return hit
    lattice = all_graded_ideals(gr, caps)
    pairs = 0
    result = None
    for a in lattice:
        if a.issubset(p):
            continue
        for b in lattice:
            if b.issubset(p):
                continue
            pairs += 1
            prod = _lattice_product(gr, a, b)
            if prod.issubset(p):
                result = CheckResult(
                    "graded-prime",
                    False,
                    {"I": describe_ideal(a), "J": describe_ideal(b),
                     "product_size": len(prod)},
                    "the product of two graded ideals lands inside while "
                    "neither factor does",
                )
                break
        if result is not None:
            break
    if result is None:
        result = CheckResult("graded-prime", True,
                             {"ideal_pairs_checked": pairs},
                             "no graded ideal pair violates the prime condition")
    cache[p.bits] = result
    return result


def is_graded_weakly_prime(gr: GradedRing, p: Ideal,
                           caps: Caps = DEFAULT_CAPS) -> CheckResult:
    """Ideal form with the zero product excused: 0 != I*J inside P forces
    I inside P or J inside P."""
    _require_graded_two_sided(gr, p)
    cache = gr._cache.setdefault("wp_results", {})
    hit = cache.get(p.bits)
    if hit is not None:
        return hit
    lattice = all_graded_ideals(gr, caps)
    pairs = 0
    result = None
    for a in lattice:
        if a.issubset(p):
            continue
        for b in lattice:
            if b.issubset(p):
                continue
            pairs += 1
            prod = _lattice_product(gr, a, b)
            if prod.is_zero():
                continue
            if prod.issubset(p):
                result = CheckResult(
                    "graded-weakly-prime",
                    False,
                    {"I": describe_ideal(a), "J": describe_ideal(b),
                     "product_size": len(prod)},
                    "a nonzero product of two graded ideals lands inside "
                    "while neither factor does",
                )
                break
        if result is not None:
            break
    if result is None:
        result = CheckResult("graded-weakly-prime", True,
                             {"ideal_pairs_checked": pairs},
                             "every nonzero product that lands inside has a "
                             "factor inside")
    cache[p.bits] = result
    return result


def is_component_weakly_prime(gr: GradedRing, p: Ideal,
                              caps: Caps = DEFAULT_CAPS) -> CheckResult:
    """Submodule form: I and J range over identity-component submodules of
    single components R_g and R_h instead of over graded ideals."""
    _require_graded_two_sided(gr, p)
    ring = gr.ring
    pairs = 0
    for g in range(gr.group.order):
        subs_g = [s for s in re_submodules(gr, g, caps) if not p.mask[s].all()]
        if not subs_g:
            continue
        for h in range(gr.group.order):
            subs_h = [s for s in re_submodules(gr, h, caps) if not p.mask[s].all()]
            for a in subs_g:
                for b in subs_h:
                    pairs += 1
                    prod = subset_product(ring, a, b)
                    if prod.size == 1:
                        continue
                    if p.mask[prod].all():
                        return CheckResult(
                            "component-weakly-prime",
                            False,
                            {
                                "degree_g": gr.group.labels[g],
                                "degree_h": gr.group.labels[h],
                                "I": [ring.labels[x] for x in a],
                                "J": [ring.labels[x] for x in b],
                                "product": [ring.labels[x] for x in prod],
                            },
                            "a nonzero submodule product lands inside while "
                            "neither submodule does",
                        )
    return CheckResult("component-weakly-prime", True,
                       {"submodule_pairs_checked": pairs},
                       "no submodule pair violates the condition")


def is_xry_weakly_prime(gr: GradedRing, p: Ideal,
                        caps: Caps = DEFAULT_CAPS) -> CheckResult:
    """Element form: 0 != x*R*y inside P forces x or y inside P.

    Needs a unity; without one, x*1*y is missing from x*R*y and the form
    stops being comparable to the others, so the verdict is None.
    """
    _require_graded_two_sided(gr, p)
    ring = gr.ring
    if ring.unity is None:
        return CheckResult("xry-weakly-prime", None, {"reason": "no-unity"},
                           "the ring has no unity, so the element form does "
                           "not apply")
    hom = gr.homogeneous_elements()
    outside = hom[~p.mask[hom]]
    zero = ring.zero
    for x in outside:
        through = ring.mul[np.ix_(ring.mul[int(x), :], outside)]
        landed = p.mask[through].all(axis=0)
        nonzero = (through != zero).any(axis=0)
        bad = landed & nonzero
        if bad.any():
            j = int(np.argmax(bad))
            y = int(outside[j])
            col = through[:, j]
            r = int(np.argmax(col != zero))
            return CheckResult(
                "xry-weakly-prime",
                False,
                {
                    "x": ring.labels[int(x)],
                    "y": ring.labels[y],
                    "sample_r": ring.labels[r],
                    "sample_xry": ring.labels[int(col[r])],
                    "xRy": [ring.labels[int(v)] for v in np.unique(col)],
                },
                "x*R*y is nonzero and sits inside while x and y stay outside",
            )
    return CheckResult("xry-weakly-prime", True,
                       {"pairs_checked": int(outside.size) ** 2},
                       "no homogeneous pair violates the x*R*y condition")


def _system_signatures(gr: GradedRing, caps: Caps):
    """Deduplicated (I&h, J&h, IJ&h) bitmask triples over nonzero
    homogeneous elements, one representative ideal pair each.

    A candidate set S fails to be a weakly system exactly when some triple
    has S meeting the first two parts but not the third, so these
    signatures are all that membership tests ever need.
    """
    cached = gr._cache.get("system_sigs")
    if cached is not None:
        return cached
    ring = gr.ring
    lattice = all_graded_ideals(gr, caps)
    hom = gr.homogeneous_elements()
    hnz = hom[hom != ring.zero]
    hbits = bitsets.from_indices(hnz)
    seen: dict[tuple[int, int, int], tuple[Ideal, Ideal]] = {}
    for a in lattice:
        ah = a.bits & hbits
        if ah == 0:
            continue
        for b in lattice:
            bh = b.bits & hbits
            if bh == 0:
                continue
            prod = _lattice_product(gr, a, b)
            if prod.is_zero():
                continue
            sig = (ah, bh, prod.bits & hbits)
            if sig not in seen:
                seen[sig] = (a, b)
    cached = (list(seen.keys()), list(seen.values()), hbits)
    gr._cache["system_sigs"] = cached
    return cached


def is_weakly_system(gr: GradedRing, s, caps: Caps = DEFAULT_CAPS) -> CheckResult:
    """Is S a weakly system: I and J meet S and I*J is nonzero, then I*J
    meets S too (I, J graded ideals, S a set of nonzero homogeneous
    elements)."""
    ring = gr.ring
    s = np.unique(np.asarray(list(s), dtype=np.int64))
    if s.size == 0:
        raise ValueError("a weakly system must be a nonempty set")
    hom_mask = gr.hom_mask
    for x in s:
        if int(x) == ring.zero:
            raise ValueError("a weakly system cannot contain zero")
        if not hom_mask[int(x)]:
            raise ValueError(
                f"{ring.labels[int(x)]} is not homogeneous, so it cannot "
                "belong to a weakly system")
    sigs, reps, _ = _system_signatures(gr, caps)
    sbits = bitsets.from_indices(s)
    for (ah, bh, ch), (a, b) in zip(sigs, reps):
        if (sbits & ah) and (sbits & bh) and not (sbits & ch):
            return CheckResult(
                "weakly-system",
                False,
                {"I": describe_ideal(a), "J": describe_ideal(b),
                 "product_meets_s": False},
                "both factors meet S and the product is nonzero, but the "
                "product misses S",
            )
    return CheckResult("weakly-system", True,
                       {"signatures_checked": len(sigs)},
                       "every nonzero graded ideal product behaves")


def weakly_systems_within(gr: GradedRing, allowed: np.ndarray,
                          caps: Caps = DEFAULT_CAPS):
    """All weakly systems contained in the given element set.

    Returns (subsets, allowed) where subsets is an array of bitmask
    integers over positions of the allowed array. Exponential in
    len(allowed), so the systems cap guards it.
    """
    allowed = np.unique(np.asarray(allowed, dtype=np.int64))
    k = int(allowed.size)
    if k > caps.systems:
        raise CapExceeded(
            f"enumerating systems inside a {k}-element set exceeds the "
            f"systems cap {caps.systems}")
    if k == 0:
        return np.zeros(0, dtype=np.uint64), allowed
    sigs, _, _ = _system_signatures(gr, caps)
    subs = np.arange(1, 1 << k, dtype=np.uint64)
    valid = np.ones(subs.size, dtype=bool)
    if sigs:
        pos = {int(e): i for i, e in enumerate(allowed)}
        albits = bitsets.from_indices(allowed)

        def project(bits: int) -> np.uint64:
            out = 0
            for e in bitsets.to_indices(bits & albits):
                out |= 1 << pos[int(e)]
            return np.uint64(out)

        for ah, bh, ch in sigs:
            pa, pb, pc = project(ah), project(bh), project(ch)
            if pa == 0 or pb == 0:
                continue
            valid &= ((subs & pa) == 0) | ((subs & pb) == 0) | ((subs & pc) != 0)
    return subs[valid], allowed


def gw_systems(gr: GradedRing, i: Ideal, caps: Caps = DEFAULT_CAPS):
    """GW by its element description: homogeneous x belongs when every
    weakly system through x meets the ideal. Returns a sorted element
    array, or WHOLE_RING when that set is all of h(R) and zero."""
    _require_graded_two_sided(gr, i, allow_whole=True)
    ring = gr.ring
    hom = gr.homogeneous_elements()
    hnz = hom[hom != ring.zero]
    hc = hnz[~i.mask[hnz]]
    systems, allowed = weakly_systems_within(gr, hc, caps)
    if systems.size:
        union = np.uint64(np.bitwise_or.reduce(systems))
        taken = (union >> np.arange(allowed.size, dtype=np.uint64)) & np.uint64(1)
        kept = allowed[taken == 0]
    else:
        kept = allowed
    inside = hnz[i.mask[hnz]]
    gw = np.unique(np.concatenate([[ring.zero], inside, kept]))
    if gw.size == hom.size:
        return WHOLE_RING
    return gw


def gw_intersection(gr: GradedRing, i: Ideal, caps: Caps = DEFAULT_CAPS):
    """GW by its ideal description: meet of the graded weakly prime ideals
    above the input, WHOLE_RING when there is none."""
    _require_graded_two_sided(gr, i, allow_whole=True)
    lattice = all_graded_ideals(gr, caps)
    above = [p for p in lattice
             if not p.is_whole() and i.issubset(p)
             and is_graded_weakly_prime(gr, p, caps).verdict]
    if not above:
        return WHOLE_RING
    mask = np.ones(gr.ring.order, dtype=bool)
    for p in above:
        mask &= p.mask
    return Ideal(gr.ring, np.flatnonzero(mask))


def gp_radical(gr: GradedRing, caps: Caps = DEFAULT_CAPS):
    """Meet of all graded prime ideals; WHOLE_RING when there is none."""
    lattice = all_graded_ideals(gr, caps)
    primes = [p for p in lattice
              if not p.is_whole() and is_graded_prime(gr, p, caps).verdict]
    if not primes:
        return WHOLE_RING
    mask = np.ones(gr.ring.order, dtype=bool)
    for p in primes:
        mask &= p.mask
    return Ideal(gr.ring, np.flatnonzero(mask))


def gn_radical(gr: GradedRing, caps: Caps = DEFAULT_CAPS) -> Ideal:
    """Join of the square-zero graded ideals. Can be the whole ring (it is
    for any ring with zero multiplication); that is an honest ideal, not
    the WHOLE_RING marker."""
    lattice = all_graded_ideals(gr, caps)
    total = Ideal(gr.ring, [gr.ring.zero])
    for a in lattice:
        if _lattice_product(gr, a, a).is_zero():
            total = ideal_sum(total, a)
    return total


def all_graded_weakly_prime(gr: GradedRing, caps: Caps = DEFAULT_CAPS) -> CheckResult:
    """Are all proper graded ideals weakly prime?

    The certificate carries a second route: every product of two proper
    graded ideals collapses to one of the factors or to zero. The two
    routes agree on every ring this library can build; the verdict is the
    direct one.
    """
    lattice = all_graded_ideals(gr, caps)
    proper = [p for p in lattice if not p.is_whole()]
    direct_witness = None
    for p in proper:
        res = is_graded_weakly_prime(gr, p, caps)
        if res.verdict is False:
            direct_witness = {"P": describe_ideal(p), "detail": res.certificate}
            break
    collapse_witness = None
    for a in proper:
        for b in proper:
            prod = _lattice_product(gr, a, b)
            if prod.is_zero() or prod.bits == a.bits or prod.bits == b.bits:
                continue
            collapse_witness = {
                "P": describe_ideal(a),
                "Q": describe_ideal(b),
                "PQ": describe_ideal(prod),
            }
            break
        if collapse_witness is not None:
            break
    direct = direct_witness is None
    collapsed = collapse_witness is None
    cert: dict = {
        "direct": direct,
        "product_collapse": collapsed,
        "proper_graded_ideals": len(proper),
    }
    if direct_witness is not None:
        cert["direct_witness"] = direct_witness
    if collapse_witness is not None:
        cert["collapse_witness"] = collapse_witness
    if direct == collapsed:
        tail = "both routes agree"
    else:
        tail = "the two routes disagree, which should be impossible"
    return CheckResult("all-graded-weakly-prime", direct, cert,
                       ("every proper graded ideal is weakly prime; " if direct
                        else "some proper graded ideal is not weakly prime; ") + tail)

"""Elementwise (total) primeness over homogeneous elements, twin zeros,
and the colon-set characterization of the degreewise form."""

from __future__ import annotations

import numpy as np

from . import bitsets
from .caps import Caps, DEFAULT_CAPS
from .grading import GradedRing
from .ideals import Ideal, all_graded_ideals, describe_ideal
from .prime import _require_graded_two_sided
from .results import CheckResult


def is_graded_total_prime(gr: GradedRing, p: Ideal) -> CheckResult:
    """x*y inside P forces x or y inside, for homogeneous x and y."""
    _require_graded_two_sided(gr, p)
    ring = gr.ring
    hom = gr.homogeneous_elements()
    outside = hom[~p.mask[hom]]
    prods = ring.mul[np.ix_(outside, outside)]
    bad = p.mask[prods]
    if bad.any():
        i, j = np.argwhere(bad)[0]
        x, y = int(outside[i]), int(outside[j])
        return CheckResult(
            "graded-total-prime",
            False,
            {"x": ring.labels[x], "y": ring.labels[y],
             "xy": ring.labels[int(prods[i, j])]},
            "a product of two homogeneous elements outside lands inside",
        )
    return CheckResult("graded-total-prime", True,
                       {"pairs_checked": int(outside.size) ** 2},
                       "no homogeneous pair multiplies into the ideal")


def is_graded_weakly_total_prime(gr: GradedRing, p: Ideal) -> CheckResult:
    """Same as the total form but the product zero is excused."""
    _require_graded_two_sided(gr, p)
    cache = gr._cache.setdefault("wtp_results", {})
    hit = cache.get(p.bits)
    if hit is not None:
        return hit
    ring = gr.ring
    hom = gr.homogeneous_elements()
    outside = hom[~p.mask[hom]]
    prods = ring.mul[np.ix_(outside, outside)]
    bad = p.mask[prods] & (prods != ring.zero)
    if bad.any():
        i, j = np.argwhere(bad)[0]
        x, y = int(outside[i]), int(outside[j])
        result = CheckResult(
            "graded-weakly-total-prime",
            False,
            {"x": ring.labels[x], "y": ring.labels[y],
             "xy": ring.labels[int(prods[i, j])]},
            "a nonzero product of two homogeneous elements outside lands inside",
        )
    else:
        result = CheckResult("graded-weakly-total-prime", True,
                             {"pairs_checked": int(outside.size) ** 2},
                             "every offending product is zero")
    cache[p.bits] = result
    return result


def is_g_weakly_total_prime(gr: GradedRing, p: Ideal, g: int) -> CheckResult:
    """Degreewise form: x, y both from the degree-g component.

    Only meaningful when P cuts the component properly; if R_g sits inside
    P there is nothing left to test and the verdict is None.
    """
    _require_graded_two_sided(gr, p)
    ring = gr.ring
    g = int(g)
    comp = gr.components[g]
    glabel = gr.group.labels[g]
    inside = p.mask[comp]
    if inside.all():
        return CheckResult(
            "g-weakly-total-prime",
            None,
            {"degree": glabel, "component_size": int(comp.size)},
            f"the ideal swallows the whole degree-{glabel} component, so "
            "the condition has nothing to bite on",
        )
    outside = comp[~inside]
    prods = ring.mul[np.ix_(outside, outside)]
    bad = p.mask[prods] & (prods != ring.zero)
    if bad.any():
        i, j = np.argwhere(bad)[0]
        x, y = int(outside[i]), int(outside[j])
        return CheckResult(
            "g-weakly-total-prime",
            False,
            {"degree": glabel, "x": ring.labels[x], "y": ring.labels[y],
             "xy": ring.labels[int(prods[i, j])]},
            f"a nonzero product inside degree {glabel} lands in the ideal "
            "with both factors outside",
        )
    return CheckResult("g-weakly-total-prime", True,
                       {"degree": glabel,
                        "pairs_checked": int(outside.size) ** 2},
                       f"no degree-{glabel} pair violates the condition")


def _g_total(gr: GradedRing, p: Ideal, g: int):
    """Degreewise total form without the zero excuse; None when the
    component sits inside P."""
    ring = gr.ring
    comp = gr.components[int(g)]
    inside = p.mask[comp]
    if inside.all():
        return None
    outside = comp[~inside]
    prods = ring.mul[np.ix_(outside, outside)]
    return not p.mask[prods].any()


def total_twin_zeros(gr: GradedRing, p: Ideal) -> list[tuple[int, int]]:
    """All pairs of homogeneous elements outside P whose product is zero.

    For a weakly total prime ideal these are exactly the pairs the zero
    excuse forgave; an empty list means weakly total and total coincide.
    """
    _require_graded_two_sided(gr, p)
    ring = gr.ring
    hom = gr.homogeneous_elements()
    outside = hom[~p.mask[hom]]
    prods = ring.mul[np.ix_(outside, outside)]
    hits = np.argwhere(prods == ring.zero)
    return [(int(outside[i]), int(outside[j])) for i, j in hits]


def g_twin_zeros(gr: GradedRing, p: Ideal, g: int) -> list[tuple[int, int]]:
    """Twin zeros with both halves restricted to the degree-g component."""
    _require_graded_two_sided(gr, p)
    ring = gr.ring
    comp = gr.components[int(g)]
    outside = comp[~p.mask[comp]]
    prods = ring.mul[np.ix_(outside, outside)]
    hits = np.argwhere(prods == ring.zero)
    return [(int(outside[i]), int(outside[j])) for i, j in hits]


def colon_characterization(gr: GradedRing, p: Ideal, g: int,
                           caps: Caps = DEFAULT_CAPS,
                           force_singletons: bool = False) -> CheckResult:
    """The colon-set description of the degreewise weakly total form.

    For every nonempty Y inside R_g minus P, compare (P : Y) against
    (P meet R_g) union (0 : Y), all inside R_g. The verdict says whether
    "P is g-weakly total prime" and "every such Y satisfies the identity"
    and "every singleton does" are the same truth value. Above the
    powerset cap only singletons are scanned and the verdict compares two
    clauses instead of three.
    """
    _require_graded_two_sided(gr, p)
    ring = gr.ring
    g = int(g)
    comp = gr.components[g]
    glabel = gr.group.labels[g]
    if p.mask[comp].all():
        return CheckResult(
            "colon-characterization",
            None,
            {"degree": glabel},
            f"the ideal swallows the whole degree-{glabel} component, so "
            "there is no Y to quantify over",
        )
    outside = comp[~p.mask[comp]]
    k = int(outside.size)
    pg_bits = bitsets.from_mask(p.mask[comp])
    psing: list[int] = []
    zsing: list[int] = []
    for y in outside:
        prods = ring.mul[comp, int(y)]
        psing.append(bitsets.from_mask(p.mask[prods]))
        zsing.append(bitsets.from_mask(prods == ring.zero))

    def positions_to_labels(bits: int) -> list[str]:
        return [ring.labels[int(comp[i])] for i in bitsets.to_indices(bits)]

    singleton_ok = True
    singleton_witness = None
    for j in range(k):
        if psing[j] != (pg_bits | zsing[j]):
            singleton_ok = False
            singleton_witness = {
                "Y": [ring.labels[int(outside[j])]],
                "colon_P": positions_to_labels(psing[j]),
                "expected": positions_to_labels(pg_bits | zsing[j]),
            }
            break

    use_powerset = (k <= caps.powerset) and not force_singletons
    subset_ok = None
    subset_witness = None
    subsets_checked = k
    if use_powerset:
        full = (1 << int(comp.size)) - 1
        pfold = [full] * (1 << k)
        zfold = [full] * (1 << k)
        subset_ok = True
        for s in range(1, 1 << k):
            low = s & -s
            j = low.bit_length() - 1
            pfold[s] = pfold[s ^ low] & psing[j]
            zfold[s] = zfold[s ^ low] & zsing[j]
            if subset_ok and pfold[s] != (pg_bits | zfold[s]):
                subset_ok = False
                members = [ring.labels[int(outside[i])]
                           for i in bitsets.to_indices(s)]
                subset_witness = {
                    "Y": members,
                    "colon_P": positions_to_labels(pfold[s]),
                    "expected": positions_to_labels(pg_bits | zfold[s]),
                }
        subsets_checked = (1 << k) - 1

    wtp = is_g_weakly_total_prime(gr, p, g).verdict
    if use_powerset:
        verdict = (wtp == subset_ok) and (subset_ok == singleton_ok)
    else:
        verdict = wtp == singleton_ok
    cert: dict = {
        "degree": glabel,
        "g_weakly_total_prime": wtp,
        "singleton_clause_holds": singleton_ok,
        "subset_clause_holds": subset_ok,
        "subsets_checked": subsets_checked,
        "fallback_singletons": not use_powerset,
    }
    if singleton_witness is not None:
        cert["singleton_witness"] = singleton_witness
    if subset_witness is not None:
        cert["subset_witness"] = subset_witness
    if verdict:
        note = "the colon identity tracks the degreewise verdict exactly"
    else:
        note = "the colon identity and the degreewise verdict disagree"
    return CheckResult("colon-characterization", verdict, cert, note)


def all_graded_weakly_total_prime(gr: GradedRing,
                                  caps: Caps = DEFAULT_CAPS) -> CheckResult:
    """Are all proper graded ideals weakly total prime?"""
    lattice = all_graded_ideals(gr, caps)
    for p in lattice:
        if p.is_whole():
            continue
        res = is_graded_weakly_total_prime(gr, p)
        if res.verdict is False:
            return CheckResult(
                "all-graded-weakly-total-prime",
                False,
                {"P": describe_ideal(p), "detail": res.certificate},
                "some proper graded ideal fails the weakly total condition",
            )
    return CheckResult("all-graded-weakly-total-prime", True,
                       {"proper_graded_ideals":
                        sum(1 for p in lattice if not p.is_whole())},
                       "every proper graded ideal is weakly total prime")


def principal_triple_check(gr: GradedRing, caps: Caps = DEFAULT_CAPS) -> CheckResult:
    """Principal-ideal collapse versus the everywhere-weakly-total property.

    Route one: for all homogeneous a, b the ideal of a*b is the ideal of a,
    the ideal of b, or zero. Route two: every proper graded ideal is weakly
    total prime. The two agree on every ring here; the verdict is route one.
    """
    from .ideals import principal_graded_ideal

    ring = gr.ring
    hom = gr.homogeneous_elements()
    cache = gr._cache.setdefault("principal_by_element", {})

    def pid(x: int) -> Ideal:
        hit = cache.get(x)
        if hit is None:
            hit = principal_graded_ideal(gr, x)
            cache[x] = hit
        return hit

    zero_bits = Ideal(ring, [ring.zero]).bits
    triple_witness = None
    for a in hom:
        ia = pid(int(a))
        for b in hom:
            ab = int(ring.mul[int(a), int(b)])
            iab = pid(ab)
            if iab.bits in (ia.bits, pid(int(b)).bits, zero_bits):
                continue
            triple_witness = {
                "a": ring.labels[int(a)],
                "b": ring.labels[int(b)],
                "ab": ring.labels[ab],
                "ideal_of_ab": describe_ideal(iab),
            }
            break
        if triple_witness is not None:
            break
    every = all_graded_weakly_total_prime(gr, caps)
    triple_ok = triple_witness is None
    cert: dict = {
        "principal_route": triple_ok,
        "all_weakly_total_prime": every.verdict,
    }
    if triple_witness is not None:
        cert["triple_witness"] = triple_witness
    if every.verdict is False:
        cert["ideal_witness"] = every.certificate
    agree = "both routes agree" if triple_ok == every.verdict else \
        "the two routes disagree, which should be impossible"
    return CheckResult("principal-triple", triple_ok, cert,
                       ("principal ideals of products always collapse; "
                        if triple_ok else
                        "a principal ideal of a product escapes the triple; ")
                       + agree)

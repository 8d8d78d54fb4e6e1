"""Group gradings on finite rings and modules.

A grading assigns to every group element g an additive subgroup R_g such
that the R_g sum directly to R and R_g * R_h lands in R_{gh}. Validation
is a hard gate: a GradedRing only exists once every condition has been
checked on the full tables, and every failure names a witness.
"""

from __future__ import annotations

import numpy as np

from . import core
from .core import FiniteGroup, FiniteModule, FiniteRing, ValidationError


class GradingError(ValidationError):
    """A proposed grading failed validation.

    code is one of: not-a-subgroup, not-direct-sum, multiplicativity,
    unity-outside-identity-component, group-not-abelian, not-graded-ideal.
    The witness dict carries the offending indices and labels.
    """

    def __init__(self, code: str, message: str, witness: dict | None = None):
        super().__init__(message)
        self.code = code
        self.witness = witness or {}


def _normalize_components(ring: FiniteRing, group: FiniteGroup, assignment):
    comps = []
    for g in range(group.order):
        raw = None
        if isinstance(assignment, dict):
            raw = assignment.get(g)
        else:
            raw = assignment[g] if g < len(assignment) else None
        if raw is None:
            arr = np.asarray([ring.zero], dtype=np.int64)
        else:
            arr = np.unique(np.asarray(list(raw), dtype=np.int64))
        if arr.size == 0:
            arr = np.asarray([ring.zero], dtype=np.int64)
        if arr.min() < 0 or arr.max() >= ring.order:
            raise GradingError(
                "not-a-subgroup",
                f"component of degree {group.labels[g]} has an index out of range",
            )
        comps.append(arr)
    return comps


class GradedRing:
    """A finite ring with a validated direct-sum grading.

    components[g] is the sorted element array of R_g, decomp[x, g] is the
    degree-g component of x, and comp_mask[g] is the membership row of R_g.
    Use validate_grading to construct one.
    """

    def __init__(self, ring, group, components, decomp, name: str = ""):
        self.ring = ring
        self.group = group
        self.components = components
        self.decomp = decomp
        self.comp_mask = np.zeros((group.order, ring.order), dtype=bool)
        for g, arr in enumerate(components):
            self.comp_mask[g, arr] = True
        self.name = name or f"{ring.name} graded by {group.name}"
        self._cache: dict = {}
        self._hom: np.ndarray | None = None

    def component_of(self, x: int, g: int) -> int:
        """Index of the degree-g component of element x."""
        return int(self.decomp[int(x), int(g)])

    def homogeneous_elements(self) -> np.ndarray:
        """Sorted indices of all homogeneous elements (the set h(R))."""
        if self._hom is None:
            self._hom = np.unique(np.concatenate(self.components))
        return self._hom

    @property
    def hom_mask(self) -> np.ndarray:
        mask = np.zeros(self.ring.order, dtype=bool)
        mask[self.homogeneous_elements()] = True
        return mask

    def degree_of(self, x: int) -> int | None:
        """Degree of a nonzero homogeneous element, else None."""
        x = int(x)
        if x == self.ring.zero:
            return None
        hits = np.flatnonzero(self.comp_mask[:, x])
        return int(hits[0]) if hits.size else None

    def is_trivial(self) -> bool:
        e = self.group.identity
        return len(self.components[e]) == self.ring.order

    def __repr__(self) -> str:
        sizes = ",".join(str(len(c)) for c in self.components)
        return f"GradedRing({self.ring.name} by {self.group.name}; sizes {sizes})"


def validate_grading(ring: FiniteRing, group: FiniteGroup, assignment) -> GradedRing:
    """Check an assignment g -> element set and build the GradedRing.

    assignment maps group element indices to element index collections;
    missing degrees default to the zero component. Raises GradingError
    with a named code and witness on any failure.
    """
    comps = _normalize_components(ring, group, assignment)

    for g, arr in enumerate(comps):
        mask = np.zeros(ring.order, dtype=bool)
        mask[arr] = True
        if not mask[ring.zero]:
            raise GradingError(
                "not-a-subgroup",
                f"component of degree {group.labels[g]} does not contain zero",
                {"degree": g},
            )
        sums = ring.add[np.ix_(arr, arr)]
        bad = ~mask[sums]
        if bad.any():
            i, j = np.argwhere(bad)[0]
            x, y = int(arr[i]), int(arr[j])
            raise GradingError(
                "not-a-subgroup",
                f"component of degree {group.labels[g]} is not additively closed: "
                f"{ring.labels[x]} + {ring.labels[y]} = "
                f"{ring.labels[ring.add[x, y]]} falls outside",
                {"degree": g, "x": x, "y": y},
            )

    total = 1
    for arr in comps:
        total *= arr.size
    if total != ring.order:
        raise GradingError(
            "not-direct-sum",
            f"component sizes multiply to {total}, ring order is {ring.order}",
            {"sizes": [int(a.size) for a in comps]},
        )

    # Pairwise trivial intersections, then surjectivity of the sum map;
    # with matching counts that forces unique decompositions.
    for g in range(group.order):
        for h in range(g + 1, group.order):
            inter = np.intersect1d(comps[g], comps[h])
            extra = inter[inter != ring.zero]
            if extra.size:
                x = int(extra[0])
                raise GradingError(
                    "not-direct-sum",
                    f"{ring.labels[x]} lies in the components of degrees "
                    f"{group.labels[g]} and {group.labels[h]}",
                    {"x": x, "degrees": [g, h]},
                )

    sums = np.asarray([ring.zero], dtype=np.int64)
    strides = []
    for arr in comps:
        sums = ring.add[sums[:, None], arr[None, :]].ravel()
        strides.append(arr.size)
    order_check = np.sort(sums)
    if not np.array_equal(order_check, np.arange(ring.order)):
        dup = order_check[:-1][order_check[:-1] == order_check[1:]]
        if dup.size:
            x = int(dup[0])
            msg = f"{ring.labels[x]} has two different homogeneous decompositions"
        else:
            missing = np.setdiff1d(np.arange(ring.order), order_check)
            x = int(missing[0])
            msg = f"{ring.labels[x]} is not a sum of homogeneous elements"
        raise GradingError("not-direct-sum", msg, {"x": x})

    inv = np.empty(ring.order, dtype=np.int64)
    inv[sums] = np.arange(ring.order)
    decomp = np.zeros((ring.order, group.order), dtype=np.int32)
    combo = inv.copy()
    for g in range(group.order - 1, -1, -1):
        size = strides[g]
        decomp[:, g] = comps[g][combo % size]
        combo //= size

    masks = np.zeros((group.order, ring.order), dtype=bool)
    for g, arr in enumerate(comps):
        masks[g, arr] = True
    for g in range(group.order):
        for h in range(group.order):
            gh = int(group.mul[g, h])
            prods = ring.mul[np.ix_(comps[g], comps[h])]
            bad = ~masks[gh][prods]
            if bad.any():
                i, j = np.argwhere(bad)[0]
                x, y = int(comps[g][i]), int(comps[h][j])
                raise GradingError(
                    "multiplicativity",
                    f"{ring.labels[x]} (degree {group.labels[g]}) times "
                    f"{ring.labels[y]} (degree {group.labels[h]}) = "
                    f"{ring.labels[ring.mul[x, y]]}, which is outside the "
                    f"degree {group.labels[gh]} component",
                    {"x": x, "y": y, "degrees": [g, h]},
                )

    if ring.unity is not None and not masks[group.identity][ring.unity]:
        raise GradingError(
            "unity-outside-identity-component",
            f"the unity {ring.labels[ring.unity]} is not in the identity component",
            {"unity": int(ring.unity)},
        )

    return GradedRing(ring, group, comps, decomp)


def trivial_grading(ring: FiniteRing, group: FiniteGroup) -> GradedRing:
    """Everything in the identity component."""
    comps = {int(group.identity): np.arange(ring.order)}
    return validate_grading(ring, group, comps)


def component_of(gr: GradedRing, x: int, g: int) -> int:
    return gr.component_of(x, g)


def homogeneous_elements(gr: GradedRing) -> np.ndarray:
    return gr.homogeneous_elements()


def _same_group(a: FiniteGroup, b: FiniteGroup) -> bool:
    return a.order == b.order and np.array_equal(a.mul, b.mul)


def product_graded_ring(left: GradedRing, right: GradedRing) -> GradedRing:
    """T x L graded by the common group, (T x L)_g = T_g x L_g."""
    if not _same_group(left.group, right.group):
        raise ValueError("factors are graded by different groups")
    ring = core.make_product_ring([left.ring, right.ring])
    lo = right.ring.order
    comps = {}
    for g in range(left.group.order):
        pairs = (left.components[g][:, None] * lo + right.components[g][None, :]).ravel()
        comps[g] = pairs
    return validate_grading(ring, left.group, comps)


def quotient_graded_ring(gr: GradedRing, ideal):
    """R/I graded by (R/I)_g = image of R_g; I must be graded two-sided.

    Returns the GradedRing; its .projection attribute maps parent element
    indices to quotient indices.
    """
    elems = core._ideal_indices(ideal)
    mask = np.zeros(gr.ring.order, dtype=bool)
    mask[elems] = True
    parts = gr.decomp[elems]
    bad = ~mask[parts]
    if bad.any():
        i, g = np.argwhere(bad)[0]
        x = int(elems[i])
        raise GradingError(
            "not-graded-ideal",
            f"{gr.ring.labels[x]} is in the ideal but its degree "
            f"{gr.group.labels[g]} component "
            f"{gr.ring.labels[parts[i, g]]} is not",
            {"x": x, "degree": int(g)},
        )
    quot, proj = core.make_quotient_ring(gr.ring, elems)
    comps = {g: np.unique(proj[gr.components[g]]) for g in range(gr.group.order)}
    graded = validate_grading(quot, gr.group, comps)
    graded.projection = proj
    return graded


class GradedModule:
    """A graded module over a graded ring, validated on construction."""

    def __init__(self, gr, module, components, decomp):
        self.graded_ring = gr
        self.module = module
        self.group = gr.group
        self.components = components
        self.decomp = decomp
        self.comp_mask = np.zeros((self.group.order, module.order), dtype=bool)
        for g, arr in enumerate(components):
            self.comp_mask[g, arr] = True

    def graded_submodule(self, elems) -> bool:
        """Does the element set decompose inside itself degree by degree?"""
        elems = np.unique(np.asarray(list(elems), dtype=np.int64))
        mask = np.zeros(self.module.order, dtype=bool)
        mask[elems] = True
        return bool(mask[self.decomp[elems]].all())

    def __repr__(self) -> str:
        sizes = ",".join(str(len(c)) for c in self.components)
        return f"GradedModule({self.module.name}; sizes {sizes})"


def graded_module(gr: GradedRing, module: FiniteModule, assignment) -> GradedModule:
    """Validate a module grading compatible with the ring grading."""
    if module.ring is not gr.ring:
        raise ValueError("module is over a different ring")
    group = gr.group
    comps = []
    for g in range(group.order):
        raw = assignment.get(g) if isinstance(assignment, dict) else (
            assignment[g] if g < len(assignment) else None
        )
        if raw is None:
            arr = np.asarray([module.zero], dtype=np.int64)
        else:
            arr = np.unique(np.asarray(list(raw), dtype=np.int64))
        comps.append(arr)

    for g, arr in enumerate(comps):
        mask = np.zeros(module.order, dtype=bool)
        mask[arr] = True
        if not mask[module.zero] or not mask[module.add[np.ix_(arr, arr)]].all():
            raise GradingError(
                "not-a-subgroup",
                f"module component of degree {group.labels[g]} is not a subgroup",
                {"degree": g},
            )

    total = 1
    for arr in comps:
        total *= arr.size
    sums = np.asarray([module.zero], dtype=np.int64)
    strides = []
    for arr in comps:
        sums = module.add[sums[:, None], arr[None, :]].ravel()
        strides.append(arr.size)
    if total != module.order or not np.array_equal(np.sort(sums), np.arange(module.order)):
        raise GradingError(
            "not-direct-sum",
            "module components do not sum directly to the module",
            {"sizes": [int(a.size) for a in comps]},
        )
    inv = np.empty(module.order, dtype=np.int64)
    inv[sums] = np.arange(module.order)
    decomp = np.zeros((module.order, group.order), dtype=np.int32)
    combo = inv.copy()
    for g in range(group.order - 1, -1, -1):
        size = strides[g]
        decomp[:, g] = comps[g][combo % size]
        combo //= size

    masks = np.zeros((group.order, module.order), dtype=bool)
    for g, arr in enumerate(comps):
        masks[g, arr] = True
    for g in range(group.order):
        for h in range(group.order):
            gh = int(group.mul[g, h])
            acted = module.action[np.ix_(gr.components[g], comps[h])]
            bad = ~masks[gh][acted]
            if bad.any():
                i, j = np.argwhere(bad)[0]
                r, m = int(gr.components[g][i]), int(comps[h][j])
                raise GradingError(
                    "multiplicativity",
                    f"{gr.ring.labels[r]} . {module.labels[m]} leaves the "
                    f"degree {group.labels[gh]} module component",
                    {"r": r, "m": m, "degrees": [g, h]},
                )
    return GradedModule(gr, module, comps, decomp)


def trivial_module_grading(gr: GradedRing, module: FiniteModule) -> GradedModule:
    comps = {int(gr.group.identity): np.arange(module.order)}
    return graded_module(gr, module, comps)


def idealization_graded(gr: GradedRing, gm: GradedModule) -> GradedRing:
    """Grade R (+) M by X_g = R_g (+) M_g; needs an abelian grading group.

    For non-abelian groups the component product rule cannot hold in
    general, because the two mixed terms of the multiplication land in
    degrees gh and hg; the construction refuses rather than guessing.
    """
    if gm.graded_ring is not gr:
        raise ValueError("module grading belongs to a different graded ring")
    if not gr.group.is_abelian():
        raise GradingError(
            "group-not-abelian",
            f"idealization grading needs an abelian group; {gr.group.name} "
            "has elements gh != hg, so the mixed terms of a product would "
            "land in two different degrees",
        )
    ring = core.idealization(gr.ring, gm.module)
    mo = gm.module.order
    comps = {}
    for g in range(gr.group.order):
        comps[g] = (gr.components[g][:, None] * mo + gm.components[g][None, :]).ravel()
    return validate_grading(ring, gr.group, comps)


def bracket_graded(gr: GradedRing, gm: GradedModule) -> GradedRing:
    """Grade [R, M] by [R_g, M_g]."""
    if gm.graded_ring is not gr:
        raise ValueError("module grading belongs to a different graded ring")
    ring = core.bracket_ring(gr.ring, gm.module)
    mo = gm.module.order
    comps = {}
    for g in range(gr.group.order):
        comps[g] = (gr.components[g][:, None] * mo + gm.components[g][None, :]).ravel()
    return validate_grading(ring, gr.group, comps)

"""Finite rings, groups and modules as dense integer lookup tables.

Everything is index based: a structure of order n lives on the indices
0..n-1 and carries full Cayley tables as numpy int32 arrays. Constructors
compose tables eagerly, so all later enumeration work is pure table lookup.
Rings need not be commutative and need not have a unity; a unity is
detected exhaustively when one exists.
"""

from __future__ import annotations

import numpy as np

MAX_ORDER = 4096

# Ring laws are checked on all n^3 triples up to this order. Above it the
# tables come from constructors that preserve the laws, and a fixed-seed
# sample of triples is checked instead. validate(full=True) is always
# available for a complete pass.
FULL_LAW_CHECK_MAX = 256
_LAW_SAMPLE = 20000
_LAW_SEED = 12345
_BLOCK = 64


class ValidationError(Exception):
    """A structure failed one of its defining laws."""


def _as_table(table, n: int | None = None) -> np.ndarray:
    arr = np.ascontiguousarray(np.asarray(table, dtype=np.int32))
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValidationError("operation table must be square")
    if n is not None and arr.shape[0] != n:
        raise ValidationError("operation tables have different sizes")
    if arr.size and (arr.min() < 0 or arr.max() >= arr.shape[0]):
        raise ValidationError("table entry out of range")
    return arr


def _find_identity(table: np.ndarray) -> int | None:
    n = table.shape[0]
    idx = np.arange(n, dtype=np.int32)
    rows = (table == idx[None, :]).all(axis=1)
    cols = (table == idx[:, None]).all(axis=0)
    hits = np.flatnonzero(rows & cols)
    return int(hits[0]) if hits.size else None


class FiniteGroup:
    """Finite group given by its multiplication table."""

    def __init__(self, mul, labels=None, name: str = ""):
        self.mul = _as_table(mul)
        self.order = self.mul.shape[0]
        if labels is None:
            self.labels = [str(i) for i in range(self.order)]
        else:
            self.labels = [str(s) for s in labels]
        if len(self.labels) != self.order:
            raise ValidationError("label count does not match group order")
        self.name = name or f"G{self.order}"
        ident = _find_identity(self.mul)
        if ident is None:
            raise ValidationError("group table has no two-sided identity")
        self.identity = ident
        self._check()
        eq = self.mul == self.identity
        if not (eq.sum(axis=1) >= 1).all():
            raise ValidationError("group element without inverse")
        self.inv = eq.argmax(axis=1).astype(np.int32)

    def _check(self) -> None:
        m = self.mul
        n = self.order
        lhs = m[m]                                      # [a,b,c] = (ab)c
        rhs = m[np.arange(n)[:, None, None], m[None, :, :]]
        if not np.array_equal(lhs, rhs):
            a, b, c = np.argwhere(lhs != rhs)[0]
            raise ValidationError(
                f"group is not associative at ({self.labels[a]}, "
                f"{self.labels[b]}, {self.labels[c]})"
            )

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.mul, self.mul.T))

    @staticmethod
    def cyclic(n: int) -> "FiniteGroup":
        if n < 1:
            raise ValueError("group order must be at least 1")
        i = np.arange(n, dtype=np.int32)
        return FiniteGroup((i[:, None] + i[None, :]) % n, name=f"Z{n}")

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name}, order {self.order})"


class FiniteRing:
    """Finite ring given by full addition and multiplication tables."""

    def __init__(self, add, mul, labels=None, name: str = "", validate: bool = True):
        self.add = _as_table(add)
        self.order = self.add.shape[0]
        if self.order > MAX_ORDER:
            raise ValidationError(f"ring order {self.order} exceeds the {MAX_ORDER} cap")
        self.mul = _as_table(mul, self.order)
        if labels is None:
            self.labels = [str(i) for i in range(self.order)]
        else:
            self.labels = [str(s) for s in labels]
        if len(self.labels) != self.order:
            raise ValidationError("label count does not match ring order")
        self.name = name or f"R{self.order}"
        zero = _find_identity(self.add)
        if zero is None:
            raise ValidationError("addition table has no zero")
        self.zero = zero
        zero_hits = self.add == zero
        if not (zero_hits.sum(axis=1) == 1).all():
            raise ValidationError("additive inverses are not unique")
        self.neg = zero_hits.argmax(axis=1).astype(np.int32)
        self.unity = _find_identity(self.mul)
        if validate:
            self.validate()

    # -- law checking ---------------------------------------------------

    def _law_witness(self, kind: str, a: int, b: int, c: int) -> str:
        la, lb, lc = self.labels[a], self.labels[b], self.labels[c]
        return f"{kind} fails at ({la}, {lb}, {lc})"

    def _check_triples(self, a, b, c) -> None:
        A, M = self.add, self.mul
        checks = [
            ("addition associativity", A[A[a, b], c], A[a, A[b, c]]),
            ("multiplication associativity", M[M[a, b], c], M[a, M[b, c]]),
            ("left distributivity", M[a, A[b, c]], A[M[a, b], M[a, c]]),
            ("right distributivity", M[A[a, b], c], A[M[a, c], M[b, c]]),
        ]
        for kind, lhs, rhs in checks:
            bad = np.flatnonzero(lhs != rhs)
            if bad.size:
                i = bad[0]
                raise ValidationError(self._law_witness(kind, a[i], b[i], c[i]))

    def _check_block(self, blk: np.ndarray) -> None:
        A, M = self.add, self.mul
        n = self.order
        Ab, Mb = A[blk], M[blk]
        pairs = [
            ("addition associativity", A[Ab], Ab[:, A]),
            ("multiplication associativity", M[Mb], Mb[:, M]),
            ("left distributivity", Mb[:, A], A[Mb[:, :, None], Mb[:, None, :]]),
            ("right distributivity", M[Ab], A[Mb[:, None, :], M[None, :, :]]),
        ]
        for kind, lhs, rhs in pairs:
            if not np.array_equal(lhs, rhs):
                i, b, c = np.argwhere(lhs != rhs)[0]
                raise ValidationError(self._law_witness(kind, blk[i], b, c))

    def validate(self, full: bool | None = None) -> None:
        """Check the ring laws, exhaustively or on a fixed-seed sample.

        By default orders up to FULL_LAW_CHECK_MAX get the complete n^3
        triple check and larger rings get a 20000-triple sample.
        """
        if not np.array_equal(self.add, self.add.T):
            a, b = np.argwhere(self.add != self.add.T)[0]
            raise ValidationError(
                f"addition is not commutative at ({self.labels[a]}, {self.labels[b]})"
            )
        n = self.order
        if full is None:
            full = n <= FULL_LAW_CHECK_MAX
        if full:
            for start in range(0, n, _BLOCK):
                self._check_block(np.arange(start, min(start + _BLOCK, n)))
        else:
            rng = np.random.default_rng(_LAW_SEED)
            a, b, c = rng.integers(0, n, size=(3, _LAW_SAMPLE))
            self._check_triples(a, b, c)

    # -- conveniences ----------------------------------------------------

    def label(self, i: int) -> str:
        return self.labels[int(i)]

    def is_commutative(self) -> bool:
        return bool(np.array_equal(self.mul, self.mul.T))

    def __repr__(self) -> str:
        u = "unital" if self.unity is not None else "no unity"
        return f"FiniteRing({self.name}, order {self.order}, {u})"


class FiniteModule:
    """Finite left module over a FiniteRing, with a dense action table."""

    def __init__(self, ring: FiniteRing, add, action, labels=None, name: str = ""):
        self.ring = ring
        self.add = _as_table(add)
        self.order = self.add.shape[0]
        act = np.ascontiguousarray(np.asarray(action, dtype=np.int32))
        if act.shape != (ring.order, self.order):
            raise ValidationError("action table must be ring.order x module.order")
        if act.size and (act.min() < 0 or act.max() >= self.order):
            raise ValidationError("action entry out of range")
        self.action = act
        if labels is None:
            self.labels = [str(i) for i in range(self.order)]
        else:
            self.labels = [str(s) for s in labels]
        if len(self.labels) != self.order:
            raise ValidationError("label count does not match module order")
        self.name = name or f"M{self.order}"
        zero = _find_identity(self.add)
        if zero is None:
            raise ValidationError("module addition has no zero")
        self.zero = zero
        zero_hits = self.add == zero
        if not (zero_hits.sum(axis=1) == 1).all():
            raise ValidationError("module inverses are not unique")
        self.neg = zero_hits.argmax(axis=1).astype(np.int32)
        self._check()

    def _check(self) -> None:
        A = self.add
        if not np.array_equal(A, A.T):
            raise ValidationError("module addition is not commutative")
        lhs = A[A]
        rhs = A[np.arange(self.order)[:, None, None], A[None, :, :]]
        if not np.array_equal(lhs, rhs):
            raise ValidationError("module addition is not associative")
        act, Ra, Rm = self.action, self.ring.add, self.ring.mul
        if not np.array_equal(act[:, A], A[act[:, :, None], act[:, None, :]]):
            raise ValidationError("action does not distribute over module addition")
        if not np.array_equal(act[Ra], A[act[:, None, :], act[None, :, :]]):
            raise ValidationError("action does not distribute over ring addition")
        if not np.array_equal(act[Rm], act[:, act]):
            raise ValidationError("action is not compatible with ring multiplication")
        if not (act[:, self.zero] == self.zero).all():
            raise ValidationError("action does not fix the module zero")

    def label(self, i: int) -> str:
        return self.labels[int(i)]

    def __repr__(self) -> str:
        return f"FiniteModule({self.name} over {self.ring.name}, order {self.order})"


# ---------------------------------------------------------------------------
# constructors


def make_cyclic_ring(n: int) -> FiniteRing:
    """Z_n with modular addition and multiplication."""
    if n < 1:
        raise ValueError("ring order must be at least 1")
    i = np.arange(n, dtype=np.int64)
    add = (i[:, None] + i[None, :]) % n
    mul = (i[:, None] * i[None, :]) % n
    return FiniteRing(add, mul, name=f"Z{n}")


def make_zero_mult_ring(n: int) -> FiniteRing:
    """The additive group Z_n with every product equal to zero."""
    if n < 1:
        raise ValueError("ring order must be at least 1")
    i = np.arange(n, dtype=np.int64)
    add = (i[:, None] + i[None, :]) % n
    mul = np.zeros((n, n), dtype=np.int32)
    return FiniteRing(add, mul, name=f"O{n}")


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def make_prime_field(p: int) -> FiniteRing:
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    ring = make_cyclic_ring(p)
    ring.name = f"F{p}"
    return ring


# Fixed irreducible polynomials, constant coefficient first, monic.
_IRREDUCIBLE = {
    (2, 2): (1, 1, 1),        # x^2 + x + 1
    (2, 3): (1, 1, 0, 1),     # x^3 + x + 1
    (3, 2): (1, 0, 1),        # x^2 + 1
    (2, 4): (1, 1, 0, 0, 1),  # x^4 + x + 1
}


def _poly_label(digits, p: int) -> str:
    terms = []
    for i in range(len(digits) - 1, -1, -1):
        c = digits[i]
        if c == 0:
            continue
        if i == 0:
            terms.append(str(c))
        elif i == 1:
            terms.append("w" if c == 1 else f"{c}w")
        else:
            terms.append(f"w^{i}" if c == 1 else f"{c}w^{i}")
    return "+".join(terms) if terms else "0"


def _poly_mul_mod(da, db, irr, p: int, k: int):
    prod = [0] * (2 * k - 1)
    for i, a in enumerate(da):
        if a:
            for j, b in enumerate(db):
                prod[i + j] = (prod[i + j] + a * b) % p
    for deg in range(2 * k - 2, k - 1, -1):
        c = prod[deg]
        if c:
            prod[deg] = 0
            for j in range(k):
                prod[deg - k + j] = (prod[deg - k + j] - c * irr[j]) % p
    return tuple(prod[:k])


def make_field(p: int, k: int) -> FiniteRing:
    """GF(p^k) for p^k <= 16, built over a fixed irreducible polynomial.

    Elements are indexed by base-p digit vectors (constant coefficient is
    the least significant digit), so the indices 0..p-1 are exactly the
    prime-subfield constants.
    """
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if k < 1:
        raise ValueError("extension degree must be at least 1")
    q = p ** k
    if q > 16:
        raise ValueError(f"field order {q} exceeds the supported bound 16")
    if k == 1:
        return make_prime_field(p)
    irr = _IRREDUCIBLE[(p, k)]
    digits = [tuple((e // p ** i) % p for i in range(k)) for e in range(q)]
    add = np.zeros((q, q), dtype=np.int32)
    mul = np.zeros((q, q), dtype=np.int32)
    weight = [p ** i for i in range(k)]

    def encode(d) -> int:
        return sum(c * w for c, w in zip(d, weight))

    for a in range(q):
        for b in range(q):
            add[a, b] = encode(tuple((x + y) % p for x, y in zip(digits[a], digits[b])))
            mul[a, b] = encode(_poly_mul_mod(digits[a], digits[b], irr, p, k))
    labels = [_poly_label(d, p) for d in digits]
    return FiniteRing(add, mul, labels=labels, name=f"GF{q}")


def _matrix_label(base: FiniteRing, k: int, entries) -> str:
    rows = []
    for i in range(k):
        rows.append(" ".join(base.labels[entries[i * k + j]] for j in range(k)))
    return "(" + ";".join(rows) + ")"


def make_matrix_ring(base: FiniteRing, k: int) -> FiniteRing:
    """k x k matrices over base, indexed by row-major base-m digits."""
    if k < 1:
        raise ValueError("matrix size must be at least 1")
    m = base.order
    order = m ** (k * k)
    if order > MAX_ORDER:
        raise ValueError(f"matrix ring order {order} exceeds the {MAX_ORDER} cap")
    pw = m ** np.arange(k * k, dtype=np.int64)
    idx = np.arange(order, dtype=np.int64)
    digits = ((idx[:, None] // pw[None, :]) % m).astype(np.int32)

    add = np.zeros((order, order), dtype=np.int32)
    for pos in range(k * k):
        col = digits[:, pos]
        add += base.add[np.ix_(col, col)] * np.int32(pw[pos])

    mats = digits.reshape(order, k, k)
    mul = np.zeros((order, order), dtype=np.int32)
    for start in range(0, order, _BLOCK):
        blk = slice(start, min(start + _BLOCK, order))
        width = mul[blk].shape[0]
        out = np.zeros((width, order), dtype=np.int32)
        for i in range(k):
            for j in range(k):
                acc = np.full((width, order), base.zero, dtype=np.int32)
                for t in range(k):
                    term = base.mul[mats[blk, i, t][:, None], mats[:, t, j][None, :]]
                    acc = base.add[acc, term]
                out += acc * np.int32(pw[i * k + j])
        mul[blk] = out

    labels = [_matrix_label(base, k, digits[e]) for e in range(order)]
    return FiniteRing(add, mul, labels=labels, name=f"M{k}({base.name})")


def make_product_ring(factors) -> FiniteRing:
    """Direct product with componentwise operations.

    Indices are mixed-radix over the factors, last factor least
    significant; labels read "(a, b, ...)".
    """
    factors = list(factors)
    if not factors:
        raise ValueError("need at least one factor")
    order = 1
    for f in factors:
        order *= f.order
    if order > MAX_ORDER:
        raise ValueError(f"product ring order {order} exceeds the {MAX_ORDER} cap")
    weights = []
    w = order
    for f in factors:
        w //= f.order
        weights.append(w)
    idx = np.arange(order, dtype=np.int64)
    add = np.zeros((order, order), dtype=np.int32)
    mul = np.zeros((order, order), dtype=np.int32)
    cols = []
    for f, w in zip(factors, weights):
        cols.append(((idx // w) % f.order).astype(np.int32))
    for f, w, col in zip(factors, weights, cols):
        add += f.add[np.ix_(col, col)] * np.int32(w)
        mul += f.mul[np.ix_(col, col)] * np.int32(w)
    if len(factors) == 1:
        labels = list(factors[0].labels)
    else:
        labels = []
        for e in range(order):
            parts = [f.labels[cols[i][e]] for i, f in enumerate(factors)]
            labels.append("(" + ", ".join(parts) + ")")
    name = " x ".join(f.name for f in factors)
    return FiniteRing(add, mul, labels=labels, name=name)


def make_subring(ring: FiniteRing, subset) -> FiniteRing:
    """The subring on the given element indices; closure is verified.

    The result keeps parent labels and carries parent_index, a sorted array
    mapping its indices back into the parent ring.
    """
    elems = np.unique(np.asarray(list(subset), dtype=np.int64))
    if elems.size == 0:
        raise ValueError("subring needs at least the zero element")
    if elems.min() < 0 or elems.max() >= ring.order:
        raise ValueError("subset index out of range")
    mask = np.zeros(ring.order, dtype=bool)
    mask[elems] = True
    if not mask[ring.zero]:
        raise ValueError("subring must contain zero")

    def _violation(table, opname):
        vals = table[np.ix_(elems, elems)]
        bad = ~mask[vals]
        if bad.any():
            i, j = np.argwhere(bad)[0]
            a, b, c = elems[i], elems[j], vals[i, j]
            raise ValueError(
                f"subset is not closed under {opname}: "
                f"{ring.labels[a]} {opname} {ring.labels[b]} = {ring.labels[c]}"
            )

    _violation(ring.add, "+")
    _violation(ring.mul, "*")
    if not mask[ring.neg[elems]].all():
        i = np.argwhere(~mask[ring.neg[elems]])[0][0]
        raise ValueError(f"subset not closed under negation at {ring.labels[elems[i]]}")

    pos = np.full(ring.order, -1, dtype=np.int32)
    pos[elems] = np.arange(elems.size, dtype=np.int32)
    add = pos[ring.add[np.ix_(elems, elems)]]
    mul = pos[ring.mul[np.ix_(elems, elems)]]
    labels = [ring.labels[e] for e in elems]
    sub = FiniteRing(add, mul, labels=labels, name=f"sub({ring.name},{elems.size})")
    sub.parent = ring
    sub.parent_index = elems
    return sub


def _ideal_indices(ideal) -> np.ndarray:
    elems = getattr(ideal, "elements", ideal)
    return np.unique(np.asarray(list(np.asarray(elems).ravel()), dtype=np.int64))


def make_quotient_ring(ring: FiniteRing, ideal):
    """Quotient by a two-sided ideal. Returns (quotient, projection).

    The ideal may be an Ideal object or a plain element index collection;
    two-sidedness is verified here. Cosets are labeled by their minimal
    representative; projection maps parent indices to quotient indices.
    """
    elems = _ideal_indices(ideal)
    if elems.size == 0 or elems.min() < 0 or elems.max() >= ring.order:
        raise ValueError("ideal indices out of range")
    mask = np.zeros(ring.order, dtype=bool)
    mask[elems] = True
    if not mask[ring.zero]:
        raise ValueError("ideal must contain zero")
    sums = ring.add[np.ix_(elems, elems)]
    if not mask[sums].all():
        i, j = np.argwhere(~mask[sums])[0]
        raise ValueError(
            f"not additively closed: {ring.labels[elems[i]]} + {ring.labels[elems[j]]}"
        )
    for table, side in ((ring.mul[:, elems], "left"), (ring.mul[elems, :].T, "right")):
        bad = ~mask[table]
        if bad.any():
            r, i = np.argwhere(bad)[0]
            raise ValueError(
                f"not a two-sided ideal: {side} multiple "
                f"{ring.labels[r]} * {ring.labels[elems[i]]} escapes"
                if side == "left"
                else f"not a two-sided ideal: right multiple "
                f"{ring.labels[elems[i]]} * {ring.labels[r]} escapes"
            )

    proj = np.full(ring.order, -1, dtype=np.int32)
    reps = []
    for x in range(ring.order):
        if proj[x] < 0:
            members = ring.add[x, elems]
            proj[members] = len(reps)
            reps.append(x)
    reps = np.asarray(reps, dtype=np.int64)
    add = proj[ring.add[np.ix_(reps, reps)]]
    mul = proj[ring.mul[np.ix_(reps, reps)]]
    # well-definedness on all pairs, not only representatives
    if not np.array_equal(proj[ring.add], add[proj[:, None], proj[None, :]]):
        raise ValidationError("quotient addition is not well defined")
    if not np.array_equal(proj[ring.mul], mul[proj[:, None], proj[None, :]]):
        raise ValidationError("quotient multiplication is not well defined")
    labels = [ring.labels[r] for r in reps]
    quot = FiniteRing(add, mul, labels=labels, name=f"{ring.name}/({elems.size})")
    return quot, proj


def idealization(ring: FiniteRing, module: FiniteModule) -> FiniteRing:
    """R (+) M with (x, m)(y, n) = (xy, x.n + y.m).

    Both mixed terms use the module's left action; pairs are indexed as
    r * module.order + m.
    """
    if module.ring is not ring:
        raise ValueError("module is over a different ring")
    mo = module.order
    order = ring.order * mo
    if order > MAX_ORDER:
        raise ValueError(f"idealization order {order} exceeds the {MAX_ORDER} cap")
    idx = np.arange(order, dtype=np.int64)
    rx = (idx // mo).astype(np.int32)
    mx = (idx % mo).astype(np.int32)
    add = ring.add[np.ix_(rx, rx)] * np.int32(mo) + module.add[np.ix_(mx, mx)]
    t1 = module.action[rx[:, None], mx[None, :]]
    t2 = module.action[rx[None, :], mx[:, None]]
    mul = ring.mul[np.ix_(rx, rx)] * np.int32(mo) + module.add[t1, t2]
    labels = [f"({ring.labels[rx[e]]}, {module.labels[mx[e]]})" for e in range(order)]
    return FiniteRing(add, mul, labels=labels, name=f"{ring.name}(+){module.name}")


def bracket_ring(ring: FiniteRing, module: FiniteModule) -> FiniteRing:
    """[R, M] with (a, m)(b, n) = (ab, a.n)."""
    if module.ring is not ring:
        raise ValueError("module is over a different ring")
    mo = module.order
    order = ring.order * mo
    if order > MAX_ORDER:
        raise ValueError(f"bracket ring order {order} exceeds the {MAX_ORDER} cap")
    idx = np.arange(order, dtype=np.int64)
    rx = (idx // mo).astype(np.int32)
    mx = (idx % mo).astype(np.int32)
    add = ring.add[np.ix_(rx, rx)] * np.int32(mo) + module.add[np.ix_(mx, mx)]
    mul = ring.mul[np.ix_(rx, rx)] * np.int32(mo) + module.action[rx[:, None], mx[None, :]]
    labels = [f"({ring.labels[rx[e]]}, {module.labels[mx[e]]})" for e in range(order)]
    return FiniteRing(add, mul, labels=labels, name=f"[{ring.name},{module.name}]")


def cyclic_module(ring: FiniteRing, n: int, scalars, name: str = "") -> FiniteModule:
    """Z_n as a left module, with ring element i acting as scalars[i]."""
    if n < 1:
        raise ValueError("module order must be at least 1")
    scal = np.asarray(list(scalars), dtype=np.int64)
    if scal.shape != (ring.order,):
        raise ValueError("need one scalar per ring element")
    i = np.arange(n, dtype=np.int64)
    add = (i[:, None] + i[None, :]) % n
    action = (scal[:, None] * i[None, :]) % n
    return FiniteModule(ring, add, action, name=name or f"Z{n}mod")


def unity_of(ring: FiniteRing) -> int | None:
    """Index of the two-sided unity, or None; detection is exhaustive."""
    return ring.unity

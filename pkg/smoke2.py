"""Smoke: FX2 marker, FX10 computed verdicts, FX6 at order 4096."""
import time

import numpy as np
import gradealg as ga

t0 = time.time()

# FX2: F2 x S2 x S2 with zero-mult S2 factors, Z2-graded.
f2 = ga.make_prime_field(2)
s2 = ga.make_zero_mult_ring(2)
prod = ga.make_product_ring([f2, s2, s2])
z2 = ga.FiniteGroup.cyclic(2)


def pidx(a, s, t):
    return a * 4 + s * 2 + t


gr2 = ga.validate_grading(prod, z2, {
    0: [pidx(a, 0, 0) for a in range(2)],
    1: [pidx(0, s, t) for s in range(2) for t in range(2)],
})
lat2 = ga.all_graded_ideals(gr2)
print("FX2 lattice:", len(lat2), [len(i) for i in lat2])
assert len(lat2) == 10
wp_members = [i for i in lat2 if not i.is_whole()
              and ga.is_graded_weakly_prime(gr2, i).verdict]
print("FX2 weakly primes:", len(wp_members))
assert len(wp_members) == 5
p = next(i for i in lat2 if len(i) == 4 and i.contains(pidx(1, 0, 0))
         and i.contains(pidx(0, 0, 1)))
res = ga.is_graded_weakly_prime(gr2, p)
assert res.verdict is False
gw_i = ga.gw_intersection(gr2, p)
gw_s = ga.gw_systems(gr2, p)
print("FX2 GW(R0+B):", gw_i, gw_s)
assert gw_i is ga.WHOLE_RING and gw_s is ga.WHOLE_RING
x_ideal = next(i for i in lat2 if len(i) == 4 and not i.contains(pidx(1, 0, 0)))
assert ga.is_graded_total_prime(gr2, x_ideal).verdict is True
assert len(ga.maximal_graded_ideals(gr2)) == 4
print("FX2 ok", round(time.time() - t0, 2))

# FX10: upper triangular (F2 GF4; 0 F2) inside M2(GF4), Z4-graded.
gf4 = ga.make_field(2, 2)
m2gf4 = ga.make_matrix_ring(gf4, 2)


def midx(a, b, c, d):
    return a + 4 * b + 16 * c + 64 * d


subset = [midx(a, b, 0, d) for a in range(2) for b in range(4) for d in range(2)]
tri = ga.make_subring(m2gf4, subset)
assert tri.order == 16


def tidx(a, b, d):
    return int(np.flatnonzero(tri.parent_index == midx(a, b, 0, d))[0])


z4 = ga.FiniteGroup.cyclic(4)
gr10 = ga.validate_grading(tri, z4, {
    0: [tidx(a, 0, d) for a in range(2) for d in range(2)],
    2: [tidx(0, b, 0) for b in range(4)],
})
p10 = ga.Ideal(tri, [tidx(0, b, 0) for b in range(4)])
assert ga.ideal_product(p10, p10).is_zero()
r = ga.is_graded_weakly_prime(gr10, p10)
print("FX10 wp:", r.verdict, r.certificate if r.verdict is False else "")
assert r.verdict is False
rx = ga.is_xry_weakly_prime(gr10, p10)
print("FX10 xry:", rx.verdict, rx.certificate)
assert rx.verdict is False
rc = ga.is_component_weakly_prime(gr10, p10)
print("FX10 component:", rc.verdict)
assert rc.verdict is True
rt = ga.is_graded_weakly_total_prime(gr10, p10)
assert rt.verdict is True
assert ga.is_g_weakly_total_prime(gr10, p10, 0).verdict is True
assert ga.is_g_weakly_total_prime(gr10, p10, 2).verdict is None
cc = ga.colon_characterization(gr10, p10, 0)
print("FX10 colon characterization g=0:", cc.verdict, cc.certificate)
assert cc.verdict is True
assert cc.certificate["subset_clause_holds"] is True
print("FX10 ok", round(time.time() - t0, 2))

# FX6: M2(Z8) with the checkerboard Z4-grading, P = M2(2Z8).
t1 = time.time()
z8 = ga.make_cyclic_ring(8)
m2z8 = ga.make_matrix_ring(z8, 2)
print("FX6 built", round(time.time() - t1, 2))


def eidx(a, b, c, d):
    return a + 8 * b + 64 * c + 512 * d


gr6 = ga.validate_grading(m2z8, ga.FiniteGroup.cyclic(4), {
    0: [eidx(a, 0, 0, d) for a in range(8) for d in range(8)],
    2: [eidx(0, b, c, 0) for b in range(8) for c in range(8)],
})
print("FX6 graded", round(time.time() - t1, 2))
caps6 = ga.DEFAULT_CAPS.override(lattice=4096)
lat6 = ga.all_graded_ideals(gr6, caps6)
print("FX6 lattice:", [len(i) for i in lat6], round(time.time() - t1, 2))
assert [len(i) for i in lat6] == [1, 16, 256, 4096]
p6 = lat6[2]
assert ga.is_graded_prime(gr6, p6, caps6).verdict is True
assert ga.is_graded_weakly_prime(gr6, p6, caps6).verdict is True
print("FX6 prime/wp", round(time.time() - t1, 2))
rt6 = ga.is_graded_weakly_total_prime(gr6, p6)
print("FX6 wtp:", rt6.verdict, rt6.certificate)
assert rt6.verdict is False
rc6 = ga.is_component_weakly_prime(gr6, p6, caps6)
print("FX6 component:", rc6.verdict, round(time.time() - t1, 2))
assert rc6.verdict is False
rx6 = ga.is_xry_weakly_prime(gr6, p6, caps6)
print("FX6 xry:", rx6.verdict, round(time.time() - t1, 2))
assert rx6.verdict is True
print("all smoke ok; total", round(time.time() - t0, 2), "s")

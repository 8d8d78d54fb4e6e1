"""Smoke: build FX5 and replay its frozen facts."""
import numpy as np
import gradealg as ga

# FX5: subring {(x y; 0 0): x in Z4, y in {0, 2}} of M2(Z4), Z4-graded.
m2z4 = ga.make_matrix_ring(ga.make_cyclic_ring(4), 2)
print("M2(Z4) order", m2z4.order)


def idx(a, b, c, d):
    # entry (0,0) least significant, row-major digits over Z4
    return a + 4 * b + 16 * c + 64 * d


subset = [idx(x, y, 0, 0) for x in range(4) for y in (0, 2)]
sub = ga.make_subring(m2z4, subset)
print("subring order", sub.order, "labels", sub.labels)

z4 = ga.FiniteGroup.cyclic(4)


def sub_idx(x, y):
    return int(np.flatnonzero(sub.parent_index == idx(x, y, 0, 0))[0])


assignment = {0: [sub_idx(x, 0) for x in range(4)], 2: [0, sub_idx(0, 2)]}
gr = ga.validate_grading(sub, z4, assignment)
print("grading ok; homogeneous count:", gr.homogeneous_elements().size)
assert gr.homogeneous_elements().size == 5

lat = ga.all_graded_ideals(gr)
print("graded ideal lattice sizes:", [len(i) for i in lat])
assert [len(i) for i in lat] == [1, 2, 2, 4, 8]

zero, p2, p1, q, whole = lat
# p1 = {0, (0 2;0 0)}, p2 = {0, (2 0;0 0)}
print("p1:", [sub.labels[e] for e in p1.elements])
print("p2:", [sub.labels[e] for e in p2.elements])
assert ga.is_graded_weakly_prime(gr, zero).verdict is True
v_p1 = ga.is_graded_weakly_prime(gr, p1).verdict
v_p2 = ga.is_graded_weakly_prime(gr, p2).verdict
v_q = ga.is_graded_weakly_prime(gr, q).verdict
print("p1 wp:", v_p1, "p2 wp:", v_p2, "q wp:", v_q)
assert v_p1 is True and v_p2 is False and v_q is True
assert ga.is_graded_prime(gr, q).verdict is True
assert ga.is_graded_prime(gr, p1).verdict is False

gp = ga.gp_radical(gr)
gn = ga.gn_radical(gr)
print("GP:", gp, "GN:", gn)
assert isinstance(gp, ga.Ideal) and gp.bits == q.bits
assert gn.bits == q.bits
assert ga.ideal_product(gn, gn).is_zero()

# GW both routes
for target, expect in [(p1, p1), (p2, q)]:
    via_ideals = ga.gw_intersection(gr, target)
    via_systems = ga.gw_systems(gr, target)
    print("GW routes:", via_ideals, sorted(via_systems.tolist()))
    assert via_ideals.bits == expect.bits
    hom = gr.homogeneous_elements()
    expect_set = np.intersect1d(expect.elements, hom)
    assert np.array_equal(via_systems, expect_set)

# twin zeros of p1
tz = ga.total_twin_zeros(gr, p1)
print("twin zeros of p1:", [(sub.labels[a], sub.labels[b]) for a, b in tz])
assert len(tz) == 1

# g-wtp
r0 = ga.is_g_weakly_total_prime(gr, p1, 0)
r2 = ga.is_g_weakly_total_prime(gr, p1, 2)
print("g=0:", r0.verdict, "g=2:", r2.verdict, "-", r2.narration)
assert r0.verdict is True and r2.verdict is None

# wtp / total
assert ga.is_graded_weakly_total_prime(gr, p1).verdict is True
assert ga.is_graded_total_prime(gr, p1).verdict is False

# colon facts: (P1 : {(0 2;0 0)}) within R_0 = all of R_0
y = [sub_idx(0, 2)]
c1 = ga.colon(gr, p1, y, 0)
c0 = ga.colon(gr, ga.Ideal(sub, [sub.zero]), y, 0)
print("colon sizes:", len(c1), len(c0))
assert len(c1) == 4 and len(c0) == 2

# weakly systems
for x in range(1, 4):
    s = [sub_idx(x, 0)]
    assert ga.is_weakly_system(gr, s).verdict is True
hom = gr.homogeneous_elements()
h_not_p2 = [int(e) for e in hom if e not in p2.elements and e != sub.zero]
res = ga.is_weakly_system(gr, h_not_p2)
print("h minus p2 system:", res.verdict, res.certificate)
assert res.verdict is False

# xry on non-unital ring
assert sub.unity is None
assert ga.is_xry_weakly_prime(gr, p1).verdict is None

# colon characterization at degree 0 for p1
cc = ga.colon_characterization(gr, p1, 0)
print("colon characterization p1 g=0:", cc.verdict, cc.certificate)
assert cc.verdict is True

print("FX5 smoke OK")

"""Independent oracle for frozen test values.

Groups are realized as complex matrix groups (or permutation groups), never
through the C++ family constructors. h(G) is computed twice:
  * from character degrees recovered numerically from class matrices,
  * from the exact Gram determinant of class sums, where the trace form is
    evaluated by explicit group-algebra convolution.
mu_phi for a cyclic central Z is computed by expanding e_phi[K] in group
element coordinates. Prints one JSON object per line.
"""

import cmath
import itertools
import json
import sys
from fractions import Fraction

import numpy as np


def key(m):
    return tuple(complex(round(z.real, 6) + 0.0, round(z.imag, 6) + 0.0) for z in np.asarray(m).ravel())


def closure(gens):
    dim = gens[0].shape[0]
    ident = np.eye(dim, dtype=complex)
    elems = [ident]
    index = {key(ident): 0}
    frontier = [ident]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = a @ g
                k = key(b)
                if k not in index:
                    index[k] = len(elems)
                    elems.append(b)
                    nxt.append(b)
        frontier = nxt
    n = len(elems)
    table = [[index[key(elems[i] @ elems[j])] for j in range(n)] for i in range(n)]
    return elems, table


def perm_matrix(perm):
    n = len(perm)
    m = np.zeros((n, n), dtype=complex)
    for i, j in enumerate(perm):
        m[j, i] = 1
    return m


def root(m, k=1):
    return cmath.exp(2j * cmath.pi * k / m)


def cyclic(n):
    return [np.array([[root(n)]])]


def dihedral(n):  # order 2n
    return [np.array([[root(n), 0], [0, root(n, -1)]]), np.array([[0, 1], [1, 0]], dtype=complex)]


def quaternion(n):  # order 4n
    z = root(2 * n)
    return [np.array([[z, 0], [0, 1 / z]]), np.array([[0, -1], [1, 0]], dtype=complex)]


def semidihedral(k):  # order 2^k
    m = 2 ** (k - 1)
    r = 2 ** (k - 2) - 1
    return [np.array([[root(m), 0], [0, root(m, r)]]), np.array([[0, 1], [1, 0]], dtype=complex)]


def modular(p, d):
    m = p ** (d - 1)
    r = 1 + p ** (d - 2)
    x = np.diag([root(m, r ** i % m) for i in range(p)])
    y = perm_matrix([(i + 1) % p for i in range(p)])
    return [x, y]


def symmetric(n):
    return [perm_matrix([1, 0] + list(range(2, n))), perm_matrix([(i + 1) % n for i in range(n)])]


def alternating(n):
    gens = []
    for i in range(2, n):
        p = list(range(n))
        p[0], p[1], p[i] = 1, i, 0
        gens.append(perm_matrix(p))
    return gens


def direct(a, b):
    """Block-diagonal sum: faithful on the direct product."""
    da, db = a[0].shape[0], b[0].shape[0]

    def block(x, y):
        m = np.zeros((da + db, da + db), dtype=complex)
        m[:da, :da], m[da:, da:] = x, y
        return m

    return [block(g, np.eye(db)) for g in a] + [block(np.eye(da), g) for g in b]


def central_kron(a, b):
    """Generated by a (x) 1 and 1 (x) b: identifies the scalar centers."""
    ia, ib = np.eye(a[0].shape[0]), np.eye(b[0].shape[0])
    return [np.kron(g, ib) for g in a] + [np.kron(ia, g) for g in b]


class Group:
    def __init__(self, gens):
        self.elems, self.table = closure(gens)
        self.n = len(self.elems)
        self.inv = [row.index(0) for row in self.table]
        self.classes = []
        seen = set()
        for x in range(self.n):
            if x in seen:
                continue
            cls = sorted({self.table[self.table[self.inv[g]][x]][g] for g in range(self.n)})
            seen.update(cls)
            self.classes.append(cls)
        self.class_of = {}
        for i, c in enumerate(self.classes):
            for x in c:
                self.class_of[x] = i

    def mul_vec(self, u, v):
        w = np.zeros(self.n, dtype=complex)
        for a in np.nonzero(u)[0]:
            for b in np.nonzero(v)[0]:
                w[self.table[a][b]] += u[a] * v[b]
        return w

    def class_sum(self, i):
        v = np.zeros(self.n, dtype=complex)
        v[self.classes[i]] = 1
        return v

    def center_trace(self, w):
        """Trace of multiplication by central w on the class-sum basis."""
        t = 0
        for l, cls in enumerate(self.classes):
            prod = self.mul_vec(w, self.class_sum(l))
            t += prod[cls[0]]  # coefficient of [K_l] in w [K_l]
        return t

    def center(self):
        return [z for z in range(self.n) if all(self.table[z][g] == self.table[g][z] for g in range(self.n))]

    def derived_order(self):
        comm = {self.table[self.table[self.inv[a]][self.inv[b]]][self.table[a][b]]
                for a in range(self.n) for b in range(self.n)}
        sub = {0}
        frontier = set(comm)
        while frontier:
            sub |= frontier
            frontier = {self.table[a][b] for a in sub for b in comm} - sub
        return len(sub)


def conj_vec(g, v):
    w = np.zeros(g.n, dtype=complex)
    for a in range(g.n):
        w[g.inv[a]] = np.conj(v[a])
    return w


def exact_det(rows):
    m = [[Fraction(x) for x in r] for r in rows]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            for k in range(c, n):
                m[r][k] -= f * m[c][k]
    return det


def isqrt_fraction(q):
    import math
    a, b = math.isqrt(q.numerator), math.isqrt(q.denominator)
    return Fraction(a, b) if a * a == q.numerator and b * b == q.denominator else None


def h_by_gram(g):
    s = len(g.classes)
    sums = [g.class_sum(i) for i in range(s)]
    gram = [[round(g.center_trace(g.mul_vec(conj_vec(g, sums[i]), sums[j])).real) for j in range(s)] for i in range(s)]
    gamma = abs(exact_det(gram))
    c = 1
    for cls in g.classes:
        c *= g.n // len(cls)
    return isqrt_fraction(gamma / c), gamma, c


def h_by_degrees(g, seed=7):
    s = len(g.classes)
    mats = []
    for j in range(s):
        m = np.zeros((s, s))
        for i in range(s):
            prod = g.mul_vec(g.class_sum(j), g.class_sum(i))
            for k in range(s):
                m[k, i] = prod[g.classes[k][0]].real
        mats.append(m)
    rng = np.random.default_rng(seed)
    comb = sum(rng.uniform(-1, 1) * m / len(g.classes[j]) for j, m in enumerate(mats))
    _, vecs = np.linalg.eig(comb)
    degrees = []
    for c in range(s):
        v = vecs[:, c]
        omega = [(v.conj() @ (m @ v)) / (v.conj() @ v) for m in mats]
        norm = sum(abs(o) ** 2 / len(g.classes[j]) for j, o in enumerate(omega))
        degrees.append(round((g.n / norm) ** 0.5))
    assert sum(d * d for d in degrees) == g.n, degrees
    num = 1
    for cls in g.classes:
        num *= len(cls)
    den = 1
    for d in degrees:
        den *= d
    return Fraction(num, den), sorted(degrees)


def rationalize(x, tol=1e-6):
    assert abs(x.imag) < tol, x
    q = Fraction(x.real).limit_denominator(10 ** 6)
    assert abs(float(q) - x.real) < tol * max(1, abs(x.real)), (x, q)
    return q


class GQ:
    """Exact Gaussian rational re + i*im."""

    def __init__(self, re, im=Fraction(0)):
        self.re, self.im = Fraction(re), Fraction(im)

    def __sub__(self, o):
        return GQ(self.re - o.re, self.im - o.im)

    def __mul__(self, o):
        return GQ(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    def __truediv__(self, o):
        n = o.re * o.re + o.im * o.im
        return self * GQ(o.re / n, -o.im / n)

    def nonzero(self):
        return self.re != 0 or self.im != 0


def abs_gaussian_det(gram):
    """Entries have small denominators; round them, then eliminate exactly in Q(i)."""
    n = gram.shape[0]
    m = [[GQ(Fraction(x.real).limit_denominator(64), Fraction(x.imag).limit_denominator(64)) for x in row]
         for row in gram]
    for row, frow in zip(m, gram):
        for x, fx in zip(row, frow):
            assert abs(float(x.re) - fx.real) < 1e-6 and abs(float(x.im) - fx.imag) < 1e-6
    det = GQ(1)
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c].nonzero()), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = GQ(-det.re, -det.im)
        det = det * m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            for k in range(c, n):
                m[r][k] = m[r][k] - f * m[c][k]
    assert det.im == 0, "Hermitian determinant must be real"
    return abs(det.re)


def mu_phi_cyclic(g, zgen, k):
    """mu_phi for Z = <zgen> cyclic and phi(zgen) = zeta_|Z|^k."""
    zs = [0]
    while True:
        nxt = g.table[zs[-1]][zgen]
        if nxt == 0:
            break
        zs.append(nxt)
    m = len(zs)
    e = np.zeros(g.n, dtype=complex)
    for a, z in enumerate(zs):
        e[z] += root(m, -k * a) / m  # phi(z^-1)
    # Z-orbits of classes with representatives = class holding the orbit's least element
    orbit_seen = set()
    basis_classes, centralizer = [], []
    strata = {}
    for i, cls in sorted(enumerate(g.classes), key=lambda t: t[1][0]):
        if i in orbit_seen:
            continue
        orbit = set()
        ann = 0
        for a, z in enumerate(zs):
            j = g.class_of[g.table[z][cls[0]]]
            orbit.add(j)
            if j == i:
                ann += 1
        orbit_seen |= orbit
        # Ann is the subgroup of order `ann`; it lies in Ker phi iff phi is trivial on it
        ann_in_ker = (k * (m // ann)) % m == 0
        if ann_in_ker:
            basis_classes.append(i)
            centralizer.append(Fraction(g.n // len(cls), m // ann))
    vecs = [g.mul_vec(e, g.class_sum(i)) for i in basis_classes]
    d = len(vecs)
    gram = np.array([[g.center_trace(g.mul_vec(conj_vec(g, vecs[a]), vecs[b])) for b in range(d)] for a in range(d)])
    gamma = abs_gaussian_det(gram) if d else Fraction(1)
    c = Fraction(1)
    for x in centralizer:
        c *= x
    return gamma, c, gamma / c


def element_of_order(g, zs, order):
    for z in zs:
        x, o = z, 1
        while x != 0:
            x, o = g.table[x][z], o + 1
        if o == order:
            return z
    raise ValueError


GROUPS = {}
for n in range(1, 17):
    GROUPS[f"D {2 * n}"] = dihedral(n)
for n in range(1, 9):
    GROUPS[f"Q {4 * n}"] = quaternion(n)
for k in (4, 5, 6):
    GROUPS[f"SD {k}"] = semidihedral(k)
for p, d in ((2, 3), (2, 4), (3, 3), (5, 3)):
    GROUPS[f"M {p} {d}"] = modular(p, d)
for n in (1, 2, 3, 4, 5, 6, 8, 12):
    GROUPS[f"C {n}"] = cyclic(n)
GROUPS["S 3"], GROUPS["S 4"] = symmetric(3), symmetric(4)
GROUPS["A 4"], GROUPS["A 5"] = alternating(4), alternating(5)
GROUPS["prod(C 2,D 8)"] = direct(cyclic(2), dihedral(4))
GROUPS["prod(D 6,D 6)"] = direct(dihedral(3), dihedral(3))
GROUPS["prod(D 6,C 2)"] = direct(dihedral(3), cyclic(2))
GROUPS["cprod(Q 8,Q 8)"] = central_kron(quaternion(2), quaternion(2))
GROUPS["cprod(D 8,C 4)"] = central_kron(dihedral(4), cyclic(4))

# mu_phi cases: (group, order of generator of the cyclic Z used, phi exponents)
PHI_CASES = [("D 16", 2), ("D 24", 2), ("D 32", 2), ("D 8", 2), ("Q 8", 2), ("Q 16", 2), ("SD 4", 2),
             ("SD 5", 2), ("M 2 4", 4), ("C 4", 4), ("C 4", 2)]


def main():
    for label, gens in GROUPS.items():
        g = Group(gens)
        h_gram, gamma, c = h_by_gram(g)
        h_deg, degrees = h_by_degrees(g)
        assert h_gram == h_deg, (label, h_gram, h_deg)
        print(json.dumps({"group": label, "order": g.n, "class_sizes": sorted(len(k) for k in g.classes),
                          "center": len(g.center()), "derived": g.derived_order(), "degrees": degrees,
                          "gamma": str(gamma), "c": str(c), "h": str(h_gram)}))
    for label, zord in PHI_CASES:
        g = Group(GROUPS[label])
        z = element_of_order(g, g.center(), zord)
        out = []
        for k in range(zord):
            gamma, c, mu = mu_phi_cyclic(g, z, k)
            out.append({"k": k, "gamma_phi": str(gamma), "c_phi": str(c), "mu_phi": str(mu)})
        print(json.dumps({"group": label, "Z_order": zord, "phi": out}))


if __name__ == "__main__":
    sys.exit(main())

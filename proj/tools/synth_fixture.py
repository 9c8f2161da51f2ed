#!/usr/bin/env python3
"""Generate synthetic etnc-problem/1 fixtures with a known answer.

A unit u of Z_p[G] and a matrix Phi are chosen, alpha_psi = psi(u) eps_psi delta_psi is
planted, and leading terms are produced backwards from random heights and periods:

    L*(A twisted by chi_j, 1) = Lstar_{psi_{-j}} * Omega / tau*(psi_{-j})   (k = Q, d = 1)

with Lstar_psi = alpha_psi * lambda_psi. Per-field BSD data are generated so that the
quotient over F^(H_t) equals prod_{t_psi <= t} alpha_psi / delta_psi.

Usage: synth_fixture.py --all fixtures/synthetic
"""
import argparse
import json
import os
import random

import mpmath as mp

mp.mp.dps = 80
OUT_DIGITS = 45


def dec(x):
    return mp.nstr(mp.mpf(x), OUT_DIGITS, strip_zeros=False, min_fixed=-mp.inf, max_fixed=mp.inf)


def cdec(z):
    z = mp.mpc(z)
    return [dec(z.real), dec(z.imag)]


def primitive_root(q):
    for g in range(2, q):
        x, seen = 1, set()
        for _ in range(q - 1):
            x = x * g % q
            seen.add(x)
        if len(seen) == q - 1:
            return g
    raise ValueError(q)


class Setup:
    def __init__(self, p, n, q, m):
        self.p, self.n, self.q, self.m = p, n, q, list(m)
        self.N = p**n
        assert (q - 1) % self.N == 0
        self.g = primitive_root(q)
        self.ind = {}
        x = 1
        for k in range(q - 1):
            self.ind[x] = k
            x = x * self.g % q
        self.points = [(t, k) for t in range(n + 1) for k in range(self.m[t])]

    def level(self, j):
        j %= self.N
        if j == 0:
            return 0
        t = self.n
        while j % self.p == 0:
            j //= self.p
            t -= 1
        return t

    def psi(self, j, i):
        return mp.expjpi(mp.mpf(2 * j * i) / self.N)

    def eval(self, x, j):
        return mp.fsum(c * self.psi(j, i) for i, c in enumerate(x))

    def gauss(self, j):
        if j % self.N == 0:
            return mp.mpc(1)
        return mp.fsum(self.psi(j, self.ind[a]) * mp.expjpi(mp.mpf(2 * a) / self.q) for a in range(1, self.q))

    def tau_star(self, j):
        # The place above q is totally ramified: u(psi) = -1 for the trivial character only.
        return -1 if j % self.N == 0 else self.gauss(j)

    def delta(self, j):
        d = mp.mpc(1)
        for t in range(self.level(j)):
            d *= (self.psi(j, self.p**t) - 1) ** self.m[t]
        return d

    def minor_indices(self, j):
        return [r for r, (t, _) in enumerate(self.points) if t >= self.level(j)]

    def lam(self, heights, j):
        idx = self.minor_indices(j)
        if not idx:
            return mp.mpc(1)
        M = mp.matrix(len(idx), len(idx))
        for a, r in enumerate(idx):
            u = self.points[r][0]
            for b, c in enumerate(idx):
                M[a, b] = mp.fsum(h * self.psi(j, i) for i, h in enumerate(heights[r][c])) / self.p ** (self.n - u)
        return mp.det(M)

    def eps(self, phi, j):
        idx = self.minor_indices(j)
        if not idx:
            return mp.mpc(1)
        M = mp.matrix(len(idx), len(idx))
        for a, r in enumerate(idx):
            for b, c in enumerate(idx):
                M[a, b] = self.eval(phi[r][c], j)
        return mp.det(M)


def int_det(M):
    M = [[mp.mpf(x) for x in row] for row in M]
    return int(mp.nint(mp.det(mp.matrix(M)))) if M else 1


def random_phi(S, rng):
    n_pts = len(S.points)
    for _ in range(1000):
        phi = []
        for r, (tr, _) in enumerate(S.points):
            row = []
            for c, (tc, _) in enumerate(S.points):
                if tr == S.n or tc == S.n:
                    row.append([1 if (r == c and i == 0) else 0 for i in range(S.N)])
                else:
                    row.append([rng.randint(-2, 2) for _ in range(S.N)])
            phi.append(row)
        # eps_psi is a unit iff the augmentation minor is nonzero mod p.
        ok = True
        for t in range(S.n + 1):
            idx = [r for r, (tr, _) in enumerate(S.points) if tr >= t]
            aug = [[sum(phi[r][c]) for c in idx] for r in idx]
            if int_det(aug) % S.p == 0:
                ok = False
        if ok or n_pts == 0:
            return phi
    raise RuntimeError("no valid Phi found")


def random_unit(S, rng):
    while True:
        u = [rng.randint(-3, 3) for _ in range(S.N)]
        if sum(u) % S.p != 0:
            return u


def random_heights(S, rng, zero=False):
    H = []
    for r, (u, _) in enumerate(S.points):
        row = []
        for c in range(len(S.points)):
            row.append([mp.mpf(0) if zero else mp.mpf(rng.uniform(-1, 1)) + (2 if r == c and i == 0 else 0)
                        for i in range(S.p**u)])
        H.append(row)
    return H


def make(name, p, n, q, m, seed, variant="ok", truncated=True):
    rng = random.Random(seed)
    S = Setup(p, n, q, m)
    phi = random_phi(S, rng)
    u = random_unit(S, rng)
    heights = random_heights(S, rng, zero=(variant == "degenerate"))
    omega = mp.mpf(rng.uniform(0.5, 3))

    alpha = [S.eval(u, j) * S.eps(phi, j) * S.delta(j) for j in range(S.N)]
    if variant == "zpg_fail":
        # Move alpha_1 by a p-unit amount: still a unit, no longer congruent to the rest.
        shift = 1 if (sum(u) + 1) % p != 0 else 2
        alpha[0] += shift
    if variant == "max_fail":
        for j in range(S.N):
            if S.level(j) == n:
                alpha[j] *= p

    lam = [S.lam(heights, j) for j in range(S.N)]
    lstar = [alpha[j] * lam[j] for j in range(S.N)]
    lvals = []
    for j in range(S.N):
        jd = (-j) % S.N  # entry j is the twist by chi_j, i.e. psi-dual of psi_{-j}
        if truncated:
            lvals.append(lstar[jd] * omega / S.tau_star(jd))
        else:
            lvals.append(lstar[jd] * omega / S.gauss(jd))

    bsd = []
    for t in range(n + 1):
        prod = mp.mpc(1)
        for j in range(S.N):
            if S.level(j) <= t:
                prod *= alpha[j] / S.delta(j)
        # A product of norms of algebraic integers, hence an integer.
        quotient = mp.nint(prod.real)
        assert abs(prod - quotient) < mp.mpf(10) ** -40 or variant == "degenerate"
        reg = mp.mpf(rng.uniform(0.1, 5))
        per = mp.mpf(rng.uniform(0.1, 5))
        disc = q ** (p**t - 1)
        bsd.append({"label": "F^H_%d" % t, "level": t, "leading_term": dec(quotient * reg * per / mp.sqrt(disc)),
                    "abs_discriminant": str(disc), "regulator": dec(reg), "period": dec(per)})

    orders = []
    for j in range(S.N):
        orders.append(sum(S.m[t] for t in range(S.level(j), n + 1)))

    problem = {
        "format": "etnc-problem/1",
        "header": {
            "label": name,
            "p": p,
            "n": n,
            "base_field": {"type": "Q", "q": q, "primitive_root": S.g},
            "digits": 30,
            "flags": {"sha_finite": True, "sha_p_trivial_proper": True, "sha_p_trivial": True},
        },
        "curve": {
            "label": "synthetic",
            "dimension": 1,
            "conductor": 17,
            "torsion_order": 1,
            "dual_torsion_order": 1,
            "tamagawa": {"17": 1},
            "residue_point_counts": {str(q): 1 if (q + 1) % p == 0 else q + 1},
        },
        "analytic": {
            "leading_terms": {"sr_truncated": truncated, "labels": list(range(S.N)), "values": [cdec(v) for v in lvals]},
            "period": dec(omega),
            "orders": orders,
            "bsd_fields": bsd,
        },
        "arithmetic": {
            "shape": m,
            "heights": {"digits": OUT_DIGITS - 5,
                        "values": [[[dec(h) for h in cell] for cell in row] for row in heights]},
            "phi": phi,
        },
    }
    return problem, {"unit": u, "variant": variant}


CATALOGUE = [
    # name, p, n, q, shape, seed, variant, truncated
    ("synth_p3n2_m110", 3, 2, 19, [1, 1, 0], 11, "ok", True),
    ("synth_p3n2_m110_untruncated", 3, 2, 19, [1, 1, 0], 11, "ok", False),
    ("synth_p3n2_m101", 3, 2, 37, [1, 0, 1], 5, "ok", True),
    ("synth_p5n1_m01", 5, 1, 11, [0, 1], 3, "ok", True),
    ("synth_p3n2_m110_zpg_fail", 3, 2, 19, [1, 1, 0], 11, "zpg_fail", True),
    ("synth_p3n2_m110_max_fail", 3, 2, 19, [1, 1, 0], 11, "max_fail", True),
    ("synth_p3n2_m001_degenerate", 3, 2, 19, [0, 0, 1], 2, "degenerate", True),
]


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--all", metavar="DIR", required=True, help="write the whole catalogue into DIR")
    args = ap.parse_args()
    os.makedirs(args.all, exist_ok=True)
    for name, p, n, q, m, seed, variant, trunc in CATALOGUE:
        problem, truth = make(name, p, n, q, m, seed, variant, trunc)
        with open(os.path.join(args.all, name + ".json"), "w") as f:
            json.dump(problem, f, indent=1)
            f.write("\n")
        with open(os.path.join(args.all, name + ".truth.json"), "w") as f:
            json.dump(truth, f)
            f.write("\n")
        print("wrote", name)


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2026 zicr contributors
"""Independent high-precision reference values for the unit tests.

Everything here is computed with mpmath at 40 digits from the model
definitions, without calling the C++ code. Run it and paste the printed
constants into the tests when a reference changes.
"""

import mpmath as mp

mp.mp.dps = 40
LOG2PIE = mp.log(mp.pi * mp.e, 2)


def log2(x):
    return mp.log(x, 2)


def show(name, value):
    print(f"{name} = {mp.nstr(value, 17)}")


# ---- model
show("snr_pow_0_6", mp.mpf(100) ** mp.mpf("0.3"))

# ---- capacity
show("zicr_symmetric_001", log2(1 + 2 / mp.mpf("1.01")) + log2(1 + 1 / mp.mpf("1.01")))
show("zic_001", log2(1 + 1 / mp.mpf("1.01")) + 1)
show("genie_zero_interference", log2(5) + 1)
show("symmetric_0db", 1 + log2(mp.mpf("1.5")))

# ---- gaussian: one fixed scenario, covariance built from its definition
snr = dict(s11=2, s21=mp.mpf("0.5"), s31=3, s22=mp.mpf("1.5"), s32=mp.mpf("0.25"), s13=4)
P = (mp.mpf("0.7"), mp.mpf("0.4"), mp.mpf("0.9"))
ups = mp.mpc("0.3", "0.2")
eta1, eta2 = mp.mpc("1.2", "0.1"), mp.mpf("0.8")
vt1, vt2 = mp.mpf("0.4"), mp.mpc(0, "0.5")
th = dict(t11=mp.mpf("0.1"), t21=mp.mpf("0.7"), t31=mp.mpf("2.0"), t22=mp.mpf("3.1"), t32=mp.mpf("4.2"),
          t13=mp.mpf("5.9"))


def h(s, t):
    return mp.sqrt(s) * mp.expjpi(t / mp.pi)


h11, h21, h31 = h(snr["s11"], th["t11"]), h(snr["s21"], th["t21"]), h(snr["s31"], th["t31"])
h22, h32, h13 = h(snr["s22"], th["t22"]), h(snr["s32"], th["t32"]), h(snr["s13"], th["t13"])

# base (X1, X2, X3, Z1, Z2, Z3, W1, W2), K[i][j] = E{u_i u_j*}
K = mp.zeros(8, 8)
K[0, 0], K[1, 1], K[2, 2] = P
K[0, 2] = ups * mp.sqrt(P[0] * P[2])
K[2, 0] = mp.conj(K[0, 2])
for i in range(3, 8):
    K[i, i] = 1
K[6, 3], K[3, 6] = vt1, mp.conj(vt1)
K[7, 4], K[4, 7] = vt2, mp.conj(vt2)

rows = {
    "X1": [1, 0, 0, 0, 0, 0, 0, 0],
    "X2": [0, 1, 0, 0, 0, 0, 0, 0],
    "X3": [0, 0, 1, 0, 0, 0, 0, 0],
    "Y1": [h11, h21, h31, 1, 0, 0, 0, 0],
    "Y2": [0, h22, h32, 0, 1, 0, 0, 0],
    "Y3": [h13, 0, 0, 0, 0, 1, 0, 0],
    "S1": [h11, 0, h31, 0, 0, 0, eta1, 0],
    "S2": [0, h22, 0, 0, 0, 0, 0, eta2],
}


def cov(labels):
    M = mp.matrix([rows[l] for l in labels])
    return M * K * M.transpose_conj()


def ent(labels):
    C = cov(labels)
    return len(labels) * LOG2PIE + log2(mp.re(mp.det(C)))


def mi(a, b, c=()):
    c = list(c)
    hc = ent(c) if c else 0
    return ent(list(a) + c) + ent(list(b) + c) - ent(list(a) + list(b) + c) - hc


show("fixed_var_y1", mp.re(cov(["Y1"])[0, 0]))
show("fixed_h_y1", ent(["Y1"]))
show("fixed_h_y1_s1", ent(["Y1", "S1"]))
show("fixed_mi_x13_y1", mi(["X1", "X3"], ["Y1"]))
show("fixed_mi_x1_y3_given_x3", mi(["X1"], ["Y3"], ["X3"]))
show("fixed_mi_x2_s2_given_y2", mi(["X2"], ["S2"], ["Y2"]))
show("fixed_h_all", ent(list(rows)))

# ---- gaussian: phase-averaged sum rate with correlated inputs
s = dict(s11=2, s21=mp.mpf("0.5"), s31=3, s22=mp.mpf("1.5"), s32=mp.mpf("0.25"))
p1, p2, p3, v = mp.mpf("0.8"), mp.mpf("0.6"), mp.mpf("0.9"), mp.mpf("0.7")
c1 = s["s11"] * p1 + s["s31"] * p3
c2 = 2 * mp.sqrt(s["s11"] * p1 * s["s31"] * p3)
noise1 = 1 + s["s21"] * p2
first = mp.quad(lambda t: log2(1 + (c1 + c2 * v * mp.cos(t)) / noise1), [0, 2 * mp.pi]) / (2 * mp.pi)
second = log2(1 + s["s22"] * p2 / (1 + s["s32"] * p3))
show("correlated_sum_rate", first + second)

# ---- noisy pair example: violation at half the noise variance
xc = mp.matrix([[mp.mpf("1.2"), mp.mpc("0.3", "-0.1")], [mp.mpc("0.3", "0.1"), mp.mpf("0.8")]])
cc1, cc2 = mp.mpc("0.9", "0.4"), mp.mpc("-0.5", "1.1")
z1, z2 = mp.mpf(3), mp.mpf(1)


def noisy_pair_mi(z12):
    Kb = mp.zeros(4, 4)
    for i in range(2):
        for j in range(2):
            Kb[i, j] = xc[i, j]
    Kb[2, 2], Kb[3, 3] = z1, z2
    Kb[2, 3], Kb[3, 2] = z12, mp.conj(z12)
    M = mp.matrix([[1, 0, 0, 0], [0, 1, 0, 0], [cc1, cc2, 1, 0], [cc1, cc2, 0, 1]])
    C = M * Kb * M.transpose_conj()

    def e(idx):
        sub = mp.matrix(len(idx), len(idx))
        for a, i in enumerate(idx):
            for b, j in enumerate(idx):
                sub[a, b] = C[i, j]
        return log2(mp.re(mp.det(sub)))

    # I(X1,X2; Y1 | Y2)
    return e([0, 1, 3]) + e([2, 3]) - e([0, 1, 2, 3]) - e([3])


show("noisy_pair_half", noisy_pair_mi(mp.mpf("0.5") * z2))
show("noisy_pair_holds", noisy_pair_mi(z2))

# ---- genie
show("eta_symmetric", mp.mpf("1.01") / mp.sqrt(mp.mpf("0.5")))

# ---- phase average, symmetric snrd=1, snrc=0.01, beta1=beta2=1/2, full power, |v|=1/2
c1, c2, c3 = mp.mpf(2), mp.mpf(2), mp.mpf("1.01")
c4 = mp.mpf("1.01") ** 2 / mp.mpf("0.5")
c5 = mp.mpf("1.01")
vv = mp.mpf("0.5")


def g(t):
    d = c1 + c2 * vv * mp.cos(t)
    return c3 + (d * c4 - 2 * d * c5 - c5 ** 2) / (d + c4)


show("phase_avg_true", mp.quad(lambda t: log2(g(t)), [0, 2 * mp.pi]) / (2 * mp.pi))
f2 = (c3 * c4 + c1 * (c3 + c4) - c5 ** 2 - c2 * c3 * vv - c2 * c4 * vv - 2 * c5 * (c1 - c2 * vv)) / (c1 + c4 - c2 * vv)
show("phase_avg_closed", log2(f2))
f3 = (c3 * c4 + c1 * (c3 + c4) - c5 ** 2 - 2 * c5 * c1) / (c1 + c4)
show("f3_symmetric", f3)

# h(Y1|S1) + h(Y2|S2) at (0,1,1,1) for the same scenario; the second genie has the same scalars
var2 = 1 + mp.mpf("0.01") + 1 - abs(1 + mp.mpf("1.01")) ** 2 / (1 + c4)
show("prop1_corner", 2 * LOG2PIE + log2(f3) + log2(var2))

# ---- KKT
n, s11, s31, s32, nb1, nb2 = 4, 1, 10, mp.mpf("0.01"), 1, mp.mpf("0.4")
show("kkt_example", n * (log2(s11 + s31 + 2 * nb1) - log2(s32 + 2 * nb2)))

# Reference values for the order-16 Daubechies scaling function.
# Taps come from PyWavelets (pip install pywavelets); the dyadic values are
# built here by an independent numpy cascade: integer values from the
# eigenvector of the two-scale matrix, then phi(x/2^l) by the refinement
# equation, level by level.
import numpy as np
import pywt

LEVELS = 15
h = np.array(pywt.Wavelet("db16").rec_lo) * np.sqrt(2.0)  # sum h = 2
n = len(h) - 1  # support [0, n]

a = np.array([[h[2 * i - k] if 0 <= 2 * i - k <= n else 0.0 for k in range(n + 1)] for i in range(n + 1)])
w, v = np.linalg.eig(a)
vec = np.real(v[:, np.argmin(np.abs(w - 1.0))])
vals = vec / vec.sum()

for level in range(1, LEVELS + 1):
    step = 2 ** level
    new = np.zeros(n * step + 1)
    new[::2] = vals
    for i in range(1, n * step, 2):
        # phi(i / 2^level) = sum_k h_k phi(2 i / 2^level - k)
        s = 0.0
        for k in range(n + 1):
            j = 2 * i - k * step
            if 0 <= j <= n * (step // 2) * 2 and j % 2 == 0 and j // 2 < len(vals):
                s += h[k] * vals[j // 2]
        new[i] = s
    vals = new

x = np.arange(len(vals)) / 2.0 ** LEVELS
print("max", repr(vals.max()))
print("first_moment_taps", repr(np.dot(np.arange(len(h)), h) / 2.0))
print("first_moment", repr(np.trapezoid(x * vals, x)))
for shift_exp in (4, 5, 6):
    y = x - 15.5 + 2.0 ** (shift_exp + 1)
    print("C_D", shift_exp, repr(-np.trapezoid(vals / y, x)))

"""Pure-numpy kernels: gate application and the Pauli-expectation sweep.

This is the fallback backend; `magictrace._kernels` (Cython) implements the
same functions and must agree with it to the last bit. To that end every
complex multiplication is spelled out in real arithmetic with the same
expression structure on both sides (numpy's vectorised complex multiply
uses FMA internally, which would otherwise drift by an ulp), and the
extension is compiled with floating-point contraction disabled.

Conventions shared with the rest of the package:
  * `amps` is a contiguous complex128 array of length 2**n,
  * qubit 1 is the most significant bit of the amplitude index,
  * qubit arguments are 1-based,
  * all kernels mutate `amps` in place.
"""

import numpy as np

BACKEND_NAME = "python"


def _axis_view(amps, n, q):
    """View of amps with the target qubit isolated as the middle axis."""
    return amps.reshape(1 << (q - 1), 2, 1 << (n - q))


def apply_unitary_1q(amps, n, q, u00, u01, u10, u11):
    v = _axis_view(amps, n, q)
    a = v[:, 0, :].copy()
    b = v[:, 1, :].copy()
    ar, ai, br, bi = a.real, a.imag, b.real, b.imag
    u00, u01, u10, u11 = complex(u00), complex(u01), complex(u10), complex(u11)
    top = v[:, 0, :]
    bot = v[:, 1, :]
    top.real = u00.real * ar - u00.imag * ai + u01.real * br - u01.imag * bi
    top.imag = u00.real * ai + u00.imag * ar + u01.real * bi + u01.imag * br
    bot.real = u10.real * ar - u10.imag * ai + u11.real * br - u11.imag * bi
    bot.imag = u10.real * ai + u10.imag * ar + u11.real * bi + u11.imag * br


def apply_cnot(amps, n, control, target):
    v = amps.reshape([2] * n)
    sel = [slice(None)] * n
    sel[control - 1] = 1
    sub = v[tuple(sel)]
    axis = target - 1 if target < control else target - 2
    sub[...] = np.flip(sub, axis=axis).copy()


def apply_swap(amps, n, qa, qb):
    v = amps.reshape([2] * n)
    lo = [slice(None)] * n
    hi = [slice(None)] * n
    lo[qa - 1], lo[qb - 1] = 0, 1
    hi[qa - 1], hi[qb - 1] = 1, 0
    tmp = v[tuple(lo)].copy()
    v[tuple(lo)] = v[tuple(hi)]
    v[tuple(hi)] = tmp


def _scale_masked(amps, mask, phase):
    """amps[mask] *= phase via explicit real arithmetic."""
    phase = complex(phase)
    rv, iv = amps.real, amps.imag
    re = rv[mask]
    im = iv[mask]
    rv[mask] = phase.real * re - phase.imag * im
    iv[mask] = phase.real * im + phase.imag * re


def apply_phase_11(amps, n, qa, qb, phase):
    """Multiply amplitudes with both qubits set by `phase` (CZ/CPHASE diag)."""
    idx = np.arange(1 << n)
    bits = (1 << (n - qa)) | (1 << (n - qb))
    _scale_masked(amps, (idx & bits) == bits, phase)


def apply_pattern_phase(amps, n, q1, q2, q3, pattern, phase):
    """Multiply amplitudes matching a 3-bit pattern on (q1, q2, q3) by phase.

    `pattern` is an integer 0..7 whose bit 2 is the required value on q1,
    bit 1 on q2, bit 0 on q3.
    """
    idx = np.arange(1 << n)
    mask = (1 << (n - q1)) | (1 << (n - q2)) | (1 << (n - q3))
    want = (((pattern >> 2) & 1) << (n - q1)) \
        | (((pattern >> 1) & 1) << (n - q2)) \
        | ((pattern & 1) << (n - q3))
    _scale_masked(amps, (idx & mask) == want, phase)


def _wht_inplace(re, im):
    """Fast Walsh-Hadamard transform, w[z] = sum_b (-1)^{popcount(b&z)} v[b],
    applied to the real and imaginary planes."""
    size = re.shape[0]
    h = 1
    while h < size:
        for plane in (re, im):
            w = plane.reshape(-1, 2, h)
            a = w[:, 0, :].copy()
            b = w[:, 1, :]
            w[:, 0, :] = a + b
            w[:, 1, :] = a - b
        h *= 2


def pauli_expectations(amps, n):
    """Expectation of every signless Pauli string on a pure state.

    Returns a float64 array of length 4**n indexed by x_mask * 2**n + z_mask,
    where the string carries X on the x_mask bits, Z on the z_mask bits and
    Y where both overlap (Y = i X Z, making every string Hermitian).

    For fixed x the sum over b of conj(amps[b ^ x]) * (-1)^{popcount(b & z)}
    * amps[b] is a Walsh-Hadamard transform in z, which brings the full
    sweep down to O(n 4^n) without changing any of the summed terms.
    """
    size = 1 << n
    idx = np.arange(size)
    pc = np.bitwise_count(idx).astype(np.int64)
    qr = np.ascontiguousarray(amps.real)
    qi = np.ascontiguousarray(amps.imag)
    out = np.empty(1 << (2 * n), dtype=np.float64)
    for x in range(size):
        perm = idx ^ x
        pr = qr[perm]
        pi = qi[perm]
        # conj(p) * q, split into planes
        re = pr * qr + pi * qi
        im = pr * qi - pi * qr
        _wht_inplace(re, im)
        c = pc[np.bitwise_and(idx, x)] & 3
        out[x * size:(x + 1) * size] = np.choose(c, (re, -im, -re, im))
    return out

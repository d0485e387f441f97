# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: gate application and the Pauli-expectation sweep.

Mirrors `_kernels_py` function by function. Complex multiplications are
spelled out in real arithmetic with the same expression structure as the
numpy fallback, and the module is compiled with -ffp-contract=off, so both
backends agree bit for bit. All kernels mutate `amps` (contiguous
complex128, qubit 1 = most significant index bit) in place; qubit
arguments are 1-based.
"""

import numpy as np


def apply_unitary_1q(double complex[::1] amps, int n, int q,
                     double complex u00, double complex u01,
                     double complex u10, double complex u11):
    cdef Py_ssize_t stride = 1 << (n - q)
    cdef Py_ssize_t block = stride << 1
    cdef Py_ssize_t size = 1 << n
    cdef Py_ssize_t base, i
    cdef double ar, ai, br, bi
    cdef double u00r = u00.real, u00i = u00.imag
    cdef double u01r = u01.real, u01i = u01.imag
    cdef double u10r = u10.real, u10i = u10.imag
    cdef double u11r = u11.real, u11i = u11.imag
    for base in range(0, size, block):
        for i in range(base, base + stride):
            ar = amps[i].real
            ai = amps[i].imag
            br = amps[i + stride].real
            bi = amps[i + stride].imag
            amps[i] = (u00r * ar - u00i * ai + u01r * br - u01i * bi) + \
                1j * (u00r * ai + u00i * ar + u01r * bi + u01i * br)
            amps[i + stride] = (u10r * ar - u10i * ai + u11r * br - u11i * bi) + \
                1j * (u10r * ai + u10i * ar + u11r * bi + u11i * br)


def apply_cnot(double complex[::1] amps, int n, int control, int target):
    cdef Py_ssize_t cbit = 1 << (n - control)
    cdef Py_ssize_t tbit = 1 << (n - target)
    cdef Py_ssize_t size = 1 << n
    cdef Py_ssize_t i
    cdef double complex tmp
    for i in range(size):
        if (i & cbit) and not (i & tbit):
            tmp = amps[i]
            amps[i] = amps[i | tbit]
            amps[i | tbit] = tmp


def apply_swap(double complex[::1] amps, int n, int qa, int qb):
    cdef Py_ssize_t abit = 1 << (n - qa)
    cdef Py_ssize_t bbit = 1 << (n - qb)
    cdef Py_ssize_t size = 1 << n
    cdef Py_ssize_t i, j
    cdef double complex tmp
    for i in range(size):
        if (i & abit) and not (i & bbit):
            j = (i ^ abit) | bbit
            tmp = amps[i]
            amps[i] = amps[j]
            amps[j] = tmp


cdef inline void _scale(double complex[::1] amps, Py_ssize_t i,
                        double pr, double pi) noexcept:
    cdef double re = amps[i].real
    cdef double im = amps[i].imag
    amps[i] = (pr * re - pi * im) + 1j * (pr * im + pi * re)


def apply_phase_11(double complex[::1] amps, int n, int qa, int qb,
                   double complex phase):
    cdef Py_ssize_t mask = (1 << (n - qa)) | (1 << (n - qb))
    cdef Py_ssize_t size = 1 << n
    cdef Py_ssize_t i
    cdef double pr = phase.real, pi = phase.imag
    for i in range(size):
        if (i & mask) == mask:
            _scale(amps, i, pr, pi)


def apply_pattern_phase(double complex[::1] amps, int n, int q1, int q2,
                        int q3, int pattern, double complex phase):
    cdef Py_ssize_t mask = (1 << (n - q1)) | (1 << (n - q2)) | (1 << (n - q3))
    cdef Py_ssize_t want = 0
    if (pattern >> 2) & 1:
        want |= 1 << (n - q1)
    if (pattern >> 1) & 1:
        want |= 1 << (n - q2)
    if pattern & 1:
        want |= 1 << (n - q3)
    cdef Py_ssize_t size = 1 << n
    cdef Py_ssize_t i
    cdef double pr = phase.real, pi = phase.imag
    for i in range(size):
        if (i & mask) == want:
            _scale(amps, i, pr, pi)


def pauli_expectations(const double complex[::1] amps, int n):
    """Expectation of every signless Pauli string; see the numpy twin for
    the layout and the Walsh-Hadamard factorisation of the sweep."""
    cdef Py_ssize_t size = 1 << n
    cdef Py_ssize_t x, b, z, h, base, i
    cdef double ta, tb
    out_arr = np.empty(1 << (2 * n), dtype=np.float64)
    re_arr = np.empty(size, dtype=np.float64)
    im_arr = np.empty(size, dtype=np.float64)
    qr_arr = np.ascontiguousarray(np.asarray(amps).real)
    qi_arr = np.ascontiguousarray(np.asarray(amps).imag)
    pc_arr = np.bitwise_count(np.arange(size)).astype(np.int32)
    cdef double[::1] out = out_arr
    cdef double[::1] re = re_arr
    cdef double[::1] im = im_arr
    cdef double[::1] qr = qr_arr
    cdef double[::1] qi = qi_arr
    cdef int[::1] pc = pc_arr
    cdef double pr, pi
    cdef int phase_class
    for x in range(size):
        for b in range(size):
            pr = qr[b ^ x]
            pi = qi[b ^ x]
            re[b] = pr * qr[b] + pi * qi[b]
            im[b] = pr * qi[b] - pi * qr[b]
        h = 1
        while h < size:
            base = 0
            while base < size:
                for i in range(base, base + h):
                    ta = re[i]
                    tb = re[i + h]
                    re[i] = ta + tb
                    re[i + h] = ta - tb
                for i in range(base, base + h):
                    ta = im[i]
                    tb = im[i + h]
                    im[i] = ta + tb
                    im[i + h] = ta - tb
                base += h << 1
            h <<= 1
        for z in range(size):
            phase_class = pc[x & z] & 3
            if phase_class == 0:
                out[x * size + z] = re[z]
            elif phase_class == 1:
                out[x * size + z] = -im[z]
            elif phase_class == 2:
                out[x * size + z] = -re[z]
            else:
                out[x * size + z] = im[z]
    return out_arr


BACKEND_NAME = "compiled"

"""
Transition amplitudes on an excitation manifold
===============================================

The amplitude of finding the eigenstate |n, N-n> in the product state
|s1, s2> is a Jacobi polynomial with negative integer parameters.  The
same numbers come out of a plain beam-splitter expansion, which is how
they are checked.
"""

import numpy as np

from oscfield import amplitude_matrix, amplitude_row, jacobi_poly
from oscfield.oracle import RotationAngle, rotation_row

# the Jacobi polynomial stays finite where hypergeometric forms blow up
print("P_2^(-4,1)(-3) =", jacobi_poly(2, -4, 1, -3.0))

row = amplitude_row(0, 1, 1.0)
print("s1=0, s2=1, alpha=1:", np.round(row.values, 12))

# one row per initial state on the N=10 manifold forms a unitary matrix
u = amplitude_matrix(10, 0.5)
print("unitarity error:", np.abs(u @ u.conj().T - np.eye(11)).max())

# moduli agree with the beam-splitter expansion
alpha = 0.75
ours = np.abs(amplitude_row(5, 10, alpha).values)
theirs = np.abs(rotation_row(RotationAngle.from_alpha(alpha), 5, 10))
print("max |A| difference vs rotation:", np.abs(ours - theirs).max())

# N quanta in one mode split binomially with weight 1/(1 + alpha^2)
p = amplitude_row(12, 0, alpha).probabilities
print("mean oscillator quanta:", np.dot(np.arange(13), p), "expected", 12 / (1 + alpha**2))

"""Kazhdan-Lusztig polynomials for S_n and canonical bases of tensor powers of the vector representation of U_q(sl_k)."""

__version__ = "0.1.0"

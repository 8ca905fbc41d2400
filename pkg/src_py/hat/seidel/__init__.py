"""Seidel matrix characteristic polynomials over GF(3)"""

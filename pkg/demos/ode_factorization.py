"""Integrate two coefficient paths and print the factorization residual as the step shrinks."""

import numpy as np

from limweight.ode import PolynomialPath, rbivp_residuals

E12 = np.array([[0.0, 1.0], [0.0, 0.0]])


def main():
    rng = np.random.default_rng(7)
    u = PolynomialPath(rng.uniform(-1, 1, size=(3, 2, 2)), "u")
    v = PolynomialPath([E12.T, np.eye(2)], "v")
    prev = None
    for k in range(3, 9):
        h = 2.0 ** -k
        _, res = rbivp_residuals(u, v, h)
        worst = res.max()
        ratio = "" if prev is None else f"  ratio {prev / worst:6.2f}"
        print(f"h = 2^-{k}: max residual {worst:.3e}{ratio}")
        prev = worst


if __name__ == "__main__":
    main()

"""Walk through the Heisenberg Rota-Baxter fixture.

Run with ``python3 demos/heisenberg_descent.py``.
"""

from limweight.carriers import heis, heis_coords, symbolic_element
from limweight.pairs import power_pair, transported_mul
from limweight.post import triangle_from_rrb
from limweight.rota_baxter import descent_inverse, descent_mul, hb_fixture


def show(label, m):
    print(f"{label:<28} {tuple(str(x) for x in heis_coords(m))}")


def main():
    f = hb_fixture()
    p = power_pair()
    a, b = heis(1, 0, 0), heis(0, 1, 0)
    show("a", a)
    show("b", b)
    show("a .oo b (transported)", transported_mul(p, a, b))
    show("a b (matrix product)", a.matmul(b))
    show("B(a)", f.operator(a))
    show("a * a in the descent group", descent_mul(f, heis(0, 1, 0), heis(0, 1, 0)))
    show("descent inverse of <1,2,3>", descent_inverse(f, heis(1, 2, 3)))

    t = triangle_from_rrb(f)
    x, y = symbolic_element(3, "x"), symbolic_element(3, "y")
    show("x |> y, symbolic", t.triangle(x, y))


if __name__ == "__main__":
    main()

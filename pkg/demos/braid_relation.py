"""The Yang-Baxter map from the descent brace, checked on a few triples."""

from limweight.brace import braid_sides, check_braid, ybe_map
from limweight.carriers import Sampler, heis_coords
from limweight.post import triangle_from_rrb
from limweight.rota_baxter import hb_fixture


def coords(pair):
    return [tuple(str(x) for x in heis_coords(m)) for m in pair]


def main():
    f = hb_fixture()
    _, s = ybe_map(f, triangle_from_rrb(f))
    a, b, c = Sampler(1).tuples(3, 3, 1)[0]
    print("S(a, b)     =", coords(s(a, b)))
    print("S^-1 S(a,b) =", coords(s.s_inv(*s(a, b))), "== (a, b):", s.s_inv(*s(a, b)) == (a, b))
    left, right = braid_sides(s, a, b, c)
    print("braid sides agree on one triple:", left == right)
    r = check_braid(s, Sampler(2).tuples(3, 3, 50))
    print(f"{r.name}: {r.status} on {r.samples} triples; parts {r.details['parts']}")


if __name__ == "__main__":
    main()

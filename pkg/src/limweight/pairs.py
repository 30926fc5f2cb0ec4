"""Map pairs (lower, raise) as exact eps-families and the transported group.

A pair stands for a sequence of maps indexed by ``1/n``.  Both maps act on
eps-matrices, so ``lim raise(lower(a) lower(b))`` is one exact computation in
which the same ``n`` appears in both places.
"""

from dataclasses import dataclass
from typing import Callable

from .checks import CheckResult, run_law, witness
from .exact_core import (laurent_limit, mat_exp, mat_log, power_n, root_n, unipotent_inverse,
                         unipotent_power)
from .matrix import Matrix
from .scalars import coerce, eps, eps_series, inv_eps, normalize


@dataclass(frozen=True)
class MapPair:
    lower: Callable
    raise_: Callable
    kind: str = "custom"
    name: str = ""

    def describe(self):
        return self.name or self.kind


def power_pair():
    """lower(a) = a**(1/n), raise(a) = a**n."""
    return MapPair(root_n, power_n, "power", "power")


def identity_pair():
    return MapPair(lambda a: a, lambda a: a, "identity", "identity")


def exp_scale_pair(lower_scale, raise_scale, name="exp-scale"):
    """lower(a) = exp(l * log a), raise(a) = exp(r * log a) for eps-series l, r."""
    lower_scale = normalize(coerce(lower_scale))
    raise_scale = normalize(coerce(raise_scale))
    return MapPair(lambda a: unipotent_power(a, lower_scale),
                   lambda a: unipotent_power(a, raise_scale), "custom", name)


def pair_from_json(obj):
    if obj == "power":
        return power_pair()
    if obj == "identity":
        return identity_pair()
    if isinstance(obj, dict) and obj.get("kind") == "exp-scale":
        return exp_scale_pair(eps_series(obj["lower"]), eps_series(obj["raise"]), obj.get("name", "exp-scale"))
    raise ValueError(f"unknown pair descriptor: {obj!r}")


def check_pair_identity(p, samples, anchor="lower(raise(a)) = a"):
    """lower o raise = id on every sample."""
    return run_law("pair-identity", ((a,) for a in samples), lambda a: (p.lower(p.raise_(a)), a), anchor)


def transported_mul(p, a, b):
    return laurent_limit(p.raise_(p.lower(a).matmul(p.lower(b))))


def transported_unit(p, dim):
    return laurent_limit(p.raise_(Matrix.identity(dim)))


def transported_inverse(p, a):
    return laurent_limit(p.raise_(unipotent_inverse(p.lower(a))))


def check_transported_semigroup(p, triples, anchor="transported multiplication is a group law"):
    triples = list(triples)
    if not triples:
        return CheckResult("transported-group", True, anchor)
    dim = triples[0][0].dim
    e = transported_unit(p, dim)
    mul = lambda x, y: transported_mul(p, x, y)  # noqa: E731

    assoc = run_law("associativity", triples,
                    lambda a, b, c: (mul(mul(a, b), c), mul(a, mul(b, c))), anchor)
    if not assoc:
        return _rename(assoc, "transported-group")
    unit = run_law("unit", ((a,) for t in triples for a in t[:1]),
                   lambda a: ((mul(e, a), mul(a, e)), (a, a)), anchor)
    if not unit:
        return _rename(unit, "transported-group")
    inv = run_law("inverse", ((a,) for t in triples for a in t[:1]),
                  lambda a: ((mul(a, transported_inverse(p, a)), mul(transported_inverse(p, a), a)), (e, e)),
                  anchor)
    if not inv:
        return _rename(inv, "transported-group")
    return CheckResult("transported-group", True, anchor, samples=len(triples),
                       details={"unit": e})


def _rename(r, name):
    r.details = dict(r.details, part=r.name)
    r.name = name
    return r


def check_exp_log_sum(p, pairs, anchor="a .oo b = exp(log a + log b) for power pairs"):
    """transported_mul(a, b) == exp(log a + log b)."""
    return run_law("transported-is-bch-free", pairs,
                   lambda a, b: (transported_mul(p, a, b), mat_exp(mat_log(a) + mat_log(b))), anchor)


def is_limit_abelian(p, pairs, anchor="transported multiplication is commutative"):
    """Commutativity of .oo and lim raise(La Lb La^-1 Lb^-1) = I on all pairs."""
    pairs = list(pairs)
    comm = run_law("limit-abelian", pairs,
                   lambda a, b: (transported_mul(p, a, b), transported_mul(p, b, a)), anchor)
    if not comm:
        return comm

    def commutator_form(a, b):
        la, lb = p.lower(a), p.lower(b)
        c = la.matmul(lb).matmul(unipotent_inverse(la)).matmul(unipotent_inverse(lb))
        return laurent_limit(p.raise_(c)), Matrix.identity(a.dim)

    out = run_law("limit-abelian", pairs, commutator_form, anchor)
    if out:
        out.details = {"commutator_form": True}
    return out


def check_synchronized(p, families, anchor="diagonal limit equals iterated limit"):
    """Families are (a(eps), b(eps)) eps-matrices with existing limits."""
    def law(a_eps, b_eps):
        lhs = laurent_limit(p.raise_(p.lower(a_eps).matmul(p.lower(b_eps))))
        rhs = transported_mul(p, laurent_limit(a_eps), laurent_limit(b_eps))
        return lhs, rhs
    return run_law("synchronized", families, law, anchor)


def conjugation(g, m):
    """The conjugation action g m g^-1, valid for eps- or jet-matrices m."""
    return g.matmul(m).matmul(unipotent_inverse(g))


def trivial_action(g, m):
    return m


def action_from_json(obj):
    if obj in (None, "conjugation"):
        return conjugation
    if obj == "trivial":
        return trivial_action
    raise ValueError(f"unknown action descriptor: {obj!r}")


def transported_conjugation(p, a, b, act=conjugation):
    """Gamma_a(b) = lim raise(act_a(lower b))."""
    return laurent_limit(p.raise_(act(a, p.lower(b))))


def check_transported_action(p, triples, act=conjugation, anchor="Gamma is an action by automorphisms"):
    mul = lambda x, y: transported_mul(p, x, y)  # noqa: E731
    gam = lambda x, y: transported_conjugation(p, x, y, act)  # noqa: E731

    def law(a, b, c):
        lhs = (gam(a, mul(b, c)), gam(a.matmul(b), c))
        rhs = (mul(gam(a, b), gam(a, c)), gam(a, gam(b, c)))
        return lhs, rhs
    return run_law("transported-action", triples, law, anchor)


def squaring_pair():
    """Deliberately broken pair: lower = id, raise = squaring."""
    return MapPair(lambda a: a, lambda a: a.matmul(a), "custom", "squaring")


__all__ = [
    "MapPair", "action_from_json", "check_exp_log_sum", "check_pair_identity", "check_synchronized",
    "check_transported_action", "check_transported_semigroup", "conjugation", "eps", "exp_scale_pair",
    "identity_pair", "inv_eps", "is_limit_abelian", "pair_from_json", "power_pair", "squaring_pair",
    "transported_conjugation", "transported_inverse", "transported_mul", "transported_unit",
    "trivial_action", "witness",
]

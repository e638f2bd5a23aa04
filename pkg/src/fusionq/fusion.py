"""Level-k fusion rings via alcove reduction and the Kac-Walton rule.

A FusionContext fixes a root system and a level k.  Ring elements are
integer combinations of the dominant affine weights of that level; products
are evaluated exactly: tensor-product weights are pushed back into the
fundamental alcove by shifted affine Weyl reflections, with signs, and the
surviving terms accumulate integer coefficients.
"""

from __future__ import annotations

import json
import os
import tempfile
from typing import NamedTuple

_REDUCE_CAP = 10**6


class ReductionLimitError(RuntimeError):
    """Alcove reduction failed to terminate within the iteration cap."""


class ReducedWeight(NamedTuple):
    """Outcome of one alcove reduction: sign 0 means annihilated on a wall."""

    sign: int
    weight: tuple | None


class FusionElement:
    """An integer combination of level-k basis weights.

    Immutable by convention: term dicts are rebuilt, never mutated in place.
    Addition and scalar multiplication live here; ring multiplication needs
    the context and lives in fusion_product.
    """

    __slots__ = ("terms",)

    def __init__(self, terms):
        self.terms = {w: c for w, c in sorted(terms.items()) if c}

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, FusionElement) and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return FusionElement(out)

    def __neg__(self):
        return FusionElement({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        return FusionElement({w: n * c for w, c in self.terms.items()})

    def coeff(self, w):
        return self.terms.get(tuple(w), 0)

    def support(self):
        return tuple(self.terms)

    def relabel(self, perm):
        """Push every basis weight through a vertex permutation."""
        out = {}
        for w, c in self.terms.items():
            new = [0] * len(w)
            for i, wi in enumerate(w):
                new[perm[i]] = wi
            out[tuple(new)] = c
        return FusionElement(out)

    def __repr__(self):
        if not self.terms:
            return "FusionElement(0)"
        bits = [f"{c:+d}*V{list(w)}" for w, c in self.terms.items()]
        return "FusionElement(" + " ".join(bits) + ")"


def enumerate_basis(rs, level):
    """All dominant affine weights of the given level, lex-sorted on the
    finite coefficients; the identity weight comes first."""
    r = rs.rank
    cm = rs.comarks
    out = []

    def rec(pos, remaining, acc):
        if pos == r:
            out.append((remaining,) + tuple(acc))
            return
        step = cm[pos + 1]
        for v in range(remaining // step + 1):
            acc.append(v)
            rec(pos + 1, remaining - step * v, acc)
            acc.pop()

    rec(0, level, [])
    return tuple(out)


class FusionContext:
    """A fusion ring at fixed level.

    The level must be >= 1; the verification CLI additionally insists on
    level >= 2, where the conjectural grid structure is non-degenerate.
    """

    def __init__(self, rs, level, cache_dir=None):
        if level < 1:
            raise ValueError(f"level must be >= 1, got {level}")
        self.rs = rs
        self.level = level
        self.basis = enumerate_basis(rs, level)
        self.basis_index = {w: i for i, w in enumerate(self.basis)}
        self.unit_weight = self.basis[0]
        self._products = {}
        self._cache_dir = cache_dir
        self._cache_dirty = False
        if cache_dir:
            self._load_cache()

    # -- element constructors -------------------------------------------------

    def element(self, terms):
        """Build an element from a terms dict, validating basis membership."""
        clean = {}
        for w, c in terms.items():
            w = tuple(w)
            if w not in self.basis_index:
                raise ValueError(f"{w} is not a level-{self.level} basis weight")
            if not isinstance(c, int):
                raise ValueError(f"coefficient {c!r} is not an integer")
            clean[w] = c
        return FusionElement(clean)

    def basis_element(self, w):
        return self.element({tuple(w): 1})

    def zero(self):
        return FusionElement({})

    def unit(self):
        return FusionElement({self.unit_weight: 1})

    # -- product cache persistence -------------------------------------------

    def _cache_path(self):
        name = f"fusionq-{self.rs.type}-k{self.level}.json"
        return os.path.join(self._cache_dir, name)

    def _load_cache(self):
        try:
            with open(self._cache_path()) as fh:
                raw = json.load(fh)
            loaded = {}
            for key, pairs in raw["products"].items():
                a, b = key.split("|")
                wa = tuple(int(x) for x in a.split(","))
                wb = tuple(int(x) for x in b.split(","))
                if wa not in self.basis_index or wb not in self.basis_index:
                    raise ValueError("stale basis")
                terms = {}
                for wl, c in pairs:
                    wt = tuple(int(x) for x in wl)
                    if wt not in self.basis_index or not isinstance(c, int):
                        raise ValueError("stale term")
                    terms[wt] = c
                loaded[(wa, wb)] = terms
        except (OSError, ValueError, KeyError, AttributeError, TypeError):
            # Unreadable or mismatched cache: recompute from scratch.
            return
        self._products.update(loaded)

    def save_cache(self):
        """Persist the basis-pair product table, atomically."""
        if not self._cache_dir or not self._cache_dirty:
            return
        os.makedirs(self._cache_dir, exist_ok=True)
        payload = {
            "products": {
                ",".join(map(str, a)) + "|" + ",".join(map(str, b)): [
                    [list(w), c] for w, c in terms.items()
                ]
                for (a, b), terms in sorted(self._products.items())
            }
        }
        fd, tmp = tempfile.mkstemp(dir=self._cache_dir, suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as fh:
                json.dump(payload, fh)
            os.replace(tmp, self._cache_path())
        except OSError:
            try:
                os.unlink(tmp)
            except OSError:
                pass


def affinize(ctx, finite):
    """Extend a finite weight tuple to level ctx.level by fixing the affine
    coefficient; the result need not be dominant."""
    if len(finite) != ctx.rs.rank:
        raise ValueError("finite weight has wrong length")
    body = sum(c * x for c, x in zip(ctx.rs.comarks[1:], finite))
    return (ctx.level - body,) + tuple(finite)


def alcove_reduce(ctx, w, policy="first"):
    """Reduce an affine weight to the fundamental alcove under the shifted
    affine Weyl action.

    Returns ReducedWeight(sign, weight): sign 0 when the shifted weight
    lands on a wall (the term vanishes), otherwise +/-1 tracking reflection
    parity with the dominant representative.

    policy picks which negative coordinate to reflect at ("first", "last",
    or a callable on the index list); the result is policy-independent.
    """
    rs = ctx.rs
    if len(w) != rs.rank + 1:
        raise ValueError("affine weight has wrong length")
    if sum(c * x for c, x in zip(rs.comarks, w)) != ctx.level:
        raise ValueError(f"weight {w} does not have level {ctx.level}")
    if policy == "first":
        pick = lambda idx: idx[0]
    elif policy == "last":
        pick = lambda idx: idx[-1]
    elif callable(policy):
        pick = policy
    else:
        raise ValueError(f"unknown policy {policy!r}")

    rows = rs.affine_reflection_rows
    mu = [x + 1 for x in w]
    sign = 1
    for _ in range(_REDUCE_CAP):
        if any(c == 0 for c in mu):
            return ReducedWeight(0, None)
        negs = [i for i, c in enumerate(mu) if c < 0]
        if not negs:
            return ReducedWeight(sign, tuple(c - 1 for c in mu))
        i = pick(negs)
        c = mu[i]
        row = rows[i]
        mu = [m - c * rv for m, rv in zip(mu, row)]
        sign = -sign
    raise ReductionLimitError(f"no convergence after {_REDUCE_CAP} reflections")


def _basis_product(ctx, la, mu):
    key = (la, mu) if la <= mu else (mu, la)
    cached = ctx._products.get(key)
    if cached is not None:
        return cached
    if la == ctx.unit_weight:
        result = {mu: 1}
    elif mu == ctx.unit_weight:
        result = {la: 1}
    else:
        rs = ctx.rs
        fa, fb = la[1:], mu[1:]
        # Walk the weight system of the smaller factor.
        if rs.weyl_dimension(fa) <= rs.weyl_dimension(fb):
            small, big = fa, fb
        else:
            small, big = fb, fa
        acc = {}
        for nu, mult in rs.weight_multiplicities(small).items():
            shifted = tuple(x + y for x, y in zip(big, nu))
            red = alcove_reduce(ctx, affinize(ctx, shifted))
            if red.sign:
                acc[red.weight] = acc.get(red.weight, 0) + red.sign * mult
        result = {w: c for w, c in sorted(acc.items()) if c}
        for c in result.values():
            if c < 0:
                raise AssertionError(
                    f"negative structure constant in {la} * {mu}: {result}"
                )
    ctx._products[key] = result
    ctx._cache_dirty = True
    return result


def fusion_product(ctx, u, v):
    """Ring product of two elements (or bare basis weights)."""
    if not isinstance(u, FusionElement):
        u = ctx.basis_element(u)
    if not isinstance(v, FusionElement):
        v = ctx.basis_element(v)
    acc = {}
    for wa, ca in u.terms.items():
        for wb, cb in v.terms.items():
            scale = ca * cb
            for w, c in _basis_product(ctx, wa, wb).items():
                acc[w] = acc.get(w, 0) + scale * c
    return FusionElement(acc)


def conjugate(ctx, u):
    """Image under the ring involution induced by the longest Weyl element."""
    if not isinstance(u, FusionElement):
        u = ctx.basis_element(u)
    return u.relabel(ctx.rs.conj_perm)


def apply_outer(ctx, perm, u, check=True):
    """Act by an extended-diagram automorphism.

    The action relabels vertices; with check=True the result is verified
    against the equivalent route of multiplying by the corresponding
    simple-current basis element.
    """
    rs = ctx.rs
    perm = tuple(perm)
    if perm not in rs.outer_group:
        raise ValueError(f"{perm} is not an extended-diagram automorphism")
    if not isinstance(u, FusionElement):
        u = ctx.basis_element(u)
    relabeled = u.relabel(perm)
    if check:
        current = [0] * (rs.rank + 1)
        current[perm[0]] = ctx.level
        via_product = fusion_product(ctx, ctx.basis_element(current), u)
        if via_product != relabeled:
            raise AssertionError(
                "outer automorphism disagrees with its simple current"
            )
    return relabeled


# -- serialization ------------------------------------------------------------


def element_to_obj(ctx, u):
    """JSON-ready dict for one element, terms in basis order."""
    terms = []
    for w in ctx.basis:
        c = u.terms.get(w)
        if c:
            terms.append({"w": list(w), "c": c})
    return {
        "family": ctx.rs.type.family,
        "rank": ctx.rs.rank,
        "level": ctx.level,
        "terms": terms,
    }


def element_from_obj(ctx, obj):
    """Inverse of element_to_obj, validating against the context."""
    if obj.get("family") != ctx.rs.type.family or obj.get("rank") != ctx.rs.rank:
        raise ValueError("element belongs to a different algebra")
    if obj.get("level") != ctx.level:
        raise ValueError("element belongs to a different level")
    terms = {}
    for entry in obj["terms"]:
        terms[tuple(entry["w"])] = entry["c"]
    return ctx.element(terms)


def element_to_json(ctx, u):
    return json.dumps(element_to_obj(ctx, u))


def element_from_json(ctx, text):
    return element_from_obj(ctx, json.loads(text))

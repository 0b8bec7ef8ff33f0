"""Built-in small groups, addressable by name.

Tables are built on first request and cached.  Element 0 is the identity
in every entry; constructions are deterministic so serialized fixtures
stay stable across runs.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .groups import (
    FiniteGroup,
    brute_force_isomorphism,
    cyclic_group,
    direct_product,
    group_from_elements,
)


def _perm_compose(p, q):
    # (p then after q? no: apply q first, then p)
    return tuple(p[x] for x in q)


def symmetric_group(n: int, name: str | None = None) -> FiniteGroup:
    elems = sorted(itertools.permutations(range(n)))
    return group_from_elements(elems, _perm_compose, name=name or f"S{n}")


def alternating_group(n: int, name: str | None = None) -> FiniteGroup:
    def parity(p):
        inv = sum(1 for i in range(len(p)) for j in range(i + 1, len(p))
                  if p[i] > p[j])
        return inv % 2
    elems = sorted(p for p in itertools.permutations(range(n))
                   if parity(p) == 0)
    return group_from_elements(elems, _perm_compose, name=name or f"A{n}")


def dihedral_group(n: int, name: str | None = None) -> FiniteGroup:
    """Symmetries of the regular n-gon, order 2n; elements are
    (rotation, flip) pairs with (0,0) the identity."""
    def op(a, b):
        r1, s1 = a
        r2, s2 = b
        r = (r1 - r2) % n if s1 else (r1 + r2) % n
        return (r, s1 ^ s2)
    elems = [(r, s) for r in range(n) for s in (0, 1)]
    elems.sort()
    return group_from_elements(elems, op, name=name or f"D{n}")


_UNIT_MUL = {
    # quaternion units 0=1, 1=i, 2=j, 3=k; value = (sign flip, unit)
    (0, 0): (0, 0), (0, 1): (0, 1), (0, 2): (0, 2), (0, 3): (0, 3),
    (1, 0): (0, 1), (2, 0): (0, 2), (3, 0): (0, 3),
    (1, 1): (1, 0), (2, 2): (1, 0), (3, 3): (1, 0),
    (1, 2): (0, 3), (2, 1): (1, 3),
    (2, 3): (0, 1), (3, 2): (1, 1),
    (3, 1): (0, 2), (1, 3): (1, 2),
}


def quaternion_group(name: str = "Q8") -> FiniteGroup:
    def op(a, b):
        s1, u1 = a
        s2, u2 = b
        flip, u = _UNIT_MUL[(u1, u2)]
        return ((s1 + s2 + flip) % 2, u)
    elems = [(s, u) for s in (0, 1) for u in range(4)]
    return group_from_elements(elems, op, name=name)


def special_linear_2_5(name: str = "SL25") -> FiniteGroup:
    """2x2 matrices of determinant 1 over the field with 5 elements,
    order 120; the identity matrix comes first."""
    elems = []
    for a, b, c, d in itertools.product(range(5), repeat=4):
        if (a * d - b * c) % 5 == 1:
            elems.append((a, b, c, d))
    elems.sort(key=lambda m: m != (1, 0, 0, 1))

    def op(m, n):
        a, b, c, d = m
        e, f, g, h = n
        return ((a * e + b * g) % 5, (a * f + b * h) % 5,
                (c * e + d * g) % 5, (c * f + d * h) % 5)
    return group_from_elements(elems, op, name=name)


_BUILDERS = {
    "Z1": lambda: cyclic_group(1, "Z1"),
    "Z2": lambda: cyclic_group(2, "Z2"),
    "Z3": lambda: cyclic_group(3, "Z3"),
    "Z4": lambda: cyclic_group(4, "Z4"),
    "Z5": lambda: cyclic_group(5, "Z5"),
    "Z6": lambda: cyclic_group(6, "Z6"),
    "Z7": lambda: cyclic_group(7, "Z7"),
    "Z8": lambda: cyclic_group(8, "Z8"),
    "K4": lambda: direct_product(cyclic_group(2), cyclic_group(2), name="K4"),
    "Z2xZ4": lambda: direct_product(cyclic_group(2), cyclic_group(4),
                                    name="Z2xZ4"),
    "Z2xZ2xZ2": lambda: direct_product(
        direct_product(cyclic_group(2), cyclic_group(2)), cyclic_group(2),
        name="Z2xZ2xZ2"),
    "S3": lambda: symmetric_group(3),
    "D4": lambda: dihedral_group(4),
    "Q8": lambda: quaternion_group(),
    "D5": lambda: dihedral_group(5),
    "A4": lambda: alternating_group(4),
    "S4": lambda: symmetric_group(4),
    "A5": lambda: alternating_group(5),
}

_ALIASES = {"Z2xZ2": "K4"}


def catalog_names() -> list[str]:
    return list(_BUILDERS)


@lru_cache(maxsize=None)
def get_group(name: str) -> FiniteGroup:
    key = _ALIASES.get(name, name)
    if key not in _BUILDERS:
        raise KeyError(f"unknown catalog group {name!r}")
    return _BUILDERS[key]()


def identify_group(g: FiniteGroup, limits=None) -> str | None:
    """Catalog name of g's isomorphism type, or None when no entry of
    the same order matches."""
    from .groups import DEFAULT_LIMITS
    limits = limits or DEFAULT_LIMITS
    for name in catalog_names():
        cand = get_group(name)
        if cand.order != g.order:
            continue
        if brute_force_isomorphism(g, cand, limits=limits) is not None:
            return name
    return None

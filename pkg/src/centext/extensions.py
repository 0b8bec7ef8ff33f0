"""Central extension carriers built from cocycle tables, and the
matrix decomposition of maps between two such carriers.

Elements of a carrier are pairs (x, y) with x in g1 and y in g2,
flattened to the index x * |g2| + y.  The product twists the g1 part:
(x, y)(x', y') = (x x' e(y, y'), y y').  The copy of g1 along y = 0 is
central by construction and the quotient by it multiplies like g2.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cocycles import (
    Cocycle2,
    are_cohomologous,
    coboundary_from,
    is_cocycle,
    is_epsilon_endomorphism,
    sim_is_trivial,
)
from .errors import (
    GroupMismatch,
    HypothesisNotVerified,
    NotAbelianCoefficients,
    NonAbelianUnsupported,
    SizeLimitExceeded,
)
from .groups import (
    DEFAULT_LIMITS,
    FiniteGroup,
    GroupMap,
    SearchLimits,
    Subgroup,
    subgroup_closure,
    validate_group,
)

__all__ = [
    "ExtensionGroup", "build_extension", "is_abelian_extension",
    "HomMatrix", "decompose_hom", "reconstruct_hom",
    "is_homomorphism_direct", "HomConditionReport", "check_hom_conditions",
    "equivalence_isomorphism", "preserves_kernel_setwise",
    "preserves_section_setwise", "is_epsilon_endomorphism",
    "central_quotient_data",
]


@dataclass(frozen=True)
class ExtensionGroup:
    """A carrier group together with the data it was built from."""

    g1: FiniteGroup
    g2: FiniteGroup
    cocycle: Cocycle2
    group: FiniteGroup

    def index_of_pair(self, x: int, y: int) -> int:
        return x * self.g2.order + y

    def pair_of_index(self, i: int) -> tuple[int, int]:
        return divmod(i, self.g2.order)

    def embed_kernel(self, x: int) -> int:
        return x * self.g2.order

    @property
    def kernel_indices(self) -> tuple[int, ...]:
        n2 = self.g2.order
        return tuple(x * n2 for x in range(self.g1.order))

    @property
    def section_indices(self) -> tuple[int, ...]:
        return tuple(range(self.g2.order))

    def kernel_subgroup(self) -> Subgroup:
        return Subgroup(parent=self.group, members=self.kernel_indices)

    def to_dict(self) -> dict:
        return {"g1": self.g1.to_dict(), "g2": self.g2.to_dict(),
                "cocycle_table": [list(r) for r in self.cocycle.table],
                "group": self.group.to_dict()}


def build_extension(e: Cocycle2, name: str | None = None) -> ExtensionGroup:
    """Carrier of the twisted product for the cocycle e.

    The table is validated in full, and centrality of the embedded
    coefficient copy is checked constructively.
    """
    g1, g2 = e.g1, e.g2
    if not g1.is_abelian:
        raise NotAbelianCoefficients(
            "extension carriers here take abelian coefficients")
    ok, witness = is_cocycle(g1, g2, e.table)
    if not ok:
        raise ValueError(f"not a cocycle, first failure {witness}")
    n1, n2 = g1.order, g2.order
    n = n1 * n2
    table = []
    for i in range(n):
        x, y = divmod(i, n2)
        row = []
        for j in range(n):
            xp, yp = divmod(j, n2)
            z1 = g1.table[g1.table[x][xp]][e.table[y][yp]]
            z2 = g2.table[y][yp]
            row.append(z1 * n2 + z2)
        table.append(row)
    group = validate_group(table, name=name)
    ext = ExtensionGroup(g1=g1, g2=g2, cocycle=e, group=group)
    for x in range(n1):
        k = ext.embed_kernel(x)
        for j in range(n):
            if group.table[k][j] != group.table[j][k]:
                raise AssertionError(
                    "embedded coefficient copy failed to be central")
    return ext


def is_abelian_extension(ext: ExtensionGroup) -> bool:
    return ext.group.is_abelian


def equivalence_isomorphism(source: ExtensionGroup,
                            target: ExtensionGroup) -> GroupMap | None:
    """If the two cocycles differ by a coboundary, the isomorphism
    (x, y) -> (x t(y), y); it fixes the kernel copy pointwise and
    induces the identity on the quotient.  None when the cocycles are
    not cohomologous."""
    if source.g1 != target.g1 or source.g2 != target.g2:
        raise GroupMismatch("extensions over different group pairs")
    witness = are_cohomologous(target.cocycle, source.cocycle)
    if witness is None:
        return None
    t = witness.t
    g1, g2 = source.g1, source.g2
    n2 = g2.order
    images = []
    for i in range(source.group.order):
        x, y = divmod(i, n2)
        images.append(g1.table[x][t.images[y]] * n2 + y)
    phi = GroupMap(dom=source.group, cod=target.group, images=tuple(images))
    assert phi.is_homomorphism() and phi.is_bijective()
    return phi


def central_quotient_data(group: FiniteGroup, members):
    """Read extension data back out of a concrete group: given a central
    subgroup (by element indices), return the subgroup as an abstract
    group, the quotient, and the cocycle of the minimal-representative
    section, as (kernel, quotient, cocycle, section_reps).

    The section picks the least element of each coset, so the identity
    coset is represented by the identity and the cocycle is normalized.
    Rebuilding the twisted product from the returned data yields a group
    isomorphic to the input via (x, y) -> members[x] * section_reps[y].
    """
    members = sorted(set(members))
    if not members or members[0] != 0:
        raise ValueError("central subgroup must contain the identity")
    mset = frozenset(members)
    if subgroup_closure(group, members) != mset:
        raise ValueError("members are not closed under the product")
    for z in members:
        if any(group.table[z][x] != group.table[x][z]
               for x in range(group.order)):
            raise ValueError(f"element {z} is not central")
    z_index = {z: i for i, z in enumerate(members)}
    kernel = FiniteGroup(
        order=len(members),
        table=tuple(tuple(z_index[group.table[a][b]] for b in members)
                    for a in members),
        name=None)

    coset_of = [-1] * group.order
    reps = []
    for g in range(group.order):
        if coset_of[g] >= 0:
            continue
        idx = len(reps)
        reps.append(g)
        for z in members:
            coset_of[group.table[z][g]] = idx
    quotient = validate_group(
        [[coset_of[group.table[reps[i]][reps[j]]] for j in range(len(reps))]
         for i in range(len(reps))])

    inv = group.inverses
    table = []
    for i in range(quotient.order):
        row = []
        for j in range(quotient.order):
            prod = group.table[reps[i]][reps[j]]
            row.append(z_index[group.table[prod][inv[reps[coset_of[prod]]]]])
        table.append(tuple(row))
    cocycle = Cocycle2(g1=kernel, g2=quotient, table=tuple(table))
    return kernel, quotient, cocycle, tuple(reps)


def preserves_kernel_setwise(source: ExtensionGroup, target: ExtensionGroup,
                             phi: GroupMap) -> bool:
    want = set(target.kernel_indices)
    return {phi(i) for i in source.kernel_indices} == want


def preserves_section_setwise(source: ExtensionGroup, target: ExtensionGroup,
                              phi: GroupMap) -> bool:
    want = set(target.section_indices)
    return {phi(i) for i in source.section_indices} == want


# ---------------------------------------------------------------------------
# matrix components of a map between carriers


@dataclass(frozen=True)
class HomMatrix:
    """The four component maps of phi: phi(x, y) =
    (phi11(x) phi12(y) e2(phi21(x), phi22(y)), phi21(x) phi22(y))."""

    source: ExtensionGroup
    target: ExtensionGroup
    phi11: GroupMap
    phi12: GroupMap
    phi21: GroupMap
    phi22: GroupMap

    def __post_init__(self):
        expected = ((self.phi11, self.source.g1, self.target.g1),
                    (self.phi12, self.source.g2, self.target.g1),
                    (self.phi21, self.source.g1, self.target.g2),
                    (self.phi22, self.source.g2, self.target.g2))
        for m, dom, cod in expected:
            if m.dom != dom or m.cod != cod:
                raise GroupMismatch("component map has wrong domain/codomain")


def decompose_hom(source: ExtensionGroup, target: ExtensionGroup,
                  phi: GroupMap) -> HomMatrix:
    """Read the four components off phi by restricting to the kernel
    copy and the section."""
    if phi.dom != source.group or phi.cod != target.group:
        raise GroupMismatch("phi does not map between the two carriers")
    n2t = target.g2.order
    k_images = [divmod(phi(source.embed_kernel(x)), n2t)
                for x in range(source.g1.order)]
    s_images = [divmod(phi(y), n2t) for y in range(source.g2.order)]
    return HomMatrix(
        source=source, target=target,
        phi11=GroupMap(dom=source.g1, cod=target.g1,
                       images=tuple(a for a, _ in k_images)),
        phi12=GroupMap(dom=source.g2, cod=target.g1,
                       images=tuple(a for a, _ in s_images)),
        phi21=GroupMap(dom=source.g1, cod=target.g2,
                       images=tuple(b for _, b in k_images)),
        phi22=GroupMap(dom=source.g2, cod=target.g2,
                       images=tuple(b for _, b in s_images)))


def reconstruct_hom(m: HomMatrix) -> GroupMap:
    """The map defined by the component formula."""
    src, tgt = m.source, m.target
    g1t, g2t = tgt.g1, tgt.g2
    e2 = tgt.cocycle.table
    n2s, n2t = src.g2.order, g2t.order
    images = []
    for i in range(src.group.order):
        x, y = divmod(i, n2s)
        b1, b2 = m.phi21.images[x], m.phi22.images[y]
        a = g1t.table[g1t.table[m.phi11.images[x]][m.phi12.images[y]]][
            e2[b1][b2]]
        images.append(a * n2t + g2t.table[b1][b2])
    return GroupMap(dom=src.group, cod=tgt.group, images=tuple(images))


def is_homomorphism_direct(source: ExtensionGroup, target: ExtensionGroup,
                           phi: GroupMap):
    """Check the two product-compatibility families that together are
    equivalent to phi being a homomorphism:

      phi(x,y) phi(x',1) = phi(x x', y)
      phi(x,y) phi(1,y') = phi(x e1(y,y'), y y')

    Returns (ok, witness) with the first failing triple."""
    if phi.dom != source.group or phi.cod != target.group:
        raise GroupMismatch("phi does not map between the two carriers")
    g1, g2 = source.g1, source.g2
    e1 = source.cocycle.table
    n2 = g2.order
    mul_t = target.group.table
    for x in range(g1.order):
        for y in range(n2):
            left = phi(x * n2 + y)
            for xp in range(g1.order):
                got = mul_t[left][phi(xp * n2)]
                if got != phi(g1.table[x][xp] * n2 + y):
                    return False, ("kernel_factor", (x, y, xp))
            for yp in range(n2):
                got = mul_t[left][phi(yp)]
                want = phi(g1.table[x][e1[y][yp]] * n2 + g2.table[y][yp])
                if got != want:
                    return False, ("section_factor", (x, y, yp))
    return True, None


@dataclass(frozen=True)
class HomConditionReport:
    """Outcome of the four component conditions, with first-failure
    witnesses and the two derived coboundary tables.

    The four conditions, in order:
      1. phi21 is a homomorphism into the centralizer of the phi22
         image, phi22 is an endomorphism of g2, and phi11 respects
         products by source-cocycle values;
      2. the section images of phi22 and phi21 commute inside the
         target carrier;
      3. phi21 kills the source cocycle values, and the inverted target
         cocycle pulled back through phi21 is the coboundary of phi11;
      4. phi11.e1 minus e2.(phi22 x phi22) is the coboundary of phi12.
    """

    component_morphisms: bool
    morphism_witness: object
    images_commute_in_carrier: bool
    commute_witness: object
    kernel_coboundary_equation: bool
    kernel_witness: object
    section_coboundary_equation: bool
    section_witness: object
    psi_phi11: Cocycle2
    psi_phi12: Cocycle2

    @property
    def conditions(self) -> tuple[bool, bool, bool, bool]:
        return (self.component_morphisms, self.images_commute_in_carrier,
                self.kernel_coboundary_equation,
                self.section_coboundary_equation)

    @property
    def all_hold(self) -> bool:
        return all(self.conditions)


def _require_sim_trivial(g2: FiniteGroup, assume: bool,
                         limits: SearchLimits):
    if assume:
        return
    try:
        ok = sim_is_trivial(g2, limits)
    except (NonAbelianUnsupported, SizeLimitExceeded) as exc:
        raise HypothesisNotVerified(
            "coboundary-triviality of the quotient could not be decided; "
            "pass the assume flag to proceed") from exc
    if not ok:
        raise HypothesisNotVerified(
            "the quotient has nontrivial self-coboundaries, so the "
            "component conditions are not known to characterize "
            "homomorphisms; pass the assume flag to proceed")


def check_hom_conditions(m: HomMatrix, assume_sim_trivial: bool = False,
                         limits: SearchLimits = DEFAULT_LIMITS
                         ) -> HomConditionReport:
    """Evaluate the four conditions on a component matrix that
    characterize homomorphisms between the two carriers (under the
    quotient coboundary-triviality hypothesis, which is verified or must
    be assumed)."""
    src, tgt = m.source, m.target
    if src.g1 != tgt.g1 or src.g2 != tgt.g2:
        raise GroupMismatch("both carriers must sit over the same pair")
    _require_sim_trivial(src.g2, assume_sim_trivial, limits)
    g1, g2 = src.g1, src.g2
    e1, e2 = src.cocycle.table, tgt.cocycle.table
    inv1 = g1.inverses

    # 1. phi21 a homomorphism into the centralizer of the phi22 image,
    #    phi22 an endomorphism, phi11 compatible with e1-value products
    cond1, w1 = True, None
    if not m.phi21.is_homomorphism():
        cond1, w1 = False, ("phi21_not_homomorphism", None)
    elif not m.phi22.is_homomorphism():
        cond1, w1 = False, ("phi22_not_endomorphism", None)
    elif not is_epsilon_endomorphism(m.phi11, src.cocycle):
        cond1, w1 = False, ("phi11_not_cocycle_endomorphism", None)
    else:
        im22 = sorted(set(m.phi22.images))
        for x in range(1, g1.order):
            v = m.phi21.images[x]
            bad = next((u for u in im22
                        if g2.table[v][u] != g2.table[u][v]), None)
            if bad is not None:
                cond1, w1 = False, ("phi21_not_centralizing", (x, bad))
                break

    # 2. section images commute inside the target carrier
    cond2, w2 = True, None
    mul_t = tgt.group.table
    for y in range(1, g2.order):
        a = tgt.index_of_pair(0, m.phi22.images[y])
        for x in range(1, g1.order):
            b = tgt.index_of_pair(0, m.phi21.images[x])
            if mul_t[a][b] != mul_t[b][a]:
                cond2, w2 = False, (y, x)
                break
        if not cond2:
            break

    # 3. source cocycle values die under phi21, and the inverted target
    #    cocycle through phi21 is the coboundary of phi11
    psi11 = coboundary_from(m.phi11)
    cond3, w3 = True, None
    for y in range(1, g2.order):
        for yp in range(1, g2.order):
            if m.phi21.images[e1[y][yp]] != 0:
                cond3, w3 = False, ("value_survives", (y, yp))
                break
        if not cond3:
            break
    if cond3:
        for x in range(g1.order):
            for xp in range(g1.order):
                lhs = inv1[e2[m.phi21.images[x]][m.phi21.images[xp]]]
                if lhs != psi11.table[x][xp]:
                    cond3, w3 = False, ("coboundary_mismatch", (x, xp))
                    break
            if not cond3:
                break

    # 4. phi11.e1 - e2.(phi22 x phi22) equals the coboundary of phi12
    psi12 = coboundary_from(m.phi12)
    cond4, w4 = True, None
    for y in range(g2.order):
        for yp in range(g2.order):
            lhs = g1.table[m.phi11.images[e1[y][yp]]][
                inv1[e2[m.phi22.images[y]][m.phi22.images[yp]]]]
            if lhs != psi12.table[y][yp]:
                cond4, w4 = False, (y, yp)
                break
        if not cond4:
            break

    return HomConditionReport(
        component_morphisms=cond1, morphism_witness=w1,
        images_commute_in_carrier=cond2, commute_witness=w2,
        kernel_coboundary_equation=cond3, kernel_witness=w3,
        section_coboundary_equation=cond4, section_witness=w4,
        psi_phi11=psi11, psi_phi12=psi12)

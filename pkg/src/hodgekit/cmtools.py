"""Galois-theoretic CM-type machinery on abstract permutation models.

A model is a transitive permutation group on the 2g embeddings of a CM
field, together with the central free involution playing the role of
complex conjugation.  CM types are half-systems; their Kubota ranks are
exact integer lattice ranks of the translate span, computed both on the
nose (raw) and antisymmetrized by conjugation (reduced).  Primitivity is
decided by exhaustive block-system enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .intlinalg import integer_rank

Perm = tuple[int, ...]


def identity_perm(size: int) -> Perm:
    return tuple(range(size))


def compose(p: Perm, q: Perm) -> Perm:
    """(p o q)(i) = p(q(i))."""
    return tuple(p[q[i]] for i in range(len(p)))


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def generate_group(generators: Sequence[Perm], size: int) -> frozenset[Perm]:
    """Closure of the generators under composition (finite by design)."""
    ident = identity_perm(size)
    seen = {ident}
    frontier = [ident]
    gens = [tuple(g) for g in generators]
    while frontier:
        p = frontier.pop()
        for g in gens:
            nxt = compose(g, p)
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return frozenset(seen)


def parse_cycles(text: str, size: int) -> Perm:
    """Parse disjoint cycle notation like "(0 3)(1 4)(2 5)"."""
    out = list(range(size))
    body = text.strip()
    if body in ("", "()", "id"):
        return tuple(out)
    if body.count("(") != body.count(")"):
        raise ValueError(f"unbalanced cycle notation: {text!r}")
    chunks = [c for c in body.replace(")", ")|").split("|") if c.strip()]
    seen: set[int] = set()
    for chunk in chunks:
        chunk = chunk.strip()
        if not (chunk.startswith("(") and chunk.endswith(")")):
            raise ValueError(f"bad cycle chunk {chunk!r}")
        items = chunk[1:-1].replace(",", " ").split()
        cycle = [int(x) for x in items]
        if any(not 0 <= x < size for x in cycle):
            raise ValueError(f"cycle entry out of range in {chunk!r}")
        if len(set(cycle)) != len(cycle) or seen & set(cycle):
            raise ValueError(f"repeated point in cycles: {text!r}")
        seen.update(cycle)
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            out[a] = b
    return tuple(out)


class InvalidModelError(ValueError):
    pass


@dataclass(frozen=True)
class GaloisModel:
    """Transitive group on the embedding set with central free involution."""

    generators: tuple[Perm, ...]
    conj: Perm
    size: int
    elements: frozenset[Perm] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.size < 2 or self.size % 2 != 0:
            raise InvalidModelError("embedding set must have even size >= 2")
        gens = tuple(tuple(g) for g in self.generators)
        conj = tuple(self.conj)
        if any(len(g) != self.size for g in gens) or len(conj) != self.size:
            raise InvalidModelError("permutation length mismatch")
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "conj", conj)
        elements = generate_group(gens + (conj,), self.size)
        object.__setattr__(self, "elements", elements)
        if compose(conj, conj) != identity_perm(self.size):
            raise InvalidModelError("conjugation must have order 2")
        if any(conj[i] == i for i in range(self.size)):
            raise InvalidModelError("conjugation must act freely")
        if any(
            compose(conj, g) != compose(g, conj) for g in elements
        ):
            raise InvalidModelError("conjugation must be central")
        orbit = {0}
        frontier = [0]
        while frontier:
            x = frontier.pop()
            for g in gens + (conj,):
                if g[x] not in orbit:
                    orbit.add(g[x])
                    frontier.append(g[x])
        if len(orbit) != self.size:
            raise InvalidModelError("action must be transitive")

    @property
    def g(self) -> int:
        return self.size // 2

    @property
    def order(self) -> int:
        return len(self.elements)

    def conjugate_pairs(self) -> list[tuple[int, int]]:
        pairs = []
        for i in range(self.size):
            j = self.conj[i]
            if i < j:
                pairs.append((i, j))
        return pairs


def cyclic_model(size: int, shift: Optional[int] = None) -> GaloisModel:
    """Regular action of Z/size with conjugation a given shift (size/2
    by default, the unique central free involution of the cycle)."""
    if size % 2 != 0:
        raise InvalidModelError("cyclic CM model needs even size")
    rot = tuple((i + 1) % size for i in range(size))
    s = size // 2 if shift is None else shift
    conj = tuple((i + s) % size for i in range(size))
    return GaloisModel(generators=(rot,), conj=conj, size=size)


def abelian_model(factors: Sequence[int]) -> GaloisModel:
    """Regular action of a product of cyclic groups; conjugation must be
    picked afterwards via with_conj when the default (the element of
    order 2 in the last even factor) is not wanted."""
    dims = [int(d) for d in factors]
    if any(d < 2 for d in dims):
        raise InvalidModelError("cyclic factors must be >= 2")
    size = 1
    for d in dims:
        size *= d
    if size % 2:
        raise InvalidModelError("group order must be even")

    def index(coords: Sequence[int]) -> int:
        idx = 0
        for c, d in zip(coords, dims):
            idx = idx * d + (c % d)
        return idx

    def coords(idx: int) -> list[int]:
        out = []
        for d in reversed(dims):
            out.append(idx % d)
            idx //= d
        return list(reversed(out))

    gens = []
    for axis in range(len(dims)):
        images = []
        for i in range(size):
            c = coords(i)
            c[axis] += 1
            images.append(index(c))
        gens.append(tuple(images))
    # default conjugation: add the order-2 element on the last even axis
    even_axes = [a for a, d in enumerate(dims) if d % 2 == 0]
    if not even_axes:
        raise InvalidModelError("no order-2 element available")
    axis = even_axes[-1]
    images = []
    for i in range(size):
        c = coords(i)
        c[axis] += dims[axis] // 2
        images.append(index(c))
    return GaloisModel(generators=tuple(gens), conj=tuple(images), size=size)


def dihedral_model(n: int) -> GaloisModel:
    """Regular action of the dihedral group of order 2n (n even, so the
    central rotation by n/2 serves as conjugation).  Point a + n*b stands
    for rotation^a * flip^b."""
    if n % 2 != 0:
        raise InvalidModelError("dihedral CM model needs n even")
    size = 2 * n

    def index(a: int, b: int) -> int:
        return (a % n) + n * (b % 2)

    # left multiplication by r: r * r^a s^b = r^(a+1) s^b
    rot = tuple(index(i % n + 1, i // n) for i in range(size))
    # left multiplication by s: s * r^a s^b = r^(-a) s^(b+1)
    flip = tuple(index(-(i % n), i // n + 1) for i in range(size))
    conj = tuple(index(i % n + n // 2, i // n) for i in range(size))
    return GaloisModel(generators=(rot, flip), conj=conj, size=size)


@dataclass(frozen=True)
class CMType:
    """A half-system: one embedding from each conjugate pair."""

    theta: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "theta", frozenset(int(x) for x in self.theta))

    def sorted(self) -> tuple[int, ...]:
        return tuple(sorted(self.theta))

    def to_json(self) -> list[int]:
        return list(self.sorted())


def check_cm_type(model: GaloisModel, theta: CMType) -> None:
    t = theta.theta
    if len(t) != model.g:
        raise InvalidModelError(f"CM type must have size g={model.g}")
    image = {model.conj[x] for x in t}
    if image & t:
        raise InvalidModelError("CM type meets its conjugate")
    if image | t != set(range(model.size)):
        raise InvalidModelError("CM type and conjugate must cover everything")


def enumerate_cm_types(model: GaloisModel) -> list[CMType]:
    """All 2^g half-systems, in canonical order."""
    pairs = model.conjugate_pairs()
    types: list[CMType] = []
    for mask in range(1 << len(pairs)):
        chosen = frozenset(
            pair[(mask >> i) & 1] for i, pair in enumerate(pairs)
        )
        types.append(CMType(chosen))
    types.sort(key=lambda t: t.sorted())
    return types


def _translate(perm: Perm, theta: frozenset[int]) -> frozenset[int]:
    return frozenset(perm[x] for x in theta)


def translate_lattice(model: GaloisModel, theta: CMType) -> list[list[int]]:
    """Indicator rows of the distinct group translates of the type."""
    check_cm_type(model, theta)
    translates = sorted(
        {tuple(sorted(_translate(a, theta.theta))) for a in model.elements}
    )
    return [
        [1 if i in set(t) else 0 for i in range(model.size)] for t in translates
    ]


def kubota_rank(model: GaloisModel, theta: CMType) -> tuple[int, int]:
    """(raw, reduced) integer ranks of the translate span of the type.

    raw spans the indicator vectors of all group translates of theta in
    the free module on the embeddings; reduced spans the differences
    translate - conjugate(translate), i.e. the image in the quotient by
    sigma + conj(sigma) = 0.  Both by exact fraction-free elimination.
    """
    raw_rows = translate_lattice(model, theta)
    red_rows = [[2 * v - 1 for v in row] for row in raw_rows]
    return integer_rank(raw_rows), integer_rank(red_rows)


# ---------------------------------------------------------------------------
# Block systems and primitivity
# ---------------------------------------------------------------------------


def _all_subgroups(model: GaloisModel) -> list[frozenset[Perm]]:
    ident = identity_perm(model.size)
    elements = sorted(model.elements)
    found = {frozenset([ident])}
    frontier = [frozenset([ident])]
    while frontier:
        sub = frontier.pop()
        for x in elements:
            if x in sub:
                continue
            bigger = generate_group(tuple(sub) + (x,), model.size)
            if bigger not in found:
                found.add(bigger)
                frontier.append(bigger)
    return sorted(found, key=len)


def block_systems(model: GaloisModel) -> list[tuple[frozenset[int], ...]]:
    """All proper nontrivial invariant partitions of the embedding set.

    Systems correspond to subgroups between the stabilizer of a point
    and the full group; the block of the base point is its orbit under
    the intermediate subgroup.
    """
    base = 0
    stab = {p for p in model.elements if p[base] == base}
    systems = set()
    for sub in _all_subgroups(model):
        if not stab <= sub:
            continue
        block = frozenset(p[base] for p in sub)
        if len(block) in (1, model.size):
            continue
        blocks = {block}
        for p in model.elements:
            blocks.add(_translate(p, block))
        total = sum(len(b) for b in blocks)
        if total != model.size:  # pragma: no cover - orbits partition
            raise AssertionError("block translates failed to partition")
        systems.add(tuple(sorted(blocks, key=min)))
    return sorted(systems, key=lambda s: len(s[0]))


def quotient_model(
    model: GaloisModel, blocks: tuple[frozenset[int], ...]
) -> tuple[GaloisModel, dict[int, int]]:
    """The induced model on a block system, plus point -> block index."""
    lookup: dict[int, int] = {}
    for idx, block in enumerate(blocks):
        for x in block:
            lookup[x] = idx

    def push(perm: Perm) -> Perm:
        return tuple(lookup[perm[min(block)]] for block in blocks)

    gens = tuple(push(g) for g in model.generators)
    conj = push(model.conj)
    return GaloisModel(generators=gens, conj=conj, size=len(blocks)), lookup


def is_primitive(model: GaloisModel, theta: CMType) -> bool:
    """True unless the type is induced from a proper CM sub-model.

    Induced means: some proper nontrivial block system has theta equal
    to a union of blocks (conjugation then automatically acts freely on
    the blocks, so the quotient is again a CM model and the image of
    theta is a CM type on it).
    """
    check_cm_type(model, theta)
    for blocks in block_systems(model):
        covered = [b for b in blocks if b <= theta.theta]
        if sum(len(b) for b in covered) == model.g:
            return False
    return True


def rank_lower_bound(n: int) -> dict:
    """The exact statement of the rank bound for commutative algebras.

    Returns 2n together with the least integer r such that 2^r >= 2n;
    integer ranks are compared against that threshold.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    two_n = 2 * n
    threshold = (two_n - 1).bit_length()
    return {"two_n": two_n, "ceil_log2": threshold}


@dataclass(frozen=True)
class ScanEntry:
    theta: tuple[int, ...]
    raw: int
    reduced: int
    primitive: bool
    raw_meets_bound: Optional[bool]
    reduced_meets_bound: Optional[bool]

    def to_json(self) -> dict:
        return {
            "theta": list(self.theta),
            "raw": self.raw,
            "reduced": self.reduced,
            "primitive": self.primitive,
            "raw_meets_bound": self.raw_meets_bound,
            "reduced_meets_bound": self.reduced_meets_bound,
        }


@dataclass(frozen=True)
class ScanReport:
    degree: int
    p: Optional[int]
    bound: Optional[int]
    entries: tuple[ScanEntry, ...]

    @property
    def total(self) -> int:
        return len(self.entries)

    @property
    def primitive_count(self) -> int:
        return sum(1 for e in self.entries if e.primitive)

    @property
    def non_primitive_count(self) -> int:
        return self.total - self.primitive_count

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "p": self.p,
            "bound": self.bound,
            "total": self.total,
            "primitive": self.primitive_count,
            "non_primitive": self.non_primitive_count,
            "entries": [e.to_json() for e in self.entries],
        }


def _is_odd_prime(g: int) -> bool:
    if g < 3 or g % 2 == 0:
        return False
    return all(g % d for d in range(3, int(g ** 0.5) + 1, 2))


def tankeev_scan(model: GaloisModel) -> ScanReport:
    """Rank/primitivity table over all CM types of the model.

    The 2p-1 bound is only meaningful when the model has degree 2p for
    an odd prime p; otherwise the bound columns are reported as None.
    """
    g = model.g
    applicable = _is_odd_prime(g)
    bound = 2 * g - 1 if applicable else None
    entries = []
    for theta in enumerate_cm_types(model):
        raw, reduced = kubota_rank(model, theta)
        prim = is_primitive(model, theta)
        entries.append(
            ScanEntry(
                theta=theta.sorted(),
                raw=raw,
                reduced=reduced,
                primitive=prim,
                raw_meets_bound=(raw >= bound) if applicable else None,
                reduced_meets_bound=(reduced >= bound) if applicable else None,
            )
        )
    return ScanReport(
        degree=model.size,
        p=g if applicable else None,
        bound=bound,
        entries=tuple(entries),
    )

"""Strip diagrams between color vectors and their induced chain maps.

A morphism from one color vector to another is a partial matching of
positions by arcs (source index at most target index, equal colors at the
two ends) plus a multiset of labeled dots.  Isotopy classes are carried
entirely by the arc set and the dot multiset, so that is all we store.

On a fixed link diagram every morphism induces, block by block over the
Bruhat order, a linear map between the complexes of its two color
vectors: arcs between equal positions act as the identity, arcs between
different positions as the full merge-split, an unmatched source position
is capped off (merges then counit), an unmatched target position is
filled in (unit then splits), and each dot contributes its sphere value,
the dot color mod 2.

Composition concatenates arcs through shared middle points.  A middle
point matched on neither side leaves a closed cap-cup component behind;
it is recorded as a dot of that point's color, which is exactly what
makes the induced maps compose on the nose.
"""

import json
from dataclasses import dataclass

from .bruhat import DEFAULT_N_CAP
from .cochain import (
    DEFAULT_DIM_BUDGET,
    CochainComplex,
    _identity_options,
    build_complex,
    validate_colors,
)
from .errors import (
    CompositionError,
    ConsistencyError,
    FormatError,
    MembershipError,
    PreconditionError,
    ValidationError,
)
from .gf2 import GF2Matrix, QuotientSpace
from .linkdiag import LinkDiagram


@dataclass(frozen=True)
class ZndiagMorphism:
    """A strip diagram: arcs as a partial matching plus labeled dots."""

    source: tuple[int, ...]
    target: tuple[int, ...]
    arcs: tuple[tuple[int, int], ...] = ()
    dots: tuple[int, ...] = ()

    def __post_init__(self):
        src = validate_colors(self.source)
        tgt = validate_colors(self.target)
        if len(src) != len(tgt):
            raise ValidationError(
                "source and target color vectors must have the same length"
            )
        n = len(src)
        arcs = tuple(sorted((int(i), int(j)) for i, j in self.arcs))
        seen_src: set[int] = set()
        seen_tgt: set[int] = set()
        for i, j in arcs:
            if not (1 <= i <= n and 1 <= j <= n):
                raise ValidationError(f"arc ({i},{j}) endpoint out of range 1..{n}")
            if i > j:
                raise ValidationError(
                    f"arc ({i},{j}) must run weakly rightward (source index <= target index)"
                )
            if src[i - 1] != tgt[j - 1]:
                raise ValidationError(
                    f"arc ({i},{j}) joins colors {src[i - 1]} and {tgt[j - 1]}"
                )
            if i in seen_src or j in seen_tgt:
                raise ValidationError(f"arc ({i},{j}) reuses a matched endpoint")
            seen_src.add(i)
            seen_tgt.add(j)
        dots = tuple(sorted(int(c) for c in self.dots))
        if any(c < 1 for c in dots):
            raise ValidationError("dot colors must be positive integers")
        object.__setattr__(self, "source", src)
        object.__setattr__(self, "target", tgt)
        object.__setattr__(self, "arcs", arcs)
        object.__setattr__(self, "dots", dots)

    @property
    def n(self) -> int:
        return len(self.source)

    def arc_by_source(self) -> dict[int, int]:
        return {i: j for i, j in self.arcs}

    def arc_by_target(self) -> dict[int, int]:
        return {j: i for i, j in self.arcs}

    def sphere_factor(self) -> int:
        """The scalar all dots contribute: product of colors mod 2."""
        out = 1
        for c in self.dots:
            out = (out * c) % 2
        return out


def validate_morphism(m: ZndiagMorphism) -> ZndiagMorphism:
    """Re-run the constructor checks; returns the canonicalized morphism."""
    return ZndiagMorphism(m.source, m.target, m.arcs, m.dots)


def identity_morphism(x) -> ZndiagMorphism:
    xs = validate_colors(x)
    return ZndiagMorphism(xs, xs, tuple((i, i) for i in range(1, len(xs) + 1)))


def compose(a: ZndiagMorphism, b: ZndiagMorphism) -> ZndiagMorphism:
    """Concatenate a then b (diagrammatic order, a's target is b's source).

    Arcs chain through the middle; a middle point matched on neither side
    becomes a dot of its color.
    """
    if a.target != b.source:
        raise CompositionError(
            f"cannot compose: middle vectors differ, {a.target} vs {b.source}"
        )
    a_by_tgt = a.arc_by_target()
    b_by_src = b.arc_by_source()
    arcs = tuple(
        (i, b_by_src[j]) for i, j in a.arcs if j in b_by_src
    )
    closed = tuple(
        a.target[j - 1]
        for j in range(1, a.n + 1)
        if j not in a_by_tgt and j not in b_by_src
    )
    return ZndiagMorphism(a.source, b.target, arcs, a.dots + b.dots + closed)


def parse_morphism(text: str) -> ZndiagMorphism:
    """Read the morphism file format: source, target, arcs, dots."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"morphism file is not valid JSON: {exc}") from exc
    if not isinstance(data, dict) or "source" not in data or "target" not in data:
        raise FormatError('morphism file must carry "source" and "target" lists')
    arcs = data.get("arcs", [])
    dots = data.get("dots", [])
    if not isinstance(arcs, list) or not isinstance(dots, list):
        raise FormatError('"arcs" and "dots" must be lists')
    return ZndiagMorphism(
        tuple(data["source"]),
        tuple(data["target"]),
        tuple(tuple(arc) for arc in arcs),
        tuple(dots),
    )


@dataclass
class ChainMap:
    """Per-level matrices between the complexes of two color vectors."""

    morphism: ZndiagMorphism
    source: CochainComplex
    target: CochainComplex
    blocks: tuple[GF2Matrix, ...]

    def commutes(self) -> bool:
        """Whether the map intertwines the two differentials at every level."""
        for k in range(len(self.source.differentials)):
            lhs = self.target.differentials[k] @ self.blocks[k]
            rhs = self.blocks[k + 1] @ self.source.differentials[k]
            if lhs != rhs:
                return False
        return True


def chain_map(
    d: LinkDiagram,
    m: ZndiagMorphism,
    *,
    source_complex: CochainComplex | None = None,
    target_complex: CochainComplex | None = None,
    budget: int = DEFAULT_DIM_BUDGET,
    n_cap: int = DEFAULT_N_CAP,
) -> ChainMap:
    """Assemble the per-level matrices induced by a strip diagram."""
    if m.n != d.n:
        raise PreconditionError(
            f"morphism is between vectors of length {m.n}, diagram has {d.n} crossings"
        )
    cx = source_complex or build_complex(d, m.source, budget=budget, n_cap=n_cap)
    cy = target_complex or build_complex(d, m.target, budget=budget, n_cap=n_cap)
    if cx.colors != m.source or cy.colors != m.target:
        raise PreconditionError("prebuilt complexes do not match the morphism ends")

    scalar = m.sphere_factor()
    by_src = m.arc_by_source()
    by_tgt = m.arc_by_target()

    blocks = []
    for level in range(cx.max_rank + 1):
        coords = []
        if scalar:
            for p in cx.level_perms[level]:
                lx = cx.layouts[p]
                ly = cy.layouts[p]
                generators = []
                for pos in range(m.n):
                    if pos + 1 in by_src:
                        j = by_src[pos + 1] - 1
                        if j == pos:
                            generators.append(_identity_options(lx, ly, pos))
                        else:
                            radix = lx.position_radix(pos)
                            wi = lx.constant_weight(pos)
                            wo = ly.constant_weight(j)
                            generators.append([(a * wi, a * wo) for a in range(radix)])
                    else:
                        radix = lx.position_radix(pos)
                        wi = lx.constant_weight(pos)
                        generators.append([(a * wi, 0) for a in range(radix)])
                for pos in range(m.n):
                    if pos + 1 not in by_tgt:
                        radix = ly.position_radix(pos)
                        wo = ly.constant_weight(pos)
                        generators.append([(0, b * wo) for b in range(radix)])
                pairs = [(0, 0)]
                for opts in generators:
                    pairs = [(i + di, o + do) for i, o in pairs for di, do in opts]
                c0 = cx.block_offsets[p]
                r0 = cy.block_offsets[p]
                coords.extend((r0 + o, c0 + i) for i, o in pairs)
        blocks.append(
            GF2Matrix.from_triplets(cy.level_dims[level], cx.level_dims[level], coords)
        )
    return ChainMap(morphism=m, source=cx, target=cy, blocks=tuple(blocks))


def cohomology_quotients(cx: CochainComplex) -> list[QuotientSpace]:
    """Cycle-mod-boundary coordinate systems, one per level.

    Expensive relative to a single chain map, so callers comparing many
    morphisms over the same complex should build these once and pass them
    to induced_map_from.
    """
    top = cx.max_rank
    out = []
    for k in range(top + 1):
        if k < top:
            cycles = cx.differentials[k].nullspace_basis()
        else:
            dim = cx.level_dims[k]
            cycles = GF2Matrix.zeros(0, dim).nullspace_basis()
        boundaries = cx.differentials[k - 1].columns() if k > 0 else []
        out.append(QuotientSpace(cycles, boundaries))
    return out


def induced_map_from(
    cm: ChainMap,
    source_quotients: list[QuotientSpace] | None = None,
    target_quotients: list[QuotientSpace] | None = None,
) -> list[GF2Matrix]:
    """Matrices on cohomology in the deterministic quotient bases."""
    qx = source_quotients or cohomology_quotients(cm.source)
    qy = target_quotients or cohomology_quotients(cm.target)
    out = []
    for k in range(cm.source.max_rank + 1):
        mat = GF2Matrix.zeros(qy[k].dim, qx[k].dim)
        for q in range(qx[k].dim):
            image = cm.blocks[k].mul_vector(qx[k].representative(q))
            try:
                coords = qy[k].coordinates(image)
            except MembershipError as exc:
                raise ConsistencyError(
                    f"level {k}: a cycle image left the target cycle space, "
                    "so the map is not a chain map"
                ) from exc
            for r in coords.support():
                mat._set(r, q)
        out.append(mat)
    return out


def induced_cohomology_map(
    d: LinkDiagram,
    m: ZndiagMorphism,
    *,
    budget: int = DEFAULT_DIM_BUDGET,
    n_cap: int = DEFAULT_N_CAP,
) -> list[GF2Matrix]:
    """Chain map, commutation check, then the induced maps on cohomology."""
    cm = chain_map(d, m, budget=budget, n_cap=n_cap)
    if not cm.commutes():
        raise ConsistencyError("chain map does not commute with the differentials")
    return induced_map_from(cm)


def random_morphism(rng, source, target, dot_colors=(1, 2, 3)) -> ZndiagMorphism:
    """A random valid morphism between two given color vectors."""
    src = validate_colors(source)
    tgt = validate_colors(target)
    n = len(src)
    candidates = [
        (i, j)
        for i in range(1, n + 1)
        for j in range(i, n + 1)
        if src[i - 1] == tgt[j - 1]
    ]
    rng.shuffle(candidates)
    arcs = []
    used_src: set[int] = set()
    used_tgt: set[int] = set()
    for i, j in candidates:
        if i in used_src or j in used_tgt or rng.random() < 0.3:
            continue
        arcs.append((i, j))
        used_src.add(i)
        used_tgt.add(j)
    dots = tuple(rng.choice(dot_colors) for _ in range(rng.randrange(3)))
    return ZndiagMorphism(src, tgt, tuple(arcs), dots)

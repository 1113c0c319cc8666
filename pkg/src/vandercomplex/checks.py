"""Self-contained property suite behind the `check` CLI command.

Each check exercises one family of guarantees the package rests on and
returns a single pass/fail line.  The acceptance tests in tests/ run the
same ground at full scale; this suite is sized to finish in well under a
minute so it can be run casually.
"""

import random
from dataclasses import dataclass
from itertools import combinations, product
from math import factorial

from .bruhat import build_bruhat, covers, inversions, mahonian_distribution
from .cochain import build_complex, euler_characteristic, homology, order_independence_check, verify_euler
from .errors import SizeError
from .gendet import (
    build_matrix_complex,
    det_exact,
    det_permutation_expansion,
    random_matrix,
)
from .gf2 import GF2Matrix
from .linkdiag import circle_count, random_diagram, torus_two_n
from .tqft import AlgebraSpec, connected_map, frobenius_check
from .zndiag import (
    chain_map,
    cohomology_quotients,
    compose,
    identity_morphism,
    induced_map_from,
    random_morphism,
)

DEFAULT_SEED = 20250811


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str


def _brute_covers(p):
    """Covers by filtering all transpositions, the slow reference."""
    n = len(p)
    base = inversions(p)
    out = set()
    for i, j in combinations(range(n), 2):
        q = list(p)
        q[i], q[j] = q[j], q[i]
        q = tuple(q)
        if inversions(q) == base + 1:
            out.add(q)
    return out


def check_bruhat_covers(rng) -> CheckResult:
    for n in range(1, 6):
        poset = build_bruhat(n)
        for level in poset.levels:
            for p in level:
                if set(covers(p)) != _brute_covers(p):
                    return CheckResult("bruhat covers", False, f"mismatch at {p}")
    return CheckResult("bruhat covers", True, "interchange rule matches brute force, n <= 5")


def check_bruhat_shape(rng) -> CheckResult:
    for n in range(1, 6):
        poset = build_bruhat(n)
        sizes = [len(level) for level in poset.levels]
        if sizes != mahonian_distribution(n):
            return CheckResult("bruhat shape", False, f"level sizes off at n={n}")
        if sum(sizes) != factorial(n):
            return CheckResult("bruhat shape", False, f"element count off at n={n}")
        if sizes != sizes[::-1]:
            return CheckResult("bruhat shape", False, f"levels not symmetric at n={n}")
        for p, q in poset.cover_edges:
            if inversions(q) != inversions(p) + 1:
                return CheckResult("bruhat shape", False, f"edge {p}->{q} skips a rank")
        # thinness: every bottom-to-top length-2 path count must be exactly 2
        paths: dict[tuple, int] = {}
        for p, q in poset.cover_edges:
            for t in covers(q):
                paths[(p, t)] = paths.get((p, t), 0) + 1
        bad = [k for k, v in paths.items() if v != 2]
        if bad:
            return CheckResult("bruhat shape", False, f"non-diamond interval {bad[0]}")
    return CheckResult("bruhat shape", True, "Mahonian levels and thin intervals, n <= 5")


def check_torus_circles(rng) -> CheckResult:
    for n in range(1, 9):
        d = torus_two_n(n)
        for bits in product((0, 1), repeat=n):
            h = sum(bits)
            if h == 0:
                continue
            if circle_count(d, bits) != h:
                return CheckResult("torus circles", False, f"n={n}, smoothing {bits}")
    return CheckResult("torus circles", True, "count equals height for all smoothings, n <= 8")


def check_frobenius(rng) -> CheckResult:
    for dim in range(1, 9):
        if not frobenius_check(AlgebraSpec(dim)):
            return CheckResult("frobenius algebras", False, f"axioms fail at dim {dim}")
    for dim in range(1, 5):
        spec = AlgebraSpec(dim)
        for r in range(1, 5):
            for mid in range(1, 5):
                for l in range(1, 5):
                    lhs = connected_map(spec, mid, l) @ connected_map(spec, r, mid)
                    if lhs != connected_map(spec, r, l):
                        return CheckResult(
                            "frobenius algebras", False, f"composition fails dim={dim} {r},{mid},{l}"
                        )
    return CheckResult(
        "frobenius algebras", True, "axioms for dims 1..8; connected composition law dims <= 4"
    )


TORUS_EULER_CASES = [
    (2, (1, 2), False),
    (2, (2, 1), False),
    (3, (1, 2, 3), False),
    (3, (3, 1, 2), False),
    (3, (2, 2, 2), False),
    (4, (1, 2, 3, 4), True),
    (4, (2, 3, 5, 7), True),
]


def product_formula(x) -> int:
    out = 1
    for v in x:
        out *= v
    for i in range(len(x)):
        for j in range(i + 1, len(x)):
            out *= x[j] - x[i]
    return out


def check_torus_euler(rng) -> CheckResult:
    for n, x, skip in TORUS_EULER_CASES:
        rep = verify_euler(torus_two_n(n), x, skip_homology=skip)
        if not rep.agree or rep.euler_characteristic != product_formula(x):
            return CheckResult("torus euler", False, f"n={n} x={x}")
    return CheckResult("torus euler", True, "chi equals the product formula for all cases")


def check_desk_example(rng) -> CheckResult:
    rep = homology(build_complex(torus_two_n(2), (1, 2)))
    ok1 = rep.cochain_dims == [4, 2] and rep.homology_dims == [2, 0] and rep.euler_characteristic == 2
    rep = homology(build_complex(torus_two_n(2), (2, 1)))
    ok2 = rep.cochain_dims == [2, 4] and rep.homology_dims == [0, 2] and rep.euler_characteristic == -2
    ok = ok1 and ok2
    return CheckResult("desk example", ok, "two-crossing homology dims" if ok else "dims off")


def check_random_diagrams(rng) -> CheckResult:
    built = 0
    for t in range(25):
        d = random_diagram(3, rng)
        x = tuple(rng.randint(1, 3) for _ in range(3))
        rep = verify_euler(d, x, skip_homology=True)
        if not rep.agree:
            return CheckResult("random diagrams", False, f"trial {t}: chi != det")
        try:
            cx = build_complex(d, x, budget=200_000)
        except SizeError:
            continue
        built += 1
        if not cx.verify_d_squared():
            return CheckResult("random diagrams", False, f"trial {t}: d^2 != 0")
    return CheckResult(
        "random diagrams", True, f"chi = det on 25 diagrams; d^2 = 0 on the {built} built"
    )


def check_order_independence(rng) -> CheckResult:
    for n in range(1, 5):
        d = torus_two_n(n)
        x = tuple(2 if i % 2 == 0 else 1 for i in range(n))
        perms = [tuple(rng.sample(range(1, n + 1), n)) for _ in range(3)]
        for rho in perms:
            res = order_independence_check(d, x, rho)
            if not res.equal or res.height_uniform is not True:
                return CheckResult("order independence", False, f"n={n} ordering {rho}")
    return CheckResult("order independence", True, "rebuilt complexes identical, n <= 4")


def check_matrix_complexes(rng) -> CheckResult:
    for t in range(30):
        n = rng.randint(1, 4)
        m = random_matrix(n, 4, rng)
        cx = build_matrix_complex(m)
        if not cx.verify_d_squared():
            return CheckResult("matrix complexes", False, f"trial {t}: d^2 != 0")
        if euler_characteristic(cx.level_dims) != det_exact(m):
            return CheckResult("matrix complexes", False, f"trial {t}: chi != det")
    for t in range(200):
        n = rng.randint(1, 5)
        m = random_matrix(n, 9, rng)
        if det_exact(m) != det_permutation_expansion(m):
            return CheckResult("matrix complexes", False, f"det routes disagree: {m.entries}")
    return CheckResult(
        "matrix complexes", True, "30 complexes with chi = det; det routes agree on 200 trials"
    )


def check_functoriality(rng) -> CheckResult:
    d = torus_two_n(3)
    pool = [(1, 2, 3), (2, 1, 3), (1, 1, 2), (2, 2, 1), (3, 1, 2), (1, 2, 2)]
    complexes = {x: build_complex(d, x) for x in pool}
    quotients = {x: cohomology_quotients(complexes[x]) for x in pool}

    ident = identity_morphism(pool[0])
    cmi = chain_map(d, ident, source_complex=complexes[pool[0]], target_complex=complexes[pool[0]])
    if not all(b == GF2Matrix.identity(b.rows) for b in cmi.blocks):
        return CheckResult("functoriality", False, "identity morphism is not the identity map")

    for t in range(25):
        x, y, z = (rng.choice(pool) for _ in range(3))
        a = random_morphism(rng, x, y)
        b = random_morphism(rng, y, z)
        cma = chain_map(d, a, source_complex=complexes[x], target_complex=complexes[y])
        cmb = chain_map(d, b, source_complex=complexes[y], target_complex=complexes[z])
        if not (cma.commutes() and cmb.commutes()):
            return CheckResult("functoriality", False, f"trial {t}: chain map does not commute")
        ab = compose(a, b)
        cmab = chain_map(d, ab, source_complex=complexes[x], target_complex=complexes[z])
        if any(cmab.blocks[k] != cmb.blocks[k] @ cma.blocks[k] for k in range(len(cmab.blocks))):
            return CheckResult("functoriality", False, f"trial {t}: functor law fails")
        ia = induced_map_from(cma, quotients[x], quotients[y])
        ib = induced_map_from(cmb, quotients[y], quotients[z])
        iab = induced_map_from(cmab, quotients[x], quotients[z])
        if any(iab[k] != ib[k] @ ia[k] for k in range(len(iab))):
            return CheckResult("functoriality", False, f"trial {t}: induced maps do not compose")
    return CheckResult("functoriality", True, "50 random morphisms: commutation and both functor laws")


ALL_CHECKS = [
    check_bruhat_covers,
    check_bruhat_shape,
    check_torus_circles,
    check_frobenius,
    check_torus_euler,
    check_desk_example,
    check_random_diagrams,
    check_order_independence,
    check_matrix_complexes,
    check_functoriality,
]


def run_all(seed: int = DEFAULT_SEED) -> list[CheckResult]:
    rng = random.Random(seed)
    return [check(rng) for check in ALL_CHECKS]

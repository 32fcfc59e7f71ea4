"""Trilinear pairs over exact rationals: Kantor / Jordan identity checking,
balanced dimensions from the K-operators, SP-grading checks, and an
ideal-growth simplicity test.

A pair object provides:
  dim(sigma)                  -- dimension of P^sigma, sigma in (+1, -1)
  triple(sigma, i, j, k)      -- {b_i, b_j, b_k}^sigma on basis elements as a
                                 sparse dict {index: Fraction}; i, k index
                                 P^sigma and j indexes P^{-sigma}
  component(sigma, i)         -- optional SP-grading component (0 or 1)
The 4-index product tensors are exposed sparsely through ``triple``; dense
materialization is available via ``product_tensor`` for small pairs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

Vec = dict[int, Fraction]
ColMap = dict[int, Vec]  # sparse matrix: column -> (row -> coefficient)

EXHAUSTIVE_DIM_LIMIT = 12
SAMPLED_TUPLES = 2000


def vec_iadd(acc: Vec, v: Vec, scale=1) -> Vec:
    for k, c in v.items():
        val = acc.get(k, 0) + scale * c
        if val:
            acc[k] = val
        else:
            acc.pop(k, None)
    return acc


def col_apply(A: ColMap, v: Vec) -> Vec:
    out: Vec = {}
    for col, c in v.items():
        if col in A:
            vec_iadd(out, A[col], c)
    return out


def col_compose(A: ColMap, B: ColMap) -> ColMap:
    return {col: col_apply(A, vec) for col, vec in B.items() if vec}


def col_sub(A: ColMap, B: ColMap) -> ColMap:
    out: ColMap = {}
    for col in set(A) | set(B):
        v = dict(A.get(col, {}))
        vec_iadd(v, B.get(col, {}), -1)
        if v:
            out[col] = v
    return out


class BasePair:
    """Shared helpers over the pair protocol."""

    def triple_vec(self, sigma: int, x: Vec, y: Vec, z: Vec) -> Vec:
        out: Vec = {}
        for i, a in x.items():
            for j, b in y.items():
                ab = a * b
                for k, c in z.items():
                    vec_iadd(out, self.triple(sigma, i, j, k), ab * c)
        return out

    def d_op(self, sigma: int, i: int, j: int) -> ColMap:
        """D^sigma(b_i, b_j): u -> {b_i, b_j, u}."""
        key = ("D", sigma, i, j)
        cache = self._op_cache()
        if key not in cache:
            cache[key] = {
                k: v for k in range(self.dim(sigma))
                if (v := self.triple(sigma, i, j, k))
            }
        return cache[key]

    def k_op(self, sigma: int, i: int, j: int) -> ColMap:
        """K^sigma(b_i, b_j): w -> {b_i, w, b_j} - {b_j, w, b_i}."""
        key = ("K", sigma, i, j)
        cache = self._op_cache()
        if key not in cache:
            out: ColMap = {}
            for k in range(self.dim(-sigma)):
                v = dict(self.triple(sigma, i, k, j))
                vec_iadd(v, self.triple(sigma, j, k, i), -1)
                if v:
                    out[k] = v
            cache[key] = out
        return cache[key]

    def d_op_vec_first(self, sigma: int, v: Vec, j: int) -> ColMap:
        out: ColMap = {}
        for m, c in v.items():
            for col, w in self.d_op(sigma, m, j).items():
                vec_iadd(out.setdefault(col, {}), w, c)
        return {col: w for col, w in out.items() if w}

    def d_op_vec_second(self, sigma: int, i: int, v: Vec) -> ColMap:
        out: ColMap = {}
        for m, c in v.items():
            for col, w in self.d_op(sigma, i, m).items():
                vec_iadd(out.setdefault(col, {}), w, c)
        return {col: w for col, w in out.items() if w}

    def k_op_vec_first(self, sigma: int, v: Vec, j: int) -> ColMap:
        out: ColMap = {}
        for m, c in v.items():
            for col, w in self.k_op(sigma, m, j).items():
                vec_iadd(out.setdefault(col, {}), w, c)
        return {col: w for col, w in out.items() if w}

    def component(self, sigma: int, i: int):
        return None

    def product_tensor(self, sigma: int):
        """Dense 4-index tensor t[i][j][k][m] of {b_i, b_j, b_k}^sigma
        coefficients; intended for small pairs."""
        d, dm = self.dim(sigma), self.dim(-sigma)
        return [
            [
                [
                    [self.triple(sigma, i, j, k).get(m, Fraction(0)) for m in range(d)]
                    for k in range(d)
                ]
                for j in range(dm)
            ]
            for i in range(d)
        ]

    def _op_cache(self) -> dict:
        if not hasattr(self, "_ops"):
            self._ops = {}
        return self._ops


@dataclass
class Violation:
    identity: str
    sigma: int
    witness: tuple
    difference: object


@dataclass
class IdentityReport:
    mode: str
    checked: int
    violations: list[Violation] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations


def _random_sparse_vec(rng: random.Random, dim: int, support: int = 3) -> Vec:
    if dim == 0:
        return {}
    idxs = rng.sample(range(dim), min(support, dim))
    out = {}
    for i in idxs:
        c = rng.choice([-3, -2, -1, 1, 2, 3])
        out[i] = Fraction(c)
    return out


def check_kantor_identities(pair, mode: str = "auto", samples: int = SAMPLED_TUPLES,
                            seed: int = 0, max_violations: int = 5) -> IdentityReport:
    """Check both Kantor pair identities.

    mode "exhaustive": all basis 5-tuples, realized as operator equalities
    over basis 4-tuples (the fifth slot is the operator argument).
    mode "sampled": identities evaluated on seeded random sparse 5-tuples.
    mode "auto": exhaustive when both side dimensions are at most
    EXHAUSTIVE_DIM_LIMIT, else sampled.
    """
    if mode == "auto":
        small = max(pair.dim(+1), pair.dim(-1)) <= EXHAUSTIVE_DIM_LIMIT
        mode = "exhaustive" if small else "sampled"
    if mode == "exhaustive":
        return _check_identities_exhaustive(pair, max_violations)
    return _check_identities_sampled(pair, samples, seed, max_violations)


def _check_identities_exhaustive(pair, max_violations: int) -> IdentityReport:
    report = IdentityReport(mode="exhaustive", checked=0)
    for sigma in (+1, -1):
        d, dm = pair.dim(sigma), pair.dim(-sigma)
        for i in range(d):          # x
            for j in range(dm):     # y
                Dij = pair.d_op(sigma, i, j)
                for k in range(d):  # z
                    Dij_z = col_apply(Dij, {k: Fraction(1)})
                    for l in range(dm):  # w
                        Dkl = pair.d_op(sigma, k, l)
                        lhs = col_sub(col_compose(Dij, Dkl), col_compose(Dkl, Dij))
                        v2 = col_apply(pair.d_op(-sigma, j, i), {l: Fraction(1)})
                        rhs = col_sub(
                            pair.d_op_vec_first(sigma, Dij_z, l),
                            pair.d_op_vec_second(sigma, k, v2),
                        )
                        report.checked += 1
                        if col_sub(lhs, rhs):
                            report.violations.append(Violation(
                                "D-identity", sigma, (i, j, k, l), col_sub(lhs, rhs)))
                            if len(report.violations) >= max_violations:
                                return report
        for i in range(d):          # x
            for j in range(d):      # z
                Kij = pair.k_op(sigma, i, j)
                for k in range(dm):  # w
                    Kij_w = col_apply(Kij, {k: Fraction(1)})
                    for l in range(d):   # u
                        lhs = col_compose(Kij, pair.d_op(-sigma, k, l))
                        vec_iadd_cols(lhs, col_compose(pair.d_op(sigma, l, k), Kij))
                        rhs = pair.k_op_vec_first(sigma, Kij_w, l)
                        report.checked += 1
                        if col_sub(lhs, rhs):
                            report.violations.append(Violation(
                                "K-identity", sigma, (i, j, k, l), col_sub(lhs, rhs)))
                            if len(report.violations) >= max_violations:
                                return report
    return report


def vec_iadd_cols(A: ColMap, B: ColMap) -> ColMap:
    for col, v in B.items():
        vec_iadd(A.setdefault(col, {}), v)
        if not A[col]:
            del A[col]
    return A


def _check_identities_sampled(pair, samples: int, seed: int, max_violations: int) -> IdentityReport:
    rng = random.Random(seed)
    report = IdentityReport(mode=f"sampled({samples})", checked=0)
    for _ in range(samples):
        sigma = rng.choice((+1, -1))
        d, dm = pair.dim(sigma), pair.dim(-sigma)
        x = _random_sparse_vec(rng, d)
        z = _random_sparse_vec(rng, d)
        u = _random_sparse_vec(rng, d)
        y = _random_sparse_vec(rng, dm)
        w = _random_sparse_vec(rng, dm)
        t = lambda s, a, b, c: pair.triple_vec(s, a, b, c)
        # [D(x,y),D(z,w)]u = D(D(x,y)z, w)u - D(z, D(y,x)w)u
        lhs = t(sigma, x, y, t(sigma, z, w, u))
        vec_iadd(lhs, t(sigma, z, w, t(sigma, x, y, u)), -1)
        rhs = t(sigma, t(sigma, x, y, z), w, u)
        vec_iadd(rhs, t(sigma, z, t(-sigma, y, x, w), u), -1)
        vec_iadd(lhs, rhs, -1)
        report.checked += 1
        if lhs:
            report.violations.append(Violation("D-identity", sigma, ("sampled",), lhs))
        # K(x,z)D(w,u) + D(u,w)K(x,z) = K(K(x,z)w, u) applied to w' = y
        kxz = lambda a: _k_apply(pair, sigma, x, z, a)
        lhs2 = kxz(t(-sigma, w, u, y))
        vec_iadd(lhs2, t(sigma, u, w, kxz(y)))
        rhs2 = _k_apply(pair, sigma, kxz(w), u, y)
        vec_iadd(lhs2, rhs2, -1)
        report.checked += 1
        if lhs2:
            report.violations.append(Violation("K-identity", sigma, ("sampled",), lhs2))
        if len(report.violations) >= max_violations:
            break
    return report


def _k_apply(pair, sigma: int, x: Vec, z: Vec, w: Vec) -> Vec:
    out = pair.triple_vec(sigma, x, w, z)
    vec_iadd(out, pair.triple_vec(sigma, z, w, x), -1)
    return out


def is_jordan(pair) -> bool:
    """K^sigma vanishes identically (checked on all basis pairs)."""
    for sigma in (+1, -1):
        d = pair.dim(sigma)
        for i in range(d):
            for j in range(i + 1, d):
                if pair.k_op(sigma, i, j):
                    return False
    return True


class _Echelon:
    """Incremental row echelon over the rationals for sparse rows."""

    def __init__(self):
        self.rows: dict = {}  # pivot key -> normalized row

    def add(self, row: Vec) -> bool:
        row = dict(row)
        while row:
            pivot = min(row)
            if pivot not in self.rows:
                c = row[pivot]
                self.rows[pivot] = {k: v / c for k, v in row.items()}
                return True
            vec_iadd(row, self.rows[pivot], -row[pivot])
        return False

    @property
    def rank(self) -> int:
        return len(self.rows)

    def contains(self, row: Vec) -> bool:
        row = dict(row)
        while row:
            pivot = min(row)
            if pivot not in self.rows:
                return False
            vec_iadd(row, self.rows[pivot], -row[pivot])
        return True


@dataclass(frozen=True)
class BalancedParams:
    d: int
    e: int
    f: int | None


def balanced_params(pair) -> BalancedParams:
    """d from the side dimensions, e as the rank of the span of all
    K^sigma(x,z) operators (equal for both signs), f from the grading."""
    d_plus, d_minus = pair.dim(+1), pair.dim(-1)
    assert d_plus == d_minus, f"unbalanced dimensions ({d_minus},{d_plus})"
    ranks = {}
    for sigma in (+1, -1):
        ech = _Echelon()
        d = pair.dim(sigma)
        for i in range(d):
            for j in range(i + 1, d):
                K = pair.k_op(sigma, i, j)
                row = {}
                for col, v in K.items():
                    for rix, c in v.items():
                        row[(col, rix)] = c
                if row:
                    ech.add({_flat(col, rix, d): c for (col, rix), c in row.items()})
        ranks[sigma] = ech.rank
    assert ranks[+1] == ranks[-1], f"K-span ranks differ: {ranks}"
    f = None
    if pair.component(+1, 0) is not None or d_plus == 0:
        fs = {}
        for sigma in (+1, -1):
            fs[sigma] = sum(
                1 for i in range(pair.dim(sigma)) if pair.component(sigma, i) == 1
            )
        assert fs[+1] == fs[-1], f"graded component dims differ: {fs}"
        f = fs[+1]
    return BalancedParams(d_plus, ranks[+1], f)


def _flat(col: int, row: int, d: int) -> int:
    return col * (d + 1) + row


def check_sp_grading_law(pair) -> bool:
    """{P_i, P_j, P_k} lies in P_{i-j+k}, tensor-wise on all basis triples."""
    for sigma in (+1, -1):
        d, dm = pair.dim(sigma), pair.dim(-sigma)
        for i in range(d):
            gi = pair.component(sigma, i)
            for j in range(dm):
                gj = pair.component(-sigma, j)
                for k in range(d):
                    gk = pair.component(sigma, k)
                    target = gi - gj + gk
                    out = pair.triple(sigma, i, j, k)
                    if target not in (0, 1):
                        if out:
                            return False
                        continue
                    if any(pair.component(sigma, m) != target for m in out):
                        return False
    return True


def is_simple(pair, seeds: str = "basis") -> bool:
    """Ideal growth: the smallest subpair ideal containing each seed vector
    is the whole pair."""
    dims = {+1: pair.dim(+1), -1: pair.dim(-1)}
    if dims[+1] + dims[-1] == 0:
        return False
    seed_list = [(s, {i: Fraction(1)}) for s in (+1, -1) for i in range(dims[s])]
    for sigma0, v0 in seed_list:
        if not _ideal_is_everything(pair, sigma0, v0, dims):
            return False
    return True


def _ideal_is_everything(pair, sigma0: int, v0: Vec, dims: dict) -> bool:
    ech = {+1: _Echelon(), -1: _Echelon()}
    queue = [(sigma0, v0)]
    ech[sigma0].add(dict(v0))
    while queue:
        if ech[+1].rank == dims[+1] and ech[-1].rank == dims[-1]:
            return True
        sigma, v = queue.pop()
        for tau in (+1, -1):
            d, dm = dims[tau], dims[-tau]
            for a in range(d):
                ea = {a: Fraction(1)}
                for b in range(dm):
                    eb = {b: Fraction(1)}
                    products = []
                    if tau == sigma:
                        products.append((tau, pair.triple_vec(tau, v, eb, ea)))
                        products.append((tau, pair.triple_vec(tau, ea, eb, v)))
                    if tau == -sigma:
                        products.append((tau, pair.triple_vec(tau, ea, v, eb)))
                    for s, w in products:
                        if w and ech[s].add(dict(w)):
                            queue.append((s, w))
    return ech[+1].rank == dims[+1] and ech[-1].rank == dims[-1]


@dataclass
class PerturbedPair(BasePair):
    """A pair with one product-tensor entry shifted; test helper for
    detecting identity violations."""

    base: object
    sigma0: int
    entry: tuple[int, int, int, int]
    delta: Fraction = Fraction(1)

    def dim(self, sigma):
        return self.base.dim(sigma)

    def component(self, sigma, i):
        return self.base.component(sigma, i)

    def triple(self, sigma, i, j, k):
        out = dict(self.base.triple(sigma, i, j, k))
        i0, j0, k0, m0 = self.entry
        if sigma == self.sigma0 and (i, j, k) == (i0, j0, k0):
            vec_iadd(out, {m0: self.delta})
        return out


class ZeroPair(BasePair):
    """The zero Kantor pair."""

    def dim(self, sigma):
        return 0

    def triple(self, sigma, i, j, k):
        return {}

"""Deterministic generators of matrix pairs.

The CLI exposes ``example1``, ``block-abzero``, ``nilpotent``, ``random`` and
``normal-commuting``. The remaining builders produce structured families
(conjugated CS pairs, symmetric pairs, eigenspace-hypothesis pairs) used by
the test-suite and by ``batch`` manifests.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .exact import Matrix, det, inverse
from .exact.scalar import parse_scalar

DEFAULT_SEED = 0


def _cat(*blocks: Matrix | int) -> Matrix:
    """Block-diagonal matrix; an ``int`` k stands for the k x k zero block (k may be 0)."""
    out = None
    for blk in blocks:
        if isinstance(blk, int):
            if blk == 0:
                continue
            blk = Matrix.zeros(blk)
        out = blk if out is None else out.direct_sum(blk)
    return out


def random_matrix(n: int, rng: random.Random, lo: int = -3, hi: int = 3, density: float = 1.0) -> Matrix:
    return Matrix([[rng.randint(lo, hi) if rng.random() < density else 0 for _ in range(n)] for _ in range(n)])


def random_nonsingular(n: int, rng: random.Random, lo: int = -3, hi: int = 3) -> Matrix:
    while True:
        m = random_matrix(n, rng, lo, hi)
        if det(m) != 0:
            return m


def random_unimodular(n: int, rng: random.Random, steps: int | None = None) -> Matrix:
    """Integer matrix with determinant +-1 (so its inverse is integral too)."""
    rows = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps if steps is not None else 2 * n):
        if n < 2:
            break
        i, j = rng.sample(range(n), 2)
        c = rng.choice((-1, 1))
        rows[i] = [x + c * y for x, y in zip(rows[i], rows[j])]
    perm = list(range(n))
    rng.shuffle(perm)
    return Matrix([rows[p] for p in perm])


def conjugate(p: Matrix, x: Matrix) -> Matrix:
    return p @ x @ inverse(p)


def random_upper(n: int, rng: random.Random, strict: bool = False, lo: int = -3, hi: int = 3) -> Matrix:
    return Matrix(
        [[rng.randint(lo, hi) if (j > i or (j == i and not strict)) else 0 for j in range(n)] for i in range(n)]
    )


def example1(gamma) -> tuple[Matrix, Matrix]:
    """The 3x3 pair with ``f(s,t) = (1+(g-1)s)^2 - t^2 (1+(g-1)s)``; CS exactly when ``g == 1``."""
    g = parse_scalar(gamma) if isinstance(gamma, str) else Fraction(gamma)
    if g == 0:
        raise ValueError("gamma must be nonzero")
    a = Matrix([[0, 0, 0], [0, 1 - g, 1], [0, 0, 1 - g]])
    b = Matrix([[0, g, 0], [1 / g, 0, 0], [0, 0, 0]])
    return a, b


def block_abzero(n: int, k: int, rng: random.Random, conjugated: bool = False) -> tuple[Matrix, Matrix]:
    """``A = A1 ⊕ O_k``, ``B = O_(n-k) ⊕ B1`` with nonsingular random blocks (so ``AB = O``)."""
    if not 0 <= k <= n or n < 1:
        raise ValueError(f"need 0 <= k <= n and n >= 1, got k={k}, n={n}")
    a = _cat(random_nonsingular(n - k, rng), k) if k < n else Matrix.zeros(n)
    b = _cat(n - k, random_nonsingular(k, rng)) if k > 0 else Matrix.zeros(n)
    if conjugated:
        p = random_unimodular(n, rng)
        a, b = conjugate(p, a), conjugate(p, b)
    return a, b


def nilpotent_pair(n: int, rng: random.Random) -> tuple[Matrix, Matrix]:
    """Strictly upper triangular A and an independent random B."""
    return random_upper(n, rng, strict=True), random_matrix(n, rng)


def random_pair(n: int, rng: random.Random, density: float = 1.0) -> tuple[Matrix, Matrix]:
    return random_matrix(n, rng, density=density), random_matrix(n, rng, density=density)


def orthogonal_basis(n: int, rng: random.Random) -> list[list[Fraction]]:
    """Exact Gram-Schmidt (unnormalized) on a random nonsingular integer matrix."""
    cols = [list(map(Fraction, c)) for c in random_nonsingular(n, rng).T.rows]
    basis: list[list[Fraction]] = []
    for v in cols:
        w = list(v)
        for u in basis:
            c = sum(x * y for x, y in zip(v, u)) / sum(x * x for x in u)
            w = [x - c * y for x, y in zip(w, u)]
        basis.append(w)
    return basis


def _projector_sum(basis, weights) -> Matrix:
    n = len(basis[0])
    out = [[Fraction(0)] * n for _ in range(n)]
    for w, u in zip(weights, basis):
        if w == 0:
            continue
        norm = sum(x * x for x in u)
        for i in range(n):
            for j in range(n):
                out[i][j] += w * u[i] * u[j] / norm
    return Matrix(out)


def normal_commuting(n: int, rng: random.Random, disjoint: bool | None = None) -> tuple[Matrix, Matrix]:
    """Commuting real symmetric pair ``A = sum a_i P_i``, ``B = sum b_i P_i`` over orthogonal projectors.

    With ``disjoint=True`` no index carries both a nonzero ``a_i`` and ``b_i``,
    hence ``AB = O``; ``False`` forces an overlap; ``None`` leaves it to chance.
    """
    basis = orthogonal_basis(n, rng)
    wa, wb = [], []
    for i in range(n):
        x, y = rng.choice((-2, -1, 1, 2)), rng.choice((-2, -1, 1, 2))
        role = rng.choice(("a", "b", "none", "both")) if disjoint is None else rng.choice(("a", "b", "none"))
        wa.append(x if role in ("a", "both") else 0)
        wb.append(y if role in ("b", "both") else 0)
    if disjoint is False:
        i = rng.randrange(n)
        wa[i] = wa[i] or 1
        wb[i] = wb[i] or 1
    return _projector_sum(basis, wa), _projector_sum(basis, wb)


def random_symmetric(n: int, rng: random.Random) -> Matrix:
    m = random_matrix(n, rng)
    return m + m.T


def triangular_cs(n: int, rng: random.Random, conjugated: bool = True) -> tuple[Matrix, Matrix]:
    """Upper triangular A with strictly upper triangular B: ``det(I-sA-tB) = prod(1 - s a_ii)``."""
    a, b = random_upper(n, rng), random_upper(n, rng, strict=True)
    if conjugated:
        p = random_unimodular(n, rng)
        a, b = conjugate(p, a), conjugate(p, b)
    return a, b


def _semisimple_zero_block(size: int, rng: random.Random) -> Matrix | int:
    """Random block whose zero eigenvalue (if any) is semisimple."""
    if size == 0:
        return 0
    kind = rng.choice(("zero", "nonsingular", "mixed"))
    if kind == "zero":
        return Matrix.zeros(size)
    if kind == "nonsingular" or size == 1:
        return random_nonsingular(size, rng)
    k = rng.randint(1, size - 1)
    p = random_unimodular(size, rng)
    return conjugate(p, _cat(random_nonsingular(size - k, rng), k))


def prop3_pair(n: int, rng: random.Random, ab_zero: bool) -> tuple[Matrix, Matrix]:
    """Pair with semisimple zeros and ``B E_A(0) ⊆ E_A(0)``.

    In a random basis: ``A = A1 ⊕ O_k`` and ``B = B11 ⊕ B22`` with ``B11 = O``
    exactly when ``ab_zero``.
    """
    k = rng.randint(1, n - 1) if n > 1 else 1
    a = _cat(random_nonsingular(n - k, rng), k) if k < n else Matrix.zeros(n)
    if ab_zero:
        b11: Matrix | int = n - k
    else:
        b11 = random_nonsingular(n - k, rng) if n - k > 0 else 0
    b = _cat(b11, _semisimple_zero_block(k, rng))
    p = random_unimodular(n, rng)
    return conjugate(p, a), conjugate(p, b)


def jordan_matrix(blocks: list[tuple[object, int]]) -> Matrix:
    """Direct sum of Jordan blocks ``(eigenvalue, size)``."""
    out = None
    for lam, size in blocks:
        lam = parse_scalar(lam) if isinstance(lam, str) else lam
        j = Matrix([[lam if i == c else (1 if c == i + 1 else 0) for c in range(size)] for i in range(size)])
        out = j if out is None else out.direct_sum(j)
    return out


def prop5_pair(
    core_a: Matrix,
    core_b: Matrix,
    nu: int,
    rng: random.Random | None = None,
) -> tuple[Matrix, Matrix]:
    """``A = CA ⊕ O ⊕ O_nu``, ``B = O ⊕ CB ⊕ O_nu`` with nonsingular cores, optionally conjugated."""
    na, nb = core_a.n, core_b.n
    a = _cat(core_a, nb + nu)
    b = _cat(na, core_b, nu)
    if rng is not None:
        p = random_unimodular(a.n, rng)
        a, b = conjugate(p, a), conjugate(p, b)
    return a, b


def _parse_value(text: str):
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return float(text) if "." in text else parse_scalar(text)
    except ValueError:
        raise ValueError(f"bad parameter value {text!r}") from None


@dataclass
class GeneratorSpec:
    family: str
    params: dict = field(default_factory=dict)

    FAMILIES = ("example1", "block-abzero", "nilpotent", "random", "normal-commuting")

    @classmethod
    def parse(cls, tokens: list[str]) -> GeneratorSpec:
        """``["example1", "gamma=1"]`` or ``["block-abzero", "k=2", "n=5"]``."""
        if not tokens:
            raise ValueError("empty generator spec")
        family, *rest = tokens
        if family not in cls.FAMILIES:
            raise ValueError(f"unknown family {family!r}; choose from {', '.join(cls.FAMILIES)}")
        params = {}
        for tok in rest:
            key, eq, val = tok.partition("=")
            if not eq or not key:
                raise ValueError(f"expected key=value, got {tok!r}")
            params[key] = val if key == "gamma" else _parse_value(val)
        spec = cls(family, params)
        spec.validate()
        return spec

    def validate(self) -> None:
        p = self.params
        required = {
            "example1": {"gamma"},
            "block-abzero": {"k", "n"},
            "nilpotent": {"n"},
            "random": {"n"},
            "normal-commuting": {"n"},
        }[self.family]
        allowed = required | {"seed"} | ({"density"} if self.family == "random" else set())
        missing = required - p.keys()
        if missing:
            raise ValueError(f"{self.family} requires {', '.join(sorted(missing))}")
        extra = p.keys() - allowed
        if extra:
            raise ValueError(f"{self.family} does not take {', '.join(sorted(extra))}")
        if "n" in p and (not isinstance(p["n"], int) or p["n"] < 1):
            raise ValueError("n must be an integer >= 1")
        if self.family == "block-abzero" and not (isinstance(p["k"], int) and 0 <= p["k"] <= p["n"]):
            raise ValueError("k must be an integer in 0..n")
        if self.family == "example1":
            g = parse_scalar(str(p["gamma"]))
            if not isinstance(g, Fraction) or g == 0:
                raise ValueError("gamma must be a nonzero rational")
        if "density" in p and not 0 <= float(p["density"]) <= 1:
            raise ValueError("density must lie in [0, 1]")

    def build(self, seed: int = DEFAULT_SEED) -> tuple[Matrix, Matrix]:
        p = self.params
        rng = random.Random(p.get("seed", seed))
        if self.family == "example1":
            return example1(str(p["gamma"]))
        if self.family == "block-abzero":
            return block_abzero(p["n"], p["k"], rng)
        if self.family == "nilpotent":
            return nilpotent_pair(p["n"], rng)
        if self.family == "random":
            return random_pair(p["n"], rng, float(p.get("density", 1.0)))
        return normal_commuting(p["n"], rng)

    def __str__(self) -> str:
        return " ".join([self.family] + [f"{k}={v}" for k, v in self.params.items()])

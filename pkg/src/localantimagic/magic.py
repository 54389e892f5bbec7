"""Magic rectangles and the Siamese magic square.

Rectangles are built in the *deviation* picture: subtracting the mean
value from every entry leaves an array whose rows and columns all sum to
zero and whose entries form a set symmetric about 0.  Such zero-sum
pieces over disjoint magnitude sets can be glued side by side or stacked,
which is how every size is assembled:

* even x even: 2x4 (or 4x2) blocks over four consecutive odd magnitudes,
  plus one 2x6 block when both sides are 2 mod 4;
* odd x odd: the Siamese square for squares, a subset-sum based 3 x k
  array, widening by an odd factor, or a smaller odd band completed by
  pairs of opposite rows (``r``, ``-r``) whose magnitudes split evenly.

Every rectangle is checked with :func:`verify_magic` before it is returned.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .labeling import LabelingMatrix

Grid = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class MagicRectangle:
    h: int
    k: int
    base: int
    grid: Grid

    @property
    def row_sums(self) -> tuple[int, ...]:
        return tuple(sum(r) for r in self.grid)

    @property
    def column_sums(self) -> tuple[int, ...]:
        return tuple(sum(c) for c in zip(*self.grid))

    @property
    def row_constant(self) -> int:
        return self.k * (2 * self.base + self.h * self.k - 1) // 2

    @property
    def column_constant(self) -> int:
        return self.h * (2 * self.base + self.h * self.k - 1) // 2

    def shifted(self, base: int) -> "MagicRectangle":
        d = base - self.base
        return MagicRectangle(self.h, self.k, base, tuple(tuple(x + d for x in r) for r in self.grid))

    def transpose(self) -> "MagicRectangle":
        return MagicRectangle(self.k, self.h, self.base, tuple(zip(*self.grid)))

    def as_lists(self) -> list[list[int]]:
        return [list(r) for r in self.grid]


def verify_magic(m: MagicRectangle | Sequence[Sequence[int]], base: int | None = None) -> bool:
    """True iff the grid holds one contiguous range once with constant line sums."""
    if isinstance(m, MagicRectangle):
        grid, base = m.grid, m.base
        if len(grid) != m.h or any(len(r) != m.k for r in grid):
            return False
    else:
        grid = tuple(tuple(r) for r in m)
    if not grid or not grid[0] or len({len(r) for r in grid}) != 1:
        return False
    vals = sorted(x for r in grid for x in r)
    start = vals[0] if base is None else base
    if vals != list(range(start, start + len(vals))):
        return False
    return len({sum(r) for r in grid}) == 1 and len({sum(c) for c in zip(*grid)}) == 1


def _tuplize(rows) -> Grid:
    return tuple(tuple(r) for r in rows)


def _transpose(rows) -> Grid:
    return tuple(zip(*rows))


def siamese_grid(p: int) -> Grid:
    if p < 3 or p % 2 == 0:
        raise ValueError("the Siamese method needs an odd order p >= 3")
    a = [[0] * p for _ in range(p)]
    r, c = 0, p // 2
    for v in range(1, p * p + 1):
        a[r][c] = v
        nr, nc = (r - 1) % p, (c + 1) % p
        if a[nr][nc]:
            nr, nc = (r + 1) % p, c
        r, c = nr, nc
    return _tuplize(a)


def siamese_square(p: int) -> MagicRectangle:
    """Odd magic square: 1 in the top middle cell, then up-right with wraparound.

    When the up-right cell is taken, the next value goes one cell down
    instead.  The middle column is the progression 1, p+2, ..., p^2.
    """
    grid = siamese_grid(p)
    mid = [grid[i][p // 2] for i in range(p)]
    assert mid == [1 + i * (p + 1) for i in range(p)], "middle column is not an arithmetic progression"
    square = MagicRectangle(p, p, 1, grid)
    assert verify_magic(square)
    return square


def shift_column_up(m: MagicRectangle | LabelingMatrix, col: int) -> LabelingMatrix:
    """Cyclically shift one column (0-based index) up by one cell."""
    cells = m.grid if isinstance(m, MagicRectangle) else m.cells
    h = len(cells)
    if not cells or not 0 <= col < len(cells[0]):
        raise IndexError(f"column {col} out of range")
    rows = [list(r) for r in cells]
    column = [rows[i][col] for i in range(h)]
    for i in range(h):
        rows[i][col] = column[(i + 1) % h]
    return LabelingMatrix.of(rows)


# ---- even x even -----------------------------------------------------------

def _even_grid(h: int, k: int) -> Grid:
    if k == 2:
        return _transpose(_even_grid(k, h))
    dev = [[0] * k for _ in range(h)]
    mags = iter(range(1, h * k, 2))

    def quad(top: int, left: int, vertical: bool):
        a, b, c, d = next(mags), next(mags), next(mags), next(mags)
        line = (a, -b, -c, d)
        for t, x in enumerate(line):
            if vertical:
                dev[top + t][left] = x
                dev[top + t][left + 1] = -x
            else:
                dev[top][left + t] = x
                dev[top + 1][left + t] = -x

    if k % 4 == 0:
        for i in range(0, h, 2):
            for j in range(0, k, 4):
                quad(i, j, False)
    elif h % 4 == 0:
        for i in range(0, h, 4):
            for j in range(0, k, 2):
                quad(i, j, True)
    else:
        # both sides are 2 mod 4: a 2x6 block over 1..11 starts the top strip
        six = [next(mags) for _ in range(6)]
        top = (six[5], six[3], -six[0], -six[1], -six[2], -six[4])
        for j, x in enumerate(top):
            dev[0][j], dev[1][j] = x, -x
        for j in range(6, k, 4):
            quad(0, j, False)
        for i in range(2, h, 4):
            for j in range(0, k, 2):
                quad(i, j, True)
    n = h * k
    return _tuplize([[(x + n + 1) // 2 for x in r] for r in dev])


# ---- odd x odd -------------------------------------------------------------

# A 5x7 rectangle found once by local search; neither the 3 x k scheme nor
# the band construction reaches this size.
_FIVE_BY_SEVEN = (
    (7, 28, 12, 13, 34, 10, 22),
    (1, 31, 35, 21, 16, 19, 3),
    (23, 4, 14, 33, 5, 32, 15),
    (30, 25, 20, 6, 8, 11, 26),
    (29, 2, 9, 17, 27, 18, 24),
)


def _subset_with_sum(vals: Sequence[int], target: int) -> set[int] | None:
    """Indices of a sub-multiset of ``vals`` summing to ``target`` (bitset DP)."""
    if target < 0:
        return None
    layers = [1]
    for v in vals:
        layers.append(layers[-1] | (layers[-1] << v))
    if not (layers[-1] >> target) & 1:
        return None
    chosen, t = set(), target
    for i in range(len(vals) - 1, -1, -1):
        if (layers[i] >> t) & 1:
            continue
        chosen.add(i)
        t -= vals[i]
    return chosen


def _three_by(k: int) -> Grid | None:
    """3 x k for odd k >= 5.

    Column i of the deviation array is (x_i, P_i, -Q_i) with
    P_i = n+1+i and Q_i = n+1+psi(i), psi(i) = 2i mod k, so x_i = Q_i - P_i
    runs through -n..n.  Rows 1 and 2 swap P_i and -Q_i on a subset J
    chosen so that row 1 sums to zero.
    """
    n = (k - 1) // 2
    psi = [(2 * i) % k for i in range(k)]
    weights = [2 * n + 2 + i + psi[i] for i in range(k)]
    J = _subset_with_sum(weights, k * k)
    if J is None:
        return None
    center = (3 * k + 1) // 2
    rows = [[0] * k for _ in range(3)]
    for i in range(k):
        P, Q = n + 1 + i, n + 1 + psi[i]
        rows[0][i] = Q - P
        rows[1][i], rows[2][i] = (P, -Q) if i in J else (-Q, P)
    return _tuplize([[x + center for x in r] for r in rows])


def _row_permutations(h: int, m: int) -> list[list[int]]:
    """h permutations of 0..m-1 whose columnwise sums are all equal."""
    ident = list(range(m))
    rev = ident[::-1]
    perms: list[list[int]] = []
    if h % 2:
        if m % 2 == 0:
            raise ValueError("an odd number of permutations needs odd m")
        pi = [(j + (m + 1) // 2) % m for j in range(m)]
        rho = [3 * (m - 1) // 2 - j - pi[j] for j in range(m)]
        perms += [ident, pi, rho]
        h -= 3
    for _ in range(h // 2):
        perms += [ident, rev]
    return perms


def _widen(grid: Grid, m: int) -> Grid:
    """h x k magic -> h x mk magic: m copies scaled by m plus row permutations."""
    h, k = len(grid), len(grid[0])
    perms = _row_permutations(h, m)
    return _tuplize([[m * (grid[a][b] - 1) + perms[a][i] + 1 for i in range(m) for b in range(k)]
                     for a in range(h)])


def _split_magnitudes(pool: list[int], groups: int, width: int, seed: int) -> list[list[int]] | None:
    """Partition ``pool`` into groups that each split into two equal-sum halves."""
    if sum(pool) % 2:
        return None
    rng = random.Random(seed)
    pool = list(pool)
    rng.shuffle(pool)
    sets = [pool[i * width:(i + 1) * width] for i in range(groups)]
    odd = [t for t in range(groups) if sum(sets[t]) % 2]
    for a, b in zip(odd[::2], odd[1::2]):
        pair = next(((i, j) for i in range(width) for j in range(width)
                     if (sets[a][i] - sets[b][j]) % 2), None)
        if pair is None:
            return None
        i, j = pair
        sets[a][i], sets[b][j] = sets[b][j], sets[a][i]

    def splittable(s):
        return _subset_with_sum(s, sum(s) // 2) is not None

    ok = [splittable(s) for s in sets]
    for step in range(200 * groups * width):
        bad = [t for t in range(groups) if not ok[t]]
        if not bad:
            return sets
        s = bad[step % len(bad)]
        t = rng.randrange(groups)
        i, j = rng.randrange(width), rng.randrange(width)
        if t == s or (sets[s][i] - sets[t][j]) % 2:
            continue
        sets[s][i], sets[t][j] = sets[t][j], sets[s][i]
        ns, nt = splittable(sets[s]), splittable(sets[t])
        if ns + nt >= ok[s] + ok[t]:
            ok[s], ok[t] = ns, nt
        else:
            sets[s][i], sets[t][j] = sets[t][j], sets[s][i]
    return None


def _band(h: int, k: int, b: int) -> Grid | None:
    """An odd b x k band over the central values plus (h-b)/2 pairs of rows r, -r."""
    band = _odd_grid(b, k)
    if band is None:
        return None
    groups = (h - b) // 2
    pool = list(range((b * k + 1) // 2, (h * k - 1) // 2 + 1))
    sets = _split_magnitudes(pool, groups, k, seed=h * 10007 + k * 101 + b)
    if sets is None:
        return None
    band_center, center = (b * k + 1) // 2, (h * k + 1) // 2
    dev = [[x - band_center for x in r] for r in band]
    for s in sets:
        plus = _subset_with_sum(s, sum(s) // 2)
        row = [x if i in plus else -x for i, x in enumerate(s)]
        dev.append(row)
        dev.append([-x for x in row])
    return _tuplize([[x + center for x in r] for r in dev])


@lru_cache(maxsize=None)
def _odd_grid(h: int, k: int) -> Grid | None:
    if h > k:
        g = _odd_grid(k, h)
        return None if g is None else _transpose(g)
    if h == k:
        return siamese_grid(h)
    if (h, k) == (5, 7):
        return _FIVE_BY_SEVEN
    if h == 3:
        g = _three_by(k)
        if g is not None:
            return g
    for d in range(3, k, 2):
        if k % d == 0 and _odd_grid(h, d) is not None:
            return _widen(_odd_grid(h, d), k // d)
    for d in range(3, h, 2):
        if h % d == 0 and _odd_grid(d, k) is not None:
            return _transpose(_widen(_transpose(_odd_grid(d, k)), h // d))
    for b in range(3, h, 2):
        g = _band(h, k, b)
        if g is not None:
            return g
    for b in range(3, k, 2):
        g = _band(k, h, b)
        if g is not None:
            return _transpose(g)
    return None


def magic_rectangle(h: int, k: int, base: int = 1) -> MagicRectangle:
    """An h x k magic rectangle over base..base+hk-1.

    Exists exactly when h, k >= 2, h = k (mod 2) and (h, k) != (2, 2).
    """
    if h < 2 or k < 2:
        raise ValueError(f"no {h}x{k} magic rectangle: both sides must be at least 2")
    if (h - k) % 2:
        raise ValueError(f"no {h}x{k} magic rectangle: sides of different parity")
    if (h, k) == (2, 2):
        raise ValueError("no 2x2 magic rectangle exists")
    grid = _even_grid(h, k) if h % 2 == 0 else _odd_grid(h, k)
    if grid is None:
        raise RuntimeError(f"no construction route reached {h}x{k}")
    rect = MagicRectangle(h, k, 1, grid)
    if not verify_magic(rect):
        raise AssertionError(f"constructed {h}x{k} rectangle failed verification")
    return rect if base == 1 else rect.shifted(base)

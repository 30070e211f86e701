"""Concrete quandles as Cayley tables, plus a table-level isomorphism oracle.

The oracle is deliberately independent of the module machinery: it sees
only n x n tables and decides isomorphism by pruned backtracking over
element bijections. It exists to validate the image-module criterion, so
nothing here may consult module structure.

Table file format: line 1 holds n, lines 2..n+1 hold n space-separated
zero-based entries; row a, column b is a |> b.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from .errors import TableParseError
from .lambda_modules import LambdaModule


class MalformedTableError(ValueError):
    """The table is not square or has out-of-range entries."""


class QuandleAxiomError(ValueError):
    """An operation required a quandle but the table fails an axiom."""


@dataclass(frozen=True)
class CayleyTable:
    table: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "table", tuple(tuple(row) for row in self.table))
        n = len(self.table)
        for a, row in enumerate(self.table):
            if len(row) != n:
                raise MalformedTableError(f"row {a} has {len(row)} entries, expected {n}")
            for b, v in enumerate(row):
                if not 0 <= v < n:
                    raise MalformedTableError(
                        f"entry [{a}][{b}] = {v} out of range for order {n}"
                    )

    @property
    def n(self) -> int:
        return len(self.table)

    def op(self, a: int, b: int) -> int:
        return self.table[a][b]

    def to_text(self) -> str:
        lines = [str(self.n)]
        lines.extend(" ".join(str(v) for v in row) for row in self.table)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> CayleyTable:
        lines = text.splitlines()
        if not lines or not lines[0].strip():
            raise TableParseError("missing order line", line=1)
        try:
            n = int(lines[0].strip())
        except ValueError:
            raise TableParseError(f"bad order {lines[0].strip()!r}", line=1) from None
        if n < 1:
            raise TableParseError(f"order must be positive, got {n}", line=1)
        rows = []
        for i in range(n):
            lineno = i + 2
            if i + 1 >= len(lines):
                raise TableParseError(f"expected {n} table rows, found {i}", line=lineno)
            tokens = lines[i + 1].split()
            if len(tokens) != n:
                raise TableParseError(
                    f"expected {n} entries, found {len(tokens)}", line=lineno
                )
            row = []
            for col, tok in enumerate(tokens, start=1):
                try:
                    v = int(tok)
                except ValueError:
                    raise TableParseError(
                        f"bad entry {tok!r}", line=lineno, column=col
                    ) from None
                if not 0 <= v < n:
                    raise TableParseError(
                        f"entry {v} out of range [0, {n})", line=lineno, column=col
                    )
                row.append(v)
            rows.append(tuple(row))
        return cls(tuple(rows))


@dataclass(frozen=True)
class AxiomVerdict:
    ok: bool
    axiom: str | None = None
    witness: tuple[int, ...] | None = None

    def describe(self) -> str:
        if self.ok:
            return "pass"
        return f"fail: {self.axiom} violated at {self.witness}"


def alexander_table(M: LambdaModule) -> CayleyTable:
    """The operation table of a |> b = t(a) + b - t(b).

    Elements are indexed in lexicographic coordinate order, so tables built
    from equal modules are identical.
    """
    G = M.group
    n = G.order
    perm = M.t.perm
    elements = G.elements
    idx = {x: i for i, x in enumerate(elements)}
    rows = []
    for a in range(n):
        ta = elements[perm[a]]
        row = []
        for b in range(n):
            diff = G.sub(elements[b], elements[perm[b]])
            row.append(idx[G.add(ta, diff)])
        rows.append(tuple(row))
    return CayleyTable(tuple(rows))


def check_axioms(Q: CayleyTable) -> AxiomVerdict:
    """Verify idempotence, right-invertibility, and self-distributivity.

    Returns the first failing axiom with a witness tuple rather than
    raising; malformed tables raise before any axiom is looked at.
    """
    t = Q.table
    n = Q.n
    for a in range(n):
        if t[a][a] != a:
            return AxiomVerdict(False, "idempotence", (a,))
    rng = range(n)
    for b in rng:
        if len({t[a][b] for a in rng}) != n:
            return AxiomVerdict(False, "right-invertibility", (b,))
    for a in rng:
        ta = t[a]
        for b in rng:
            ab = ta[b]
            for c in rng:
                if t[ab][c] != t[ta[c]][t[b][c]]:
                    return AxiomVerdict(False, "self-distributivity", (a, b, c))
    return AxiomVerdict(True)


def orbits(Q: CayleyTable) -> tuple[tuple[int, ...], ...]:
    """Blocks of the equivalence generated by a ~ a |> b (and its inverse).

    Blocks are sorted internally and by least member; the quandle is
    connected iff there is a single block.
    """
    verdict = check_axioms(Q)
    if not verdict.ok:
        raise QuandleAxiomError(verdict.describe())
    n = Q.n
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    for a in range(n):
        for b in range(n):
            union(a, Q.table[a][b])
    blocks: dict[int, list[int]] = {}
    for x in range(n):
        blocks.setdefault(find(x), []).append(x)
    return tuple(tuple(sorted(block)) for block in sorted(blocks.values()))


@lru_cache(maxsize=4096)
def _fingerprints(Q: CayleyTable) -> list[tuple]:
    """Per-element invariants preserved by any quandle isomorphism."""
    n = Q.n
    blocks = orbits(Q)
    orbit_size = [0] * n
    for block in blocks:
        for x in block:
            orbit_size[x] = len(block)
    fps = []
    for a in range(n):
        row = Q.table[a]
        col = [Q.table[x][a] for x in range(n)]
        row_profile = tuple(sorted(Counter(row).values()))
        col_profile = tuple(sorted(Counter(col).values()))
        row_fixed = sum(1 for b in range(n) if row[b] == a)
        col_fixed = sum(1 for x in range(n) if Q.table[x][a] == x)
        fps.append((orbit_size[a], row_profile, col_profile, row_fixed, col_fixed))
    return fps


def brute_force_isomorphic(Q1: CayleyTable, Q2: CayleyTable) -> tuple[int, ...] | None:
    """A bijection f with f(a |> b) = f(a) |> f(b), or None.

    Both tables must already satisfy the quandle axioms. Order mismatch is
    just a negative answer. The search matches elements most-constrained
    first, filters candidates by per-element fingerprints, and propagates
    forced values f(a |> b) = f(a) |> f(b) as soon as both arguments are
    mapped, failing fast on conflicts. The returned bijection is re-checked
    on all pairs before being handed out.
    """
    n = Q1.n
    if n != Q2.n:
        return None
    fp1 = _fingerprints(Q1)
    fp2 = _fingerprints(Q2)
    if sorted(fp1) != sorted(fp2):
        return None
    candidates = [frozenset(b for b in range(n) if fp2[b] == fp1[a]) for a in range(n)]

    t1, t2 = Q1.table, Q2.table

    def propagate(fwd: dict[int, int], rev: dict[int, int], a: int, b: int) -> bool:
        """Assign f(a) = b and close under the homomorphism condition."""
        queue = [(a, b)]
        while queue:
            x, y = queue.pop()
            if x in fwd:
                if fwd[x] != y:
                    return False
                continue
            if y in rev or y not in candidates[x]:
                return False
            fwd[x] = y
            rev[y] = x
            for z in list(fwd):
                queue.append((t1[x][z], t2[y][fwd[z]]))
                queue.append((t1[z][x], t2[fwd[z]][y]))
        return True

    def search(fwd: dict[int, int], rev: dict[int, int]) -> dict[int, int] | None:
        if len(fwd) == n:
            return fwd
        # most constrained unmapped element first
        best = min(
            (a for a in range(n) if a not in fwd),
            key=lambda a: (len(candidates[a] - rev.keys()), a),
        )
        for b in sorted(candidates[best] - rev.keys()):
            fwd2, rev2 = dict(fwd), dict(rev)
            if propagate(fwd2, rev2, best, b):
                result = search(fwd2, rev2)
                if result is not None:
                    return result
        return None

    solution = search({}, {})
    if solution is None:
        return None
    f = tuple(solution[a] for a in range(n))
    for a in range(n):
        for b in range(n):
            if f[t1[a][b]] != t2[f[a]][f[b]]:
                raise RuntimeError("search returned a non-homomorphism; bug")
    return f

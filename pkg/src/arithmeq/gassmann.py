"""Finite permutation groups, coset actions, and Gassmann-triple tests.

Groups are materialized in full (bounded by a configurable cap), which
keeps every check exhaustive: two subgroups are a Gassmann pair exactly
when every group element fixes the same number of cosets on both sides,
and that in turn forces elementwise agreement of coset cycle types,
which is the group-theoretic shadow of equal decomposition types.

Permutations are tuples of images on 0..degree-1; composition is
(a*b)(x) = a(b(x)).
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .errors import ElementNotInGroup, GroupTooLarge, InconsistencyError, ParseError

Perm = tuple[int, ...]

DEFAULT_CAP = 10_000


def identity(degree: int) -> Perm:
    return tuple(range(degree))


def compose(a: Perm, b: Perm) -> Perm:
    """a after b."""
    return tuple(a[x] for x in b)


def inverse(a: Perm) -> Perm:
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def cycle_type(a: Perm) -> tuple[int, ...]:
    """Ascending cycle lengths, fixed points included."""
    seen = [False] * len(a)
    lengths = []
    for start in range(len(a)):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = a[x]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths))


class PermGroup:
    """Finite permutation group materialized from generators."""

    __slots__ = ("degree", "generators", "elements", "_sorted")

    def __init__(self, degree: int, generators: Iterable[Perm], cap: int = DEFAULT_CAP):
        gens = []
        for g in generators:
            g = tuple(g)
            if sorted(g) != list(range(degree)):
                raise ValueError(f"not a permutation of 0..{degree - 1}: {g}")
            gens.append(g)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "generators", tuple(gens))
        object.__setattr__(self, "elements", _closure(degree, gens, cap))
        object.__setattr__(self, "_sorted", tuple(sorted(self.elements)))

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("PermGroup is immutable")

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, g: Perm) -> bool:
        return tuple(g) in self.elements

    def __iter__(self):
        return iter(self._sorted)

    def subgroup(self, generators: Iterable[Perm]) -> PermGroup:
        sub = PermGroup(self.degree, generators, cap=len(self.elements))
        for g in sub.generators:
            if g not in self.elements:
                raise ElementNotInGroup(f"generator {g} lies outside the group")
        return sub


def _closure(degree: int, gens: Sequence[Perm], cap: int) -> frozenset[Perm]:
    elements = {identity(degree)}
    frontier = [identity(degree)]
    while frontier:
        new_frontier = []
        for g in gens:
            for h in frontier:
                prod = compose(g, h)
                if prod not in elements:
                    elements.add(prod)
                    new_frontier.append(prod)
                    if len(elements) > cap:
                        raise GroupTooLarge(
                            f"group exceeds the cap of {cap} elements"
                        )
        frontier = new_frontier
    return frozenset(elements)


class CosetAction:
    """Left multiplication of a group on the left cosets of a subgroup."""

    __slots__ = ("group", "subgroup", "reps", "coset_index")

    def __init__(self, group: PermGroup, subgroup_gens: Iterable[Perm]):
        sub = group.subgroup(subgroup_gens)
        index: dict[Perm, int] = {}
        reps: list[Perm] = []
        for g in group:  # sorted order: canonical reps are coset minima
            if g in index:
                continue
            rep_idx = len(reps)
            reps.append(g)
            for u in sub.elements:
                index[compose(g, u)] = rep_idx
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "subgroup", sub)
        object.__setattr__(self, "reps", tuple(reps))
        object.__setattr__(self, "coset_index", index)

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("CosetAction is immutable")

    @property
    def num_cosets(self) -> int:
        return len(self.reps)

    def act(self, g: Perm) -> Perm:
        """The permutation of coset indices induced by g."""
        if g not in self.group:
            raise ElementNotInGroup(f"{g} is not in the group")
        return tuple(self.coset_index[compose(g, rep)] for rep in self.reps)


def perm_character(action: CosetAction, g: Perm) -> int:
    """Number of cosets fixed by g (the permutation character value)."""
    if tuple(g) not in action.group:
        raise ElementNotInGroup(f"{g} is not in the group")
    g = tuple(g)
    return sum(
        1
        for i, rep in enumerate(action.reps)
        if action.coset_index[compose(g, rep)] == i
    )


def gassmann_equal(
    group: PermGroup, u_gens: Iterable[Perm], v_gens: Iterable[Perm]
) -> tuple[bool, Perm | None]:
    """Whether the two coset permutation characters agree everywhere.

    Returns (True, None) or (False, witness) with the smallest witness
    element in lexicographic order.
    """
    a = CosetAction(group, u_gens)
    b = CosetAction(group, v_gens)
    for g in group:
        if perm_character(a, g) != perm_character(b, g):
            return False, g
    return True, None


def gassmann_implies_types(
    group: PermGroup, u_gens: Iterable[Perm], v_gens: Iterable[Perm]
) -> bool:
    """Elementwise equality of coset cycle types (decomposition types)."""
    a = CosetAction(group, u_gens)
    b = CosetAction(group, v_gens)
    return all(cycle_type(a.act(g)) == cycle_type(b.act(g)) for g in group)


def decomposition_from_frobenius(
    fix_counts: Mapping[int, int], n: int
) -> tuple[int, ...]:
    """Invert fix counts c(s) = sum of the f_i dividing s.

    Recovers the unique residue-degree multiset by ascending recursion;
    missing keys s are treated as "no f_i equals s".  Raises
    InconsistencyError when no multiset with sum n reproduces the counts.
    """
    counts = {int(s): int(c) for s, c in fix_counts.items()}
    multiplicity: dict[int, int] = {}
    for s in range(1, n + 1):
        if s not in counts:
            continue
        acc = counts[s]
        for d in range(1, s):
            if s % d == 0:
                acc -= d * multiplicity.get(d, 0)
        if acc < 0 or acc % s:
            raise InconsistencyError(f"impossible fixed-point count at s={s}")
        if acc:
            multiplicity[s] = acc // s
    result = []
    for f in sorted(multiplicity):
        result.extend([f] * multiplicity[f])
    if sum(result) != n:
        raise InconsistencyError(
            f"recovered degrees sum to {sum(result)}, expected {n}"
        )
    for s, c in counts.items():
        if sum(f for f in result if s % f == 0) != c:
            raise InconsistencyError(f"count at s={s} is inconsistent")
    return tuple(result)


def frobenius_fix_counts(degrees: Sequence[int]) -> dict[int, int]:
    """Forward map: c(s) = sum of the f_i dividing s, for s up to sum f_i."""
    n = sum(degrees)
    return {s: sum(f for f in degrees if s % f == 0) for s in range(1, n + 1)}


# -- cycle notation -----------------------------------------------------------


def parse_permutation(text: str, degree: int) -> Perm:
    """One permutation in disjoint-cycle notation, 1-based, e.g. "(1 2 3)(4 5)".

    "()" is the identity.
    """
    perms = parse_generators(text, degree)
    if len(perms) != 1:
        raise ParseError(f"expected a single permutation, got {len(perms)}")
    return perms[0]


def parse_generators(text: str, degree: int) -> list[Perm]:
    """Whitespace-separated permutations in cycle notation.

    Cycles of one permutation are adjacent: "(1 2)(3 4) (1 3)" is two
    generators.  Points are 1-based.
    """
    tokens = text.split()
    # regroup: a token starting a new permutation begins with '('; cycles
    # inside one permutation may have been split on their internal spaces,
    # so rebuild strings by balance: a permutation ends where parens close
    # and the next non-space char is a fresh '('.
    chunks: list[str] = []
    depth = 0
    current = ""
    for ch in text:
        if ch.isspace():
            if depth == 0 and current:
                chunks.append(current)
                current = ""
            elif depth > 0:
                current += ch
            continue
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError("unbalanced parentheses")
        current += ch
    if depth != 0:
        raise ParseError("unbalanced parentheses")
    if current:
        chunks.append(current)
    out = []
    for chunk in chunks:
        out.append(_parse_cycles(chunk, degree))
    return out


def _parse_cycles(chunk: str, degree: int) -> Perm:
    if not (chunk.startswith("(") and chunk.endswith(")")):
        raise ParseError(f"malformed cycle expression: {chunk!r}")
    images = list(range(degree))
    body = chunk[1:-1]
    cycles = body.split(")(")
    for cyc in cycles:
        points = [s for s in cyc.split() if s]
        if not points:
            continue  # "()" identity cycle
        try:
            pts = [int(s) - 1 for s in points]
        except ValueError as exc:
            raise ParseError(f"bad cycle entry in {chunk!r}") from exc
        if any(not 0 <= p < degree for p in pts):
            raise ParseError(f"cycle entry out of range 1..{degree}: {chunk!r}")
        if len(set(pts)) != len(pts):
            raise ParseError(f"repeated point in cycle: {chunk!r}")
        for i, p in enumerate(pts):
            images[p] = pts[(i + 1) % len(pts)]
    return tuple(images)


def format_permutation(g: Perm) -> str:
    """Disjoint-cycle rendering, 1-based; identity prints as "()"."""
    seen = [False] * len(g)
    parts = []
    for start in range(len(g)):
        if seen[start] or g[start] == start:
            seen[start] = True
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(str(x + 1))
            x = g[x]
        parts.append("(" + " ".join(cyc) + ")")
    return "".join(parts) if parts else "()"

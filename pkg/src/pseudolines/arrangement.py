"""Wiring-diagram encoding of simple pseudo-line arrangements.

An affine arrangement of ``n`` pseudo-lines is stored as a crossing word:
position ``p`` (1-based) swaps the wires currently on tracks ``p`` and
``p + 1``.  Wires are identified by their track at the far left (0 is the
bottom wire).  Two words that differ by commuting crossings
(``|p - q| >= 2``) describe the same arrangement, so equality of
:class:`AffineArrangement` is equality of commutation classes.

A projective arrangement of ``n`` pseudo-lines is an affine part on
``n - 1`` wires together with a line at infinity.  Moving a different line
to infinity (:func:`reroot`) goes through the rank-3 chirotope of the
arrangement, with the sign convention of straight lines ``y = m x + k``
encoded as vectors ``(m, -1, k)`` and the line at infinity as ``(0, 0, 1)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, cmp_to_key
from itertools import combinations
from typing import Iterable, Sequence

from .errors import (
    ArrangementError,
    NTooSmall,
    PairCrossesTwice,
    PositionOutOfRange,
    UnknownLine,
    WrongLength,
)

AFFINE_GROUP = "affine"
PROJECTIVE_GROUP = "projective"
NO_GROUP = "none"


def n_crossings(n: int) -> int:
    return n * (n - 1) // 2


def wires_for_length(length: int) -> int:
    n = 1
    while n_crossings(n) < length:
        n += 1
    if n_crossings(n) != length:
        raise WrongLength(f"{length} is not a triangular number")
    return n


@dataclass(frozen=True)
class CrossingWord:
    n: int
    word: tuple[int, ...]

    def __len__(self):
        return len(self.word)

    def __iter__(self):
        return iter(self.word)


def validate(n: int, word: Iterable[int]) -> CrossingWord:
    """Check that ``word`` is a simple wiring diagram on ``n`` wires."""
    word = tuple(int(p) for p in word)
    if n < 2:
        raise NTooSmall(f"need at least 2 wires, got {n}")
    for i, p in enumerate(word):
        if not 1 <= p <= n - 1:
            raise PositionOutOfRange(f"crossing #{i} at position {p} outside [1, {n - 1}]")
    if len(word) != n_crossings(n):
        raise WrongLength(f"{n} wires need {n_crossings(n)} crossings, got {len(word)}")
    perm = list(range(n))
    for i, p in enumerate(word):
        a, b = perm[p - 1], perm[p]
        if a > b:
            raise PairCrossesTwice((b, a), i)
        perm[p - 1], perm[p] = b, a
    return CrossingWord(n, word)


def sweep(n: int, word: Sequence[int]):
    """Yield ``(index, position, lower_wire, upper_wire)`` for every crossing.

    ``lower_wire`` is the wire on track ``position`` just before the swap.
    """
    perm = list(range(n))
    for i, p in enumerate(word):
        a, b = perm[p - 1], perm[p]
        yield i, p, a, b
        perm[p - 1], perm[p] = b, a


def local_sequences(n: int, word: Sequence[int]) -> list[list[int]]:
    """For each wire, the other wires in the order it crosses them."""
    seqs: list[list[int]] = [[] for _ in range(n)]
    for _, _, a, b in sweep(n, word):
        seqs[a].append(b)
        seqs[b].append(a)
    return seqs


def from_local_sequences(order: Sequence[int], seqs) -> tuple[int, ...]:
    """Rebuild a crossing word from an initial order and local sequences.

    Always performs the lowest available crossing first, so the result is
    the lexicographically smallest word of the commutation class.
    """
    n = len(order)
    perm = list(order)
    ptr = {w: 0 for w in perm}
    total = n_crossings(n)
    out = []
    while len(out) < total:
        for p in range(1, n):
            a, b = perm[p - 1], perm[p]
            sa, sb = seqs[a], seqs[b]
            if ptr[a] < len(sa) and ptr[b] < len(sb) and sa[ptr[a]] == b and sb[ptr[b]] == a:
                break
        else:
            raise ArrangementError("local sequences are not those of a simple arrangement")
        ptr[a] += 1
        ptr[b] += 1
        perm[p - 1], perm[p] = b, a
        out.append(p)
    return tuple(out)


def normal_form(n: int, word: Sequence[int]) -> tuple[int, ...]:
    return from_local_sequences(range(n), local_sequences(n, word))


def crossing_index(n: int, word: Sequence[int]) -> list[list[int]]:
    """``idx[a][b]`` is the crossing number at which wires ``a`` and ``b`` meet."""
    idx = [[-1] * n for _ in range(n)]
    for i, _, a, b in sweep(n, word):
        idx[a][b] = idx[b][a] = i
    return idx


class AffineArrangement:
    """A validated simple affine arrangement; equality is up to commutation."""

    __slots__ = ("crossing", "__dict__")

    def __init__(self, word: Iterable[int], n: int | None = None):
        if isinstance(word, CrossingWord):
            self.crossing = word
            return
        word = tuple(word)
        if n is None:
            n = wires_for_length(len(word))
        self.crossing = validate(n, word)

    @property
    def n(self) -> int:
        return self.crossing.n

    @property
    def word(self) -> tuple[int, ...]:
        return self.crossing.word

    @cached_property
    def normal(self) -> tuple[int, ...]:
        return normal_form(self.n, self.word)

    def __eq__(self, other):
        if not isinstance(other, AffineArrangement):
            return NotImplemented
        return self.n == other.n and self.normal == other.normal

    def __hash__(self):
        return hash((self.n, self.normal))

    def __repr__(self):
        return f"AffineArrangement({list(self.word)}, n={self.n})"

    @property
    def lines(self) -> range:
        return range(self.n)


TRIANGLE3 = (1, 2, 1)


def triangle3() -> AffineArrangement:
    return AffineArrangement(TRIANGLE3, 3)


def reflect_horizontal(A: AffineArrangement) -> AffineArrangement:
    """Mirror left-right: the crossing word read backwards."""
    return AffineArrangement(tuple(reversed(A.word)), A.n)


def reflect_vertical(A: AffineArrangement) -> AffineArrangement:
    """Mirror top-bottom: position ``p`` becomes ``n - p``."""
    return AffineArrangement(tuple(A.n - p for p in A.word), A.n)


def rotate(A: AffineArrangement) -> tuple[AffineArrangement, list[int]]:
    """Turn the vertical direction past the top-left wire.

    That wire moves to the bottom and is traversed backwards; all other
    wires keep their order and orientation.  Returns the new arrangement and
    the old wire id of each new wire.
    """
    n = A.n
    seqs = local_sequences(n, A.word)
    top = n - 1
    seqs[top] = list(reversed(seqs[top]))
    order = [top] + list(range(n - 1))
    word = from_local_sequences(order, seqs)
    return AffineArrangement(word, n), order


@dataclass(frozen=True, eq=False)
class ProjectiveArrangement:
    """Affine part on ``n - 1`` wires plus a designated line at infinity.

    Lines carry integer labels ``0..n-1``; ``wire_labels[i]`` is the label of
    the affine wire that starts on track ``i``.
    """

    affine_part: AffineArrangement
    infinity_label: int | None = None
    wire_labels: tuple[int, ...] | None = None

    def __post_init__(self):
        n = self.affine_part.n + 1
        if n < 3:
            raise NTooSmall(f"projective arrangements need n >= 3, got {n}")
        inf = n - 1 if self.infinity_label is None else int(self.infinity_label)
        if not 0 <= inf < n:
            raise UnknownLine(f"infinity label {inf} outside 0..{n - 1}")
        labels = self.wire_labels
        if labels is None:
            labels = tuple(l for l in range(n) if l != inf)
        labels = tuple(int(l) for l in labels)
        if sorted(labels + (inf,)) != list(range(n)):
            raise ArrangementError("wire labels and infinity must be a permutation of 0..n-1")
        object.__setattr__(self, "infinity_label", inf)
        object.__setattr__(self, "wire_labels", labels)

    @property
    def n(self) -> int:
        return self.affine_part.n + 1

    @property
    def lines(self) -> range:
        return range(self.n)

    def __eq__(self, other):
        if not isinstance(other, ProjectiveArrangement):
            return NotImplemented
        return (self.affine_part == other.affine_part
                and self.infinity_label == other.infinity_label
                and self.wire_labels == other.wire_labels)

    def __hash__(self):
        return hash((self.affine_part, self.infinity_label, self.wire_labels))

    def __repr__(self):
        return (f"ProjectiveArrangement({list(self.affine_part.word)}, n={self.n}, "
                f"infinity={self.infinity_label})")


def projectivize(A: AffineArrangement) -> ProjectiveArrangement:
    """Add the line at infinity; it gets label ``A.n``."""
    return ProjectiveArrangement(A)


# -- chirotope -------------------------------------------------------------

class Chirotope:
    """Orientation of every ordered triple of lines, stored densely."""

    def __init__(self, n: int):
        self.n = n
        self.table = [0] * (n * n * n)

    def __call__(self, a: int, b: int, c: int) -> int:
        n = self.n
        return self.table[(a * n + b) * n + c]

    def set(self, a: int, b: int, c: int, sign: int):
        n = self.n
        t = self.table
        for (x, y, z), par in (((a, b, c), 1), ((b, c, a), 1), ((c, a, b), 1),
                               ((b, a, c), -1), ((a, c, b), -1), ((c, b, a), -1)):
            t[(x * n + y) * n + z] = sign * par

    @classmethod
    def from_wires(cls, n_total: int, labels: Sequence[int], word: Sequence[int]) -> "Chirotope":
        """Triples among the wires of a diagram whose wire ``i`` has label ``labels[i]``."""
        chi = cls(n_total)
        m = len(labels)
        idx = crossing_index(m, word)
        for i, j, k in combinations(range(m), 3):
            sign = -1 if idx[i][j] < idx[j][k] else 1
            chi.set(labels[i], labels[j], labels[k], sign)
        return chi

    @classmethod
    def of(cls, P: ProjectiveArrangement) -> "Chirotope":
        labels = P.wire_labels
        chi = cls.from_wires(P.n, labels, P.affine_part.word)
        inf = P.infinity_label
        for i, j in combinations(range(len(labels)), 2):
            chi.set(labels[i], labels[j], inf, -1)
        return chi


def chart(chi: Chirotope, x: int, ref: int | None = None) -> tuple[tuple[int, ...], list[int]]:
    """Wiring diagram of the affine chart in which line ``x`` is at infinity.

    ``ref`` becomes the bottom-left wire.  Returns ``(word, labels)`` where
    ``labels[i]`` is the line on track ``i`` at the far left.
    """
    n = chi.n
    if not 0 <= x < n:
        raise UnknownLine(f"line {x} not in arrangement")
    others = [a for a in range(n) if a != x]
    r = others[0] if ref is None else ref
    if r == x or not 0 <= r < n:
        raise UnknownLine(f"reference line {r} invalid")
    s = [0] * n
    s[x] = s[r] = 1
    for a in others:
        if a != r:
            s[a] = -chi(r, a, x)

    def tri(a, b, c):
        return s[a] * s[b] * s[c] * chi(a, b, c)

    order = sorted(others, key=cmp_to_key(lambda a, b: -1 if tri(a, b, x) == -1 else 1))
    pos = {a: i for i, a in enumerate(order)}
    m = len(order)
    seqs = []
    for ia, a in enumerate(order):
        rest = [pos[b] for b in order if b != a]

        def along(u, v, a=a):
            # u, v are track indices of the other two wires
            i, j, k = sorted((pos[a], u, v))
            t = tri(order[i], order[j], order[k])
            return -1 if (t == -1) == (u < v) else 1

        seqs.append(sorted(rest, key=cmp_to_key(along)))
    word = from_local_sequences(range(m), seqs)
    return word, order


def rerooted(P: ProjectiveArrangement, line: int, ref: int | None = None,
             chi: Chirotope | None = None) -> ProjectiveArrangement:
    """The same projective arrangement re-expressed with ``line`` at infinity."""
    if line not in P.lines:
        raise UnknownLine(f"line {line} not in arrangement of {P.n} lines")
    if ref is None and line == P.infinity_label:
        ref = P.wire_labels[0]
    if chi is None:
        chi = Chirotope.of(P)
    word, labels = chart(chi, line, ref)
    return ProjectiveArrangement(AffineArrangement(word, P.n - 1), line, tuple(labels))


def reroot(P: ProjectiveArrangement, line: int) -> AffineArrangement:
    """Delete ``line`` and return the remaining affine arrangement."""
    return rerooted(P, line).affine_part


def projective_closure(A: AffineArrangement) -> ProjectiveArrangement:
    """The projective arrangement of the ``n`` wires themselves (no extra line).

    Wire ``n - 1`` is sent to infinity.
    """
    n = A.n
    chi = Chirotope.from_wires(n, list(range(n)), A.word)
    word, labels = chart(chi, n - 1)
    return ProjectiveArrangement(AffineArrangement(word, n - 1), n - 1, tuple(labels))


# -- canonical forms -------------------------------------------------------

@dataclass(frozen=True, order=True)
class CanonicalKey:
    key: bytes = field(compare=True)

    @property
    def n(self) -> int:
        return self.key[1]


def _reflections(n: int, nf: tuple[int, ...]):
    yield nf
    yield normal_form(n, nf[::-1])
    v = tuple(n - p for p in nf)
    yield normal_form(n, v)
    yield normal_form(n, v[::-1])


def affine_representative(A: AffineArrangement) -> tuple[int, ...]:
    return min(_reflections(A.n, A.normal))


def projective_representative(P: ProjectiveArrangement) -> tuple[int, ...]:
    """Smallest affine-part word over every chart and every reflection."""
    chi = Chirotope.of(P)
    m = P.n - 1
    best = None
    for x in range(P.n):
        for r in range(P.n):
            if r == x:
                continue
            word, _ = chart(chi, x, r)
            for w in _reflections(m, word):
                if best is None or w < best:
                    best = w
    return best


def is_projective_representative(P: ProjectiveArrangement) -> bool:
    """True iff the affine part of ``P`` is already its projective representative.

    Stops at the first chart that gives a smaller word, which makes it much
    cheaper than :func:`projective_representative` on non-representatives.
    """
    chi = Chirotope.of(P)
    mine = P.affine_part.normal
    m = P.n - 1
    for x in range(P.n):
        for r in range(P.n):
            if r == x:
                continue
            word, _ = chart(chi, x, r)
            if word < mine:
                return False
            for w in _reflections(m, word):
                if w < mine:
                    return False
    return True


def canonical_key(arr, group: str | None = None) -> CanonicalKey:
    """Key equal exactly for arrangements related by the symmetry group.

    Groups: ``"none"`` (commutation class only), ``"affine"`` (both
    reflections) and ``"projective"`` (every line at infinity, every chart,
    both reflections).
    """
    if isinstance(arr, ProjectiveArrangement):
        group = group or PROJECTIVE_GROUP
        if group == PROJECTIVE_GROUP:
            return CanonicalKey(b"P" + bytes([arr.n]) + bytes(projective_representative(arr)))
        arr = arr.affine_part
        tag = b"p"
        n = arr.n + 1
    else:
        tag = b"A"
        n = arr.n
    group = group or AFFINE_GROUP
    if group == AFFINE_GROUP:
        w = affine_representative(arr)
    elif group == NO_GROUP:
        w = arr.normal
    elif group == PROJECTIVE_GROUP:
        return canonical_key(projectivize(arr), PROJECTIVE_GROUP)
    else:
        raise ValueError(f"unknown symmetry group {group!r}")
    return CanonicalKey(tag + bytes([n]) + bytes(w))


def canonical_representative(arr, group: str | None = None):
    """The arrangement whose word is the canonical key's word."""
    key = canonical_key(arr, group)
    word = tuple(key.key[2:])
    if key.key[:1] == b"P":
        return ProjectiveArrangement(AffineArrangement(word, key.n - 1))
    if key.key[:1] == b"p":
        return ProjectiveArrangement(AffineArrangement(word, key.n - 1))
    return AffineArrangement(word, key.n)


def all_reduced_words(n: int):
    """Every raw crossing word on ``n`` wires (exponential; tiny n only)."""
    perm = list(range(n))
    out: list[int] = []
    total = n_crossings(n)

    def rec():
        if len(out) == total:
            yield tuple(out)
            return
        for p in range(1, n):
            a, b = perm[p - 1], perm[p]
            if a < b:
                perm[p - 1], perm[p] = b, a
                out.append(p)
                yield from rec()
                out.pop()
                perm[p - 1], perm[p] = a, b

    yield from rec()

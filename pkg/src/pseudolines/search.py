"""Exhaustive and heuristic search for arrangements with many triangles.

The enumerator walks the lexicographically smallest word of every
commutation class exactly once: after a crossing at ``p`` a later crossing
at ``q`` with ``|p - q| >= 2`` and ``q < p`` would commute back in front of
it, so such letters are forbidden until something adjacent happens.  Along
the way a sweep keeps triangles closed so far and segments already known to
be unused, which gives the upper bound used for branch and bound.

Projective searches enumerate the affine part on ``n - 1`` wires; the line
at infinity contributes the wedge faces.
"""
from __future__ import annotations

import logging
import math
import multiprocessing
import random
import time
from dataclasses import dataclass, field
from typing import Callable, Optional

from .arrangement import (
    AFFINE_GROUP,
    NO_GROUP,
    PROJECTIVE_GROUP,
    AffineArrangement,
    ProjectiveArrangement,
    affine_representative,
    n_crossings,
    is_projective_representative,
    projectivize,
    validate,
)
from .bounds import AFFINE, PROJECTIVE, bound, known_exact
from .errors import FeasibilityCeilingExceeded, NotATriangle, NTooSmall
from .faces import _triangle_count, build_faces, triangle_crossings

log = logging.getLogger(__name__)

# largest n the exhaustive search accepts without ``beyond_ceiling``
CEILING = {AFFINE: 8, PROJECTIVE: 10}


@dataclass
class SearchConfig:
    n: int
    mode: str = AFFINE
    kind: str = "exact"  # exact | heuristic
    prune: bool = True
    prune_bound: Optional[int] = None  # abandon branches that cannot reach this
    symmetry: str = NO_GROUP
    workers: int = 1
    budget: Optional[int] = None  # heuristic steps per restart
    restarts: int = 20
    temperature: float = 0.7  # annealing schedule: temperature * cooling**step, floored
    cooling: float = 1.0
    min_temperature: float = 0.05
    reroot_rate: float = 0.05  # projective: chance per step of a new line at infinity
    rng_seed: int = 0
    time_limit: Optional[float] = None
    beyond_ceiling: bool = False


@dataclass
class Record:
    n: int
    mode: str
    max_triangles: Optional[int]
    witness: Optional[tuple[int, ...]]  # word of the affine part
    visited: int
    proof_status: str  # exhaustive | heuristic | below-prune-bound | interrupted

    def arrangement(self):
        if self.witness is None:
            return None
        A = AffineArrangement(self.witness)
        return projectivize(A) if self.mode == PROJECTIVE else A

    def same_result(self, other: "Record") -> bool:
        return (self.max_triangles, self.witness) == (other.max_triangles, other.witness)


def _wires(n: int, mode: str) -> int:
    if mode == PROJECTIVE:
        if n < 4:
            raise NTooSmall(f"projective search needs n >= 4, got {n}")
        return n - 1
    if n < 3:
        raise NTooSmall(f"affine search needs n >= 3, got {n}")
    return n


def _check_ceiling(cfg: SearchConfig):
    lim = CEILING[cfg.mode]
    if cfg.n > lim:
        if not cfg.beyond_ceiling:
            raise FeasibilityCeilingExceeded(
                f"exhaustive {cfg.mode} search is limited to n <= {lim}; "
                f"n={cfg.n} needs beyond_ceiling=True")
        log.warning("exhaustive %s search at n=%d is beyond the feasibility ceiling",
                    cfg.mode, cfg.n)


class _Walker:
    """Depth-first walk over lexicographically minimal words with a live sweep."""

    def __init__(self, k: int, projective: bool):
        self.k = k
        self.projective = projective
        self.total = n_crossings(k)
        self.perm = list(range(k))
        self.cur = [w * k for w in range(k)]
        self.events = [0] * (k + 1)
        self.opened = [False] * (k + 1)
        self.edges = [[] for _ in range(k + 1)]  # segment ids bounding each open face
        for g in range(1, k):
            self.edges[g] = [(g - 1) * k, g * k]
        self.sides = [0] * (k * k)
        self.tri = [0] * (k * k)
        self.closed = 0
        self.unused = 0
        self.word: list[int] = []
        self.segments = (k + 1) * k if projective else k * (k - 2)

    def _counts(self, s: int) -> bool:
        if self.projective:
            return True
        return 0 < s % self.k < self.k - 1

    def push(self, p: int):
        k = self.k
        perm, cur, edges, events = self.perm, self.cur, self.edges, self.events
        a, b = perm[p - 1], perm[p]
        face = edges[p]
        if self.opened[p]:
            is_tri = events[p] == 1
        else:
            is_tri = self.projective and events[p] == 0
        if is_tri:
            self.closed += 1
        for e in face:
            self.sides[e] += 1
            if is_tri:
                self.tri[e] += 1
            elif self.sides[e] == 2 and not self.tri[e] and self._counts(e):
                self.unused += 1
        undo = (face, events[p], self.opened[p], is_tri)
        cur[a] += 1
        cur[b] += 1
        sa, sb = cur[a], cur[b]
        perm[p - 1], perm[p] = b, a
        edges[p] = [sb, sa]
        events[p] = 0
        self.opened[p] = True
        events[p - 1] += 1
        edges[p - 1].append(sb)
        events[p + 1] += 1
        edges[p + 1].append(sa)
        self.word.append(p)
        return undo

    def pop(self, undo):
        k = self.k
        p = self.word.pop()
        face, ev, op, is_tri = undo
        perm, cur, edges, events = self.perm, self.cur, self.edges, self.events
        edges[p + 1].pop()
        events[p + 1] -= 1
        edges[p - 1].pop()
        events[p - 1] -= 1
        b, a = perm[p - 1], perm[p]
        perm[p - 1], perm[p] = a, b
        cur[a] -= 1
        cur[b] -= 1
        edges[p] = face
        events[p] = ev
        self.opened[p] = op
        for e in face:
            if is_tri:
                self.tri[e] -= 1
            elif self.sides[e] == 2 and not self.tri[e] and self._counts(e):
                self.unused -= 1
            self.sides[e] -= 1
        if is_tri:
            self.closed -= 1

    def upper_bound(self) -> int:
        return self.closed + (self.segments - 3 * self.closed - self.unused) // 3

    def final_count(self) -> int:
        """Triangles of the finished arrangement (wedges included when projective)."""
        if not self.projective:
            return self.closed
        k = self.k
        wedges = sum(1 for g in range(1, k) if self.events[g] == 0)
        wedges += (self.events[0] == 1) + (self.events[k] == 1)
        return self.closed + wedges


def _next_forbidden(forbidden: int, p: int) -> int:
    # letters commuting with p stay forbidden; those below p become forbidden
    near = (1 << (p - 1)) | (1 << p) | (1 << (p + 1))
    below = (1 << (p - 1)) - 1  # letters 1..p-2
    return (forbidden & ~near) | below


def _walk(walker: _Walker, forbidden: int, on_leaf: Callable, gate: Optional[Callable] = None):
    """Recursive enumeration from the walker's current state."""
    if len(walker.word) == walker.total:
        on_leaf(walker)
        return
    if gate is not None and not gate(walker):
        return
    perm = walker.perm
    for p in range(1, walker.k):
        if forbidden >> p & 1 or perm[p - 1] > perm[p]:
            continue
        undo = walker.push(p)
        _walk(walker, _next_forbidden(forbidden, p), on_leaf, gate)
        walker.pop(undo)


def _replay(k: int, projective: bool, prefix) -> tuple[_Walker, int]:
    w = _Walker(k, projective)
    forbidden = 0
    for p in prefix:
        w.push(p)
        forbidden = _next_forbidden(forbidden, p)
    return w, forbidden


def _prefixes(k: int, depth: int) -> list[tuple[int, ...]]:
    """Lexicographically ordered prefixes of minimal words, of the given depth."""
    out = []
    w = _Walker(k, False)
    depth = min(depth, w.total)

    def rec(forbidden):
        if len(w.word) == depth:
            out.append(tuple(w.word))
            return
        for p in range(1, k):
            if forbidden >> p & 1 or w.perm[p - 1] > w.perm[p]:
                continue
            u = w.push(p)
            rec(_next_forbidden(forbidden, p))
            w.pop(u)

    rec(0)
    return out


def _keeps(symmetry: str, k: int, projective: bool):
    """Leaf filter: keep only the representative of each symmetry class."""
    if symmetry == NO_GROUP:
        return None
    if symmetry == AFFINE_GROUP:
        return lambda word: affine_representative(AffineArrangement(word)) == word
    if symmetry == PROJECTIVE_GROUP:
        return lambda word: is_projective_representative(projectivize(AffineArrangement(word)))
    raise ValueError(f"unknown symmetry group {symmetry!r}")


def enumerate_classes(config: SearchConfig, visitor: Callable) -> int:
    """Call ``visitor(word, triangles)`` once per class; return the number visited.

    ``word`` is the lexicographically smallest word of the affine part.
    """
    _check_ceiling(config)
    k = _wires(config.n, config.mode)
    projective = config.mode == PROJECTIVE
    keep = _keeps(config.symmetry, k, projective)
    count = 0

    def leaf(w: _Walker):
        nonlocal count
        word = tuple(w.word)
        if keep is not None and not keep(word):
            return
        count += 1
        visitor(word, w.final_count())

    _walk(_Walker(k, projective), 0, leaf)
    return count


# keep the name used elsewhere in the package
enumerate = enumerate_classes


class _Best:
    def __init__(self, floor: Optional[int], prune: bool, keep, deadline):
        self.count = -1
        self.word = None
        self.visited = 0
        self.floor = floor
        self.prune = prune
        self.keep = keep
        self.deadline = deadline
        self.interrupted = False

    def leaf(self, w: _Walker):
        word = None
        if self.keep is not None:
            word = tuple(w.word)
            if not self.keep(word):
                return
        self.visited += 1
        c = w.final_count()
        if c > self.count and (self.floor is None or c >= self.floor):
            self.count = c
            self.word = word or tuple(w.word)

    def gate(self, w: _Walker) -> bool:
        if self.deadline is not None and time.monotonic() > self.deadline:
            self.interrupted = True
            return False
        if not self.prune:
            return True
        ub = w.upper_bound()
        if ub <= self.count:
            return False
        return self.floor is None or ub >= self.floor


def _search_prefix(args):
    k, projective, prefix, floor, prune, symmetry, time_limit = args
    deadline = None if time_limit is None else time.monotonic() + time_limit
    best = _Best(floor, prune, _keeps(symmetry, k, projective), deadline)
    w, forbidden = _replay(k, projective, prefix)
    gate = best.gate if (prune or deadline is not None) else None
    _walk(w, forbidden, best.leaf, gate)
    return best.count, best.word, best.visited, best.interrupted


def _status(count, interrupted, floor) -> str:
    if interrupted:
        return "interrupted"
    if count < 0:
        return "below-prune-bound"
    return "exhaustive"


def max_triangles_exact(config: SearchConfig) -> Record:
    """Exact maximum over all commutation classes.

    Ties are broken by the lexicographically smallest affine-part word, so
    sequential and parallel runs agree on the witness.
    """
    _check_ceiling(config)
    k = _wires(config.n, config.mode)
    projective = config.mode == PROJECTIVE
    args = (k, projective, (), config.prune_bound, config.prune, config.symmetry,
            config.time_limit)
    if config.workers <= 1:
        results = [_search_prefix(args)]
    else:
        depth = 1
        prefixes = _prefixes(k, depth)
        while len(prefixes) < 4 * config.workers and depth < n_crossings(k):
            depth += 1
            prefixes = _prefixes(k, depth)
        jobs = [(k, projective, pre) + args[3:] for pre in prefixes]
        with multiprocessing.get_context("spawn").Pool(config.workers) as pool:
            results = pool.map(_search_prefix, jobs, chunksize=1)
    count, word, visited, interrupted = -1, None, 0, False
    # prefixes are in lexicographic order, so the first maximum wins ties
    for c, w, v, intr in results:
        visited += v
        interrupted |= intr
        if c > count:
            count, word = c, w
    status = _status(count, interrupted, config.prune_bound)
    return Record(config.n, config.mode, count if count >= 0 else None, word, visited, status)


# --- local moves -----------------------------------------------------------

def _flip_word(word: list[int], c1: int, e: int, c2: int) -> tuple[int, ...]:
    """Braid move on the triangle with crossings ``c1 < e < c2``."""
    g = word[c1]
    tainted = {g - 1, g}
    dep = [False] * len(word)
    dep[c1] = True
    for j in range(c1 + 1, len(word)):
        q = word[j]
        if q - 1 in tainted or q in tainted:
            dep[j] = True
            tainted.update((q - 1, q))
    before = [word[i] for i in range(c2) if not dep[i]]
    after = [word[i] for i in range(c1 + 1, len(word))
             if i not in (e, c2) and (dep[i] or i > c2)]
    h = word[e]
    return tuple(before + [h, g, h] + after)


def flip(A: AffineArrangement, face: int) -> AffineArrangement:
    """Pass one side of a bounded triangle across the opposite vertex.

    ``face`` indexes :func:`pseudolines.faces.build_faces` of ``A``.
    """
    fs = build_faces(A, check=False)
    if not 0 <= face < len(fs.faces):
        raise NotATriangle(f"face {face} does not exist")
    f = fs.faces[face]
    if not (f.bounded and f.size == 3):
        raise NotATriangle(f"face {face} is not a bounded triangle")
    c1, c2 = f.left, f.right
    word = list(A.word)
    mids = [i for i in range(c1 + 1, c2) if abs(word[i] - word[c1]) == 1]
    assert len(mids) == 1
    return AffineArrangement(validate(A.n, _flip_word(word, c1, mids[0], c2)))


def random_arrangement(n: int, rng: random.Random) -> AffineArrangement:
    """Random sweep: repeatedly perform a uniformly chosen available crossing."""
    perm = list(range(n))
    word = []
    for _ in range(n_crossings(n)):
        choices = [p for p in range(1, n) if perm[p - 1] < perm[p]]
        p = rng.choice(choices)
        perm[p - 1], perm[p] = perm[p], perm[p - 1]
        word.append(p)
    return AffineArrangement(validate(n, word))


def _score(word, k: int, projective: bool) -> int:
    tri, wedges = _triangle_count(k, word)
    return tri + wedges if projective else tri


def heuristic_search(config: SearchConfig) -> Record:
    """Simulated annealing over triangle flips with random restarts.

    Deterministic for a given ``rng_seed``.  Projective runs occasionally
    move a random line to infinity so that flips across infinity are
    reachable.
    """
    from .arrangement import reroot  # local: only needed in projective mode

    k = _wires(config.n, config.mode)
    projective = config.mode == PROJECTIVE
    rng = random.Random(config.rng_seed)
    steps = config.budget if config.budget is not None else 250 * k * k
    target = bound(config.n, config.mode).value
    deadline = None if config.time_limit is None else time.monotonic() + config.time_limit
    best_c, best_w, visited = -1, None, 0
    for _ in range(config.restarts):
        A = random_arrangement(k, rng)
        cur = _score(A.word, k, projective)
        temp = config.temperature
        for _ in range(steps):
            visited += 1
            if cur > best_c or (cur == best_c and A.normal < best_w):
                best_c, best_w = cur, A.normal
            if best_c >= target or (deadline is not None and time.monotonic() > deadline):
                break
            if projective and rng.random() < config.reroot_rate:
                P = projectivize(A)
                A = reroot(P, rng.randrange(P.n))
                continue
            tris = triangle_crossings(k, A.word)
            if not tris:
                A = random_arrangement(k, rng)
                cur = _score(A.word, k, projective)
                continue
            c1, e, c2 = rng.choice(tris)
            B = AffineArrangement(_flip_word(list(A.word), c1, e, c2))
            s = _score(B.word, k, projective)
            if s >= cur or rng.random() < math.exp((s - cur) / temp):
                A, cur = B, s
            temp = max(config.min_temperature, temp * config.cooling)
        if best_c >= target or (deadline is not None and time.monotonic() > deadline):
            break
    return Record(config.n, config.mode, best_c, best_w, visited, "heuristic")


@dataclass
class ClaimReport:
    n: int
    mode: str
    bound: int
    found: Optional[int]
    reached: bool
    gap: Optional[int]
    known: Optional[int]
    agrees_with_known: Optional[bool]
    record: Record = field(repr=False, default=None)


def verify_claim(n: int, mode: str, workers: int = 1, beyond_ceiling: bool = False) -> ClaimReport:
    """Exhaustively compare the true maximum with the bound and the recorded value."""
    rec = max_triangles_exact(SearchConfig(n, mode, workers=workers,
                                           beyond_ceiling=beyond_ceiling))
    b = bound(n, mode).value
    kv = known_exact(n, mode)
    found = rec.max_triangles
    return ClaimReport(n, mode, b, found, found == b,
                       None if found is None else b - found,
                       kv.exact_max,
                       None if kv.exact_max is None else kv.exact_max == found,
                       rec)

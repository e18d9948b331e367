"""Special biserial recognition and band search for monomial string algebras.

A band (a cyclic reduced walk avoiding zero compositions in both reading
directions) certifies that a string algebra is representation-infinite;
its absence at a sufficient length bound, together with the finiteness of
the string set, certifies finiteness.
"""

from __future__ import annotations

from dataclasses import dataclass

from .presentation import (
    QuivertauError,
    ideal_membership_spaces,
    path_is_zero,
)


class NotStringAlgebraError(QuivertauError):
    pass


@dataclass(frozen=True)
class SpecialBiserialReport:
    ok: bool
    violations: tuple[str, ...]


@dataclass(frozen=True)
class StringWord:
    """Alternating word in arrows and formal inverses."""

    letters: tuple[tuple[str, bool], ...]  # (arrow name, is_direct)

    def __str__(self):
        return ".".join(n if d else f"{n}-" for n, d in self.letters)

    def inverse(self):
        return StringWord(tuple((n, not d)
                                for n, d in reversed(self.letters)))

    def rotations(self):
        k = len(self.letters)
        for i in range(k):
            yield StringWord(self.letters[i:] + self.letters[:i])


def special_biserial_check(pres):
    """Degree and composition-uniqueness conditions for special biseriality."""
    q = pres.quiver
    violations = []
    for v in q.vertices:
        if len(q.out_arrows(v)) > 2:
            violations.append(f"vertex {v}: more than 2 outgoing arrows")
        if len(q.in_arrows(v)) > 2:
            violations.append(f"vertex {v}: more than 2 incoming arrows")
    spaces = ideal_membership_spaces(pres)
    for b in q.arrows:
        befores = [a.name for a in q.arrows if a.target == b.source
                   and not path_is_zero(pres, (a.name, b.name), spaces)]
        afters = [c.name for c in q.arrows if c.source == b.target
                  and not path_is_zero(pres, (b.name, c.name), spaces)]
        if len(befores) > 1:
            violations.append(
                f"arrow {b.name}: several nonzero left compositions")
        if len(afters) > 1:
            violations.append(
                f"arrow {b.name}: several nonzero right compositions")
    return SpecialBiserialReport(not violations, tuple(violations))


def _letter_endpoints(by_name, letter):
    name, direct = letter
    a = by_name[name]
    return (a.source, a.target) if direct else (a.target, a.source)


def _word_ok(by_name, zero_paths, letters):
    """Is the letter sequence a string: composable, reduced, and with every
    direct or inverse run avoiding the zero paths?"""
    for prev, nxt in zip(letters, letters[1:]):
        if _letter_endpoints(by_name, prev)[1] != \
                _letter_endpoints(by_name, nxt)[0]:
            return False
        if prev[0] == nxt[0] and prev[1] != nxt[1]:
            return False
    # runs, in direct reading order
    idx = 0
    while idx < len(letters):
        j = idx
        while j + 1 < len(letters) and letters[j + 1][1] == letters[idx][1]:
            j += 1
        run = [n for n, _ in letters[idx:j + 1]]
        if not letters[idx][1]:
            run.reverse()
        for zp in zero_paths:
            k = len(zp)
            if any(tuple(run[t:t + k]) == zp
                   for t in range(len(run) - k + 1)):
                return False
        idx = j + 1
    return True


def band_search(pres, length_bound=None):
    """Lexicographically minimal band of length within the bound, or None.

    Requires a monomial special biserial presentation.  Bands are closed
    reduced walks using both letter kinds, admissible in every rotation
    (checked on the doubled word), and not proper powers; representatives
    are normalized over rotation and inversion.
    """
    report = special_biserial_check(pres)
    if not report.ok:
        raise NotStringAlgebraError("; ".join(report.violations))
    if any(not rel.is_monomial() for rel in pres.relations):
        raise NotStringAlgebraError("non-monomial relation present")
    if length_bound is None:
        length_bound = max(2, 2 * len(pres.quiver.arrows) ** 2)
    q = pres.quiver
    by_name = q.arrows_by_name()
    zero_paths = tuple(rel.terms[0][1] for rel in pres.relations)

    letters = []
    for a in q.arrows:
        letters.append((a.name, True))
        letters.append((a.name, False))
    letters.sort(key=lambda l: (l[0], not l[1]))

    found = []

    def extend(word, at, start):
        if found:
            return
        if len(word) >= 2 and at == start:
            kinds = {d for _, d in word}
            if len(kinds) == 2 and not _is_power(word) \
                    and _word_ok(by_name, zero_paths, word + word):
                found.append(tuple(word))
                return
        if len(word) >= length_bound:
            return
        for letter in letters:
            src, tgt = _letter_endpoints(by_name, letter)
            if src != at:
                continue
            word.append(letter)
            if _word_ok(by_name, zero_paths, word):
                extend(word, tgt, start)
            word.pop()
            if found:
                return

    for start in q.vertices:
        extend([], start, start)
        if found:
            break
    if not found:
        return None
    band = StringWord(found[0])
    best = None
    for candidate in (band, band.inverse()):
        for rot in candidate.rotations():
            if best is None or str(rot) < str(best):
                best = rot
    return best


def _is_power(word):
    k = len(word)
    for d in range(1, k):
        if k % d == 0 and list(word) == list(word[:d]) * (k // d):
            return True
    return False

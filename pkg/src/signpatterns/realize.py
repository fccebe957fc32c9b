"""Constructive realization machinery.

A couple (sign pattern, (pos, neg)) is *realized* by exhibiting a monic
polynomial with that exact coefficient sign sequence, exactly pos simple
positive roots and neg simple negative roots, everything else complex.  All
verification is exact; the randomized search only ever proposes candidates.

Nonrealizability is asserted through one route only: the kappa criterion for
patterns with exactly two sign changes.  Everything else a search fails on is
reported as unresolved.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional

from .patterns import (AdmissiblePair, Couple, SignPattern, admissible_pairs,
                       descartes_pair, pattern_of, ZeroCoefficient)
from .polynomials import Polynomial
from .roots import real_roots_all_simple, root_summary, RootCountSummary, is_squarefree
from .symmetry import (Orbit, mirror_couple, mirror_polynomial, orbit,
                       revert_couple, revert_polynomial)


class CertificateError(Exception):
    """Candidate polynomial does not witness the couple."""


class EpsilonExhausted(Exception):
    """No epsilon above the floor makes the concatenation pattern match."""


@dataclass(frozen=True)
class RealizationCertificate:
    """Exactly verified witness: poly realizes couple."""

    poly: Polynomial
    couple: Couple
    summary: RootCountSummary
    all_roots_simple: bool

    @property
    def degree(self) -> int:
        return self.poly.degree


def verify_certificate(poly: Polynomial, couple: Couple) -> RealizationCertificate:
    """Re-verify a candidate from scratch; raises CertificateError on any failure."""
    if poly.is_zero or not poly.is_monic:
        raise CertificateError("certificate polynomial must be monic")
    if poly.degree != couple.degree:
        raise CertificateError(
            f"degree {poly.degree} does not match pattern length {couple.degree + 1}")
    try:
        actual = pattern_of(poly)
    except ZeroCoefficient as exc:
        raise CertificateError(f"vanishing coefficient: {exc}") from None
    if actual != couple.pattern:
        raise CertificateError(f"pattern {actual} differs from required {couple.pattern}")
    summary = root_summary(poly)
    pos, neg = couple.pair.pos, couple.pair.neg
    if (summary.pos_distinct, summary.pos_with_mult) != (pos, pos):
        raise CertificateError(f"positive roots {summary} do not match pos={pos}")
    if (summary.neg_distinct, summary.neg_with_mult) != (neg, neg):
        raise CertificateError(f"negative roots {summary} do not match neg={neg}")
    if summary.zero_mult != 0:
        raise CertificateError("unexpected root at 0")
    if not real_roots_all_simple(poly):
        raise CertificateError("repeated real root")
    return RealizationCertificate(poly, couple, summary, is_squarefree(poly))


def transport_certificate(cert: RealizationCertificate, generator: str) -> RealizationCertificate:
    """Carry a certificate along a group generator ('revert' or 'mirror')."""
    if generator == "revert":
        poly = revert_polynomial(cert.poly)
        couple = revert_couple(cert.couple)
    elif generator == "mirror":
        poly = mirror_polynomial(cert.poly)
        couple = mirror_couple(cert.couple)
    else:
        raise ValueError(f"unknown generator {generator!r}")
    return verify_certificate(poly, couple)


# ---------------------------------------------------------------------------
# kappa criterion (two-sign-change patterns)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TwoChangePattern:
    """m pluses, n minuses, q pluses; m+n+q = d+1, exactly two sign changes."""

    m: int
    n: int
    q: int

    def __post_init__(self):
        if min(self.m, self.n, self.q) < 1:
            raise ValueError("m, n, q must all be >= 1")

    @property
    def degree(self) -> int:
        return self.m + self.n + self.q - 1

    def pattern(self) -> SignPattern:
        return SignPattern((1,) * self.m + (-1,) * self.n + (1,) * self.q)


def kappa(tp: TwoChangePattern) -> Fraction:
    d = tp.degree
    return Fraction(d - tp.m - 1, tp.m) * Fraction(d - tp.q - 1, tp.q)


@dataclass(frozen=True)
class TwoChangeVerdict:
    kappa: Fraction
    nonrealizable: Optional[Couple]  # the (0, d-2) couple when kappa >= 4
    realizable_note: str


def two_change_verdict(tp: TwoChangePattern) -> TwoChangeVerdict:
    k = kappa(tp)
    if k >= 4:
        pattern = tp.pattern()
        target = Couple(pattern, AdmissiblePair(0, tp.degree - 2))
        return TwoChangeVerdict(k, target,
                                "realizable with every admissible pair of the form (2, v)")
    return TwoChangeVerdict(k, None, "")


def two_change_decomposition(pattern: SignPattern) -> Optional[TwoChangePattern]:
    """(m, n, q) when the pattern is exactly pluses, minuses, pluses."""
    signs = pattern.signs
    m = 0
    while m < len(signs) and signs[m] == 1:
        m += 1
    n = 0
    while m + n < len(signs) and signs[m + n] == -1:
        n += 1
    q = len(signs) - m - n
    if n >= 1 and q >= 1 and all(s == 1 for s in signs[m + n:]):
        return TwoChangePattern(m, n, q)
    return None


# ---------------------------------------------------------------------------
# concatenation (the gluing lemma)
# ---------------------------------------------------------------------------

EPS_FLOOR = Fraction(1, 2 ** 64)


def predicted_concatenation(c1: Couple, c2: Couple) -> Couple:
    """Couple realized by eps^d2 P1(x) P2(x/eps) for small eps > 0."""
    s1 = c1.pattern.signs
    s2 = c2.pattern.signs
    if s1[-1] == 1:
        merged = s1 + s2[1:]
    else:
        merged = s1 + tuple(-s for s in s2[1:])
    pair = AdmissiblePair(c1.pair.pos + c2.pair.pos, c1.pair.neg + c2.pair.neg)
    return Couple(SignPattern(merged), pair)


def concatenate(p1: RealizationCertificate, p2: RealizationCertificate,
                eps_floor: Fraction = EPS_FLOOR) -> RealizationCertificate:
    """Glue two certificates; halve eps from 1/2 until the pattern matches."""
    target = predicted_concatenation(p1.couple, p2.couple)
    eps = Fraction(1, 2)
    while eps >= eps_floor:
        candidate = p1.poly * p2.poly.scale_substitute(eps)
        try:
            return verify_certificate(candidate, target)
        except CertificateError:
            eps /= 2
    raise EpsilonExhausted(
        f"no epsilon >= {eps_floor} glues {p1.couple} and {p2.couple}")


# ---------------------------------------------------------------------------
# randomized search with exact verification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SearchBudget:
    max_samples: int = 20000
    rng_seed: int = 20260809
    refinement_rounds: int = 12


def couple_seed(couple: Couple, master: int) -> int:
    digest = hashlib.sha256(
        f"{couple.pattern}|{couple.pair.pos}|{couple.pair.neg}|{master}".encode()
    ).digest()
    return int.from_bytes(digest[:8], "big")


def _expand_int(neg: list[int], pos: list[int], cpx: list[tuple[int, int]]) -> list[int]:
    """Monic integer polynomial with roots -neg[i], +pos[i] and pairs re +- i*im."""
    c = [1]
    for u in neg:
        c.append(c[-1])
        for i in range(len(c) - 2, 0, -1):
            c[i] = c[i - 1] + u * c[i]
        c[0] = u * c[0]
    for v in pos:
        c.append(c[-1])
        for i in range(len(c) - 2, 0, -1):
            c[i] = c[i - 1] - v * c[i]
        c[0] = -v * c[0]
    for re, im in cpx:
        a = re * re + im * im
        b = -2 * re
        new = [0] * (len(c) + 2)
        for i, v in enumerate(c):
            new[i] += a * v
            new[i + 1] += b * v
            new[i + 2] += v
        c = new
    return c


def _mismatches(coeffs: list[int], signs: tuple[int, ...]) -> int:
    d = len(coeffs) - 1
    bad = 0
    for i, s in enumerate(signs):
        v = coeffs[d - i]
        if v == 0 or (v > 0) != (s > 0):
            bad += 1
    return bad


@dataclass
class _Candidate:
    neg: list[int]
    pos: list[int]
    cpx: list[tuple[int, int]]

    def scaled(self, k: int) -> "_Candidate":
        return _Candidate([u * k for u in self.neg], [v * k for v in self.pos],
                          [(re * k, im * k) for re, im in self.cpx])

    def distinct_ok(self) -> bool:
        return (len(set(self.neg)) == len(self.neg)
                and len(set(self.pos)) == len(self.pos))


def _collide(virtual: list[int], collide_count: int, im_of,
             rng: Optional[random.Random] = None) -> tuple[list[int], list[tuple[int, int]]]:
    """Turn `collide_count` adjacent pairs of sorted virtual roots into complex pairs.

    Works at doubled scale so midpoints stay integral: a pair (a, b) becomes
    re = a + b, im = im_of(a, b) at scale 2; surviving roots are doubled.
    Collision positions are leftmost by default, random when rng is given.
    """
    taken = [False] * len(virtual)
    pairs = []
    for _ in range(collide_count):
        free = [i for i in range(len(virtual) - 1) if not taken[i] and not taken[i + 1]]
        if not free:
            return None  # random positions stranded the matching; caller resamples
        idx = rng.choice(free) if rng is not None else free[0]
        a, b = virtual[idx], virtual[idx + 1]
        taken[idx] = taken[idx + 1] = True
        pairs.append((a + b, max(1, im_of(a, b))))
    survivors = [2 * v for i, v in enumerate(virtual) if not taken[i]]
    return survivors, pairs


def _assemble(vneg: list[int], vpos: list[int], kneg: int, kpos: int,
              im_of, rng: Optional[random.Random] = None) -> Optional[_Candidate]:
    left = _collide(sorted(vneg), kneg, im_of, rng)
    right = _collide(sorted(vpos), kpos, im_of, rng)
    if left is None or right is None:
        return None
    neg2, cpx_neg = left
    pos2, cpx_pos = right
    cpx = [(-re, im) for re, im in cpx_neg] + list(cpx_pos)
    cand = _Candidate(neg2, pos2, cpx)
    return cand if cand.distinct_ok() else None


def _orders(total: int) -> list[list[int]]:
    straight = list(range(total))
    inter = []
    lo, hi = 0, total - 1
    for i in range(total):
        inter.append(lo if i % 2 == 0 else hi)
        if i % 2 == 0:
            lo += 1
        else:
            hi -= 1
    return [straight, straight[::-1], inter, inter[::-1]]


def _structured_candidates(pos: int, neg: int, pairs: int) -> Iterator[_Candidate]:
    total = pos + neg + 2 * pairs
    im_styles = (lambda a, b: b - a,
                 lambda a, b: max(1, (b - a) // 8),
                 lambda a, b: a + b,
                 lambda a, b: 4 * (a + b))
    for base in (2, 4, 8, 16, 64):
        ladder = [base ** i for i in range(total)]
        for order in _orders(total):
            mags = [ladder[j] for j in order]
            # distribute collided pairs across the two sides
            for kneg in range(pairs + 1):
                kpos = pairs - kneg
                vn = sorted(mags[: neg + 2 * kneg])
                vp = sorted(mags[neg + 2 * kneg:])
                for im_of in im_styles:
                    cand = _assemble(vn, vp, kneg, kpos, im_of)
                    if cand is not None:
                        yield cand


def _random_candidate(rng: random.Random, pos: int, neg: int, pairs: int) -> _Candidate:
    def mag() -> int:
        return max(1, round(10 ** rng.uniform(0.0, 6.0)))

    def distinct(k: int) -> list[int]:
        vals: set[int] = set()
        while len(vals) < k:
            v = mag()
            while v in vals:
                v += 1
            vals.add(v)
        return sorted(vals)

    while True:
        kneg = rng.randint(0, pairs)
        kpos = pairs - kneg
        vneg = distinct(neg + 2 * kneg)
        vpos = distinct(pos + 2 * kpos)
        style = rng.random()
        if style < 0.4:
            im_of = lambda a, b: max(1, (b - a) // rng.choice((1, 2, 8, 32)))
        elif style < 0.8:
            im_of = lambda a, b: mag()
        else:
            im_of = lambda a, b: max(1, (a + b) * rng.choice((1, 2, 4)))
        cand = _assemble(vneg, vpos, kneg, kpos, im_of, rng)
        if cand is not None:
            return cand


_MOVES = ((3, 2), (2, 3), (2, 1), (1, 2), (5, 4), (4, 5), (4, 1), (1, 4))


def _violation_score(coeffs: list[int], signs: tuple[int, ...]) -> tuple[int, Fraction]:
    """(mismatch count, scale-invariant size of the offending coefficients).

    The per-position ratio |c_j|^2 / (|c_{j-1}|*|c_{j+1}|) is invariant under
    scaling every root by a constant, so the greedy walk can compare moves
    that rescale the whole configuration.
    """
    d = len(coeffs) - 1
    bad = 0
    total = Fraction(0)
    for i, s in enumerate(signs):
        j = d - i
        v = coeffs[j]
        if v != 0 and (v > 0) == (s > 0):
            continue
        bad += 1
        left = abs(coeffs[j + 1]) if j + 1 <= d else 1
        right = abs(coeffs[j - 1]) if j - 1 >= 0 else 1
        if left and right:
            total += Fraction(v * v, left * right)
        else:
            total += abs(v)
    return bad, total


def _refine(cand: _Candidate, signs: tuple[int, ...], best: int,
            rounds: int, counter: list[int], limit: int) -> Optional[_Candidate]:
    """Greedy per-root magnitude moves driven by the graded violation score."""
    slots = ([("neg", i) for i in range(len(cand.neg))]
             + [("pos", i) for i in range(len(cand.pos))]
             + [("re", i) for i in range(len(cand.cpx))]
             + [("im", i) for i in range(len(cand.cpx))])
    current = cand
    score = _violation_score(_expand_int(cand.neg, cand.pos, cand.cpx), signs)
    for _ in range(rounds):
        improved = False
        for kind, idx in slots:
            for num, den in _MOVES:
                if counter[0] >= limit:
                    return None
                trial = current.scaled(den)
                if kind == "neg":
                    trial.neg[idx] = current.neg[idx] * num
                elif kind == "pos":
                    trial.pos[idx] = current.pos[idx] * num
                elif kind == "re":
                    re, im = trial.cpx[idx]
                    trial.cpx[idx] = (current.cpx[idx][0] * num, im)
                else:
                    re, im = trial.cpx[idx]
                    trial.cpx[idx] = (re, current.cpx[idx][1] * num)
                if not trial.distinct_ok():
                    continue
                counter[0] += 1
                tscore = _violation_score(_expand_int(trial.neg, trial.pos, trial.cpx), signs)
                if tscore < score:
                    current, score = trial, tscore
                    improved = True
                    if score[0] == 0:
                        return current
                    break
        if not improved:
            return None
    return None


def _pattern_holds(neg: list[int], pos: list[int], cpx, signs) -> bool:
    return _mismatches(_expand_int(neg, pos, cpx), signs) == 0


# ---------------------------------------------------------------------------
# float exploration (proposals only; every verdict is exact)
# ---------------------------------------------------------------------------


def _float_expand(pos, neg, cpx):
    c = [1.0]
    for r in pos:
        nxt = [0.0] * (len(c) + 1)
        for i, v in enumerate(c):
            nxt[i] += -r * v
            nxt[i + 1] += v
        c = nxt
    for u in neg:
        nxt = [0.0] * (len(c) + 1)
        for i, v in enumerate(c):
            nxt[i] += u * v
            nxt[i + 1] += v
        c = nxt
    for re, im in cpx:
        a, b = re * re + im * im, -2.0 * re
        nxt = [0.0] * (len(c) + 2)
        for i, v in enumerate(c):
            nxt[i] += a * v
            nxt[i + 1] += b * v
            nxt[i + 2] += v
        c = nxt
    return c


def _float_min_margin(coeffs: list[float], signs: tuple[int, ...]) -> float:
    """Smallest normalized signed margin; positive iff the pattern matches."""
    import math
    d = len(coeffs) - 1
    worst = math.inf
    for i, s in enumerate(signs):
        j = d - i
        v = coeffs[j] * s
        left = abs(coeffs[j + 1]) if j + 1 <= d else 1.0
        right = abs(coeffs[j - 1]) if j - 1 >= 0 else 1.0
        denom = math.sqrt(left * right) + 1e-300
        m = v / denom
        if m < worst:
            worst = m
    return worst


def _nelder_mead(f, x0: list[float], max_evals: int) -> tuple[list[float], float]:
    """Minimal simplex descent; good enough to fall into a feasible crevice."""
    n = len(x0)
    simplex = [list(x0)]
    for i in range(n):
        pt = list(x0)
        pt[i] += 0.75
        simplex.append(pt)
    vals = [f(p) for p in simplex]
    evals = n + 1
    while evals < max_evals:
        order = sorted(range(n + 1), key=lambda k: vals[k])
        simplex = [simplex[k] for k in order]
        vals = [vals[k] for k in order]
        if vals[0] < 0:
            break
        centroid = [sum(p[i] for p in simplex[:-1]) / n for i in range(n)]
        worst = simplex[-1]
        refl = [2 * centroid[i] - worst[i] for i in range(n)]
        fr = f(refl)
        evals += 1
        if fr < vals[0]:
            exp_pt = [3 * centroid[i] - 2 * worst[i] for i in range(n)]
            fe = f(exp_pt)
            evals += 1
            if fe < fr:
                simplex[-1], vals[-1] = exp_pt, fe
            else:
                simplex[-1], vals[-1] = refl, fr
        elif fr < vals[-2]:
            simplex[-1], vals[-1] = refl, fr
        else:
            contr = [(centroid[i] + worst[i]) / 2 for i in range(n)]
            fc = f(contr)
            evals += 1
            if fc < vals[-1]:
                simplex[-1], vals[-1] = contr, fc
            else:
                best = simplex[0]
                for k in range(1, n + 1):
                    simplex[k] = [(simplex[k][i] + best[i]) / 2 for i in range(n)]
                    vals[k] = f(simplex[k])
                evals += n
    order = sorted(range(n + 1), key=lambda k: vals[k])
    return simplex[order[0]], vals[order[0]]


def _polish_stage(couple: Couple, rng: random.Random, counter: list[int],
                  limit: int) -> Optional[RealizationCertificate]:
    """Simplex descent on float margins, then exact verification.

    Floats only ever propose root configurations; a certificate is returned
    only when the rationalized configuration passes the exact checks.  Some
    realizable couples live in thin crevices of root space (near-double
    complex pairs shadowing real roots) that blind sampling essentially never
    hits; margin descent falls into them reliably.
    """
    import itertools
    from math import exp, isfinite

    pos_n, neg_n = couple.pair.pos, couple.pair.neg
    pairs = (couple.degree - pos_n - neg_n) // 2
    signs = couple.pattern.signs
    dims = pos_n + neg_n + 2 * pairs
    if dims == 0:
        return None
    sign_choices = list(itertools.product((-1, 1), repeat=pairs)) or [()]

    def unpack(x, re_signs):
        k = 0
        vals = []
        for v in x:
            vals.append(exp(max(-14.0, min(14.0, v))))
        pos = vals[:pos_n]
        neg = vals[pos_n:pos_n + neg_n]
        cpx = []
        for j in range(pairs):
            re = re_signs[j] * vals[pos_n + neg_n + 2 * j]
            im = vals[pos_n + neg_n + 2 * j + 1]
            cpx.append((re, im))
        return pos, neg, cpx

    # float evaluations are roughly fifty times cheaper than exact integer
    # candidate checks; charge them against the sample budget at 16:1
    fevals = [0]
    restart = 0
    while counter[0] < limit:
        re_signs = sign_choices[restart % len(sign_choices)]
        restart += 1

        def objective(x):
            fevals[0] += 1
            if fevals[0] % 16 == 0:
                counter[0] += 1
            coeffs = _float_expand(*unpack(x, re_signs))
            if not all(isfinite(v) for v in coeffs):
                return 1e9
            return -_float_min_margin(coeffs, signs)

        x0 = [rng.uniform(-5.0, 5.0) for _ in range(dims)]
        budget_here = min(600 * dims, 16 * max(0, limit - counter[0]))
        if budget_here < 4 * dims:
            return None
        best_x, best_f = _nelder_mead(objective, x0, budget_here)
        if best_f >= 0:
            continue
        fpos, fneg, fcpx = unpack(best_x, re_signs)
        for digits in (8, 10, 12, 15):
            den = 10 ** digits
            try:
                rpos = [Fraction(v).limit_denominator(den) for v in fpos]
                rneg = [Fraction(v).limit_denominator(den) for v in fneg]
                rcpx = [(Fraction(re).limit_denominator(den), Fraction(im).limit_denominator(den))
                        for re, im in fcpx]
                if (len(set(rpos)) != len(rpos) or len(set(rneg)) != len(rneg)
                        or any(v <= 0 for v in rpos + rneg) or any(im <= 0 for _, im in rcpx)):
                    continue
                poly = Polynomial.one()
                for v in rneg:
                    poly = poly * Polynomial((v, 1))
                for v in rpos:
                    poly = poly * Polynomial((-v, 1))
                for re, im in rcpx:
                    poly = poly * Polynomial((re * re + im * im, -2 * re, 1))
                return verify_certificate(poly, couple)
            except CertificateError:
                continue
    return None


def _chain_config(signs: tuple[int, ...], base: int) -> tuple[list[int], list[int]]:
    """Hyperbolic full-pair configuration from the concatenation chain.

    Reading the pattern left to right, each position appends one root whose
    magnitude shrinks geometrically: a sign preservation appends a negative
    root, a sign change a positive one.  For base large enough this realizes
    (pattern, (c, p)) outright.
    """
    d = len(signs) - 1
    neg, pos = [], []
    for k in range(1, d + 1):
        mag = base ** (d - k)
        if signs[k] == signs[k - 1]:
            neg.append(mag)
        else:
            pos.append(mag)
    return neg, pos


def _adjacent_matchings(n: int, k: int, cap: int) -> list[tuple[int, ...]]:
    """Up to cap ways to pick k disjoint adjacent index pairs (i, i+1) from range(n)."""
    out: list[tuple[int, ...]] = []

    def rec(start: int, left: int, acc: tuple[int, ...]):
        if len(out) >= cap:
            return
        if left == 0:
            out.append(acc)
            return
        for i in range(start, n - 1):
            rec(i + 2, left - 1, acc + (i,))

    rec(0, k, ())
    return out


def _collide_at(neg: list[int], pos: list[int], mneg: tuple[int, ...], mpos: tuple[int, ...],
                shrink: int) -> _Candidate:
    """Collide the matched adjacent pairs into complex pairs (doubled scale)."""
    cpx = []
    drop_n, drop_p = set(), set()
    for i in mneg:
        a, b = neg[i], neg[i + 1]
        cpx.append((-(a + b), max(1, (b - a) // shrink)))
        drop_n.update((i, i + 1))
    for i in mpos:
        a, b = pos[i], pos[i + 1]
        cpx.append((a + b, max(1, (b - a) // shrink)))
        drop_p.update((i, i + 1))
    return _Candidate([2 * v for j, v in enumerate(neg) if j not in drop_n],
                      [2 * v for j, v in enumerate(pos) if j not in drop_p], cpx)


def _walked_collisions(start_neg: list[int], start_pos: list[int], signs: tuple[int, ...],
                       mneg: tuple[int, ...], mpos: tuple[int, ...],
                       counter: list[int], limit: int) -> Iterator[_Candidate]:
    """Walk matched pairs together while the real-root pattern holds, testing
    collided versions along the way."""
    neg, pos = list(start_neg), list(start_pos)
    chosen = [("neg", i) for i in mneg] + [("pos", i) for i in mpos]
    for _round in range(48):
        for shrink in (2, 1, 8, 64):
            yield _collide_at(neg, pos, mneg, mpos, shrink)
        if counter[0] >= limit:
            return
        moved = False
        for which, i in chosen:
            roots = neg if which == "neg" else pos
            a, b = roots[i], roots[i + 1]
            if b * 16 <= a * 17:  # gap below ~6%: collided versions already emitted
                continue
            from math import isqrt
            m = isqrt(a * b)
            for na, nb in ((m, m + max(1, (b - a) // 32)),
                           ((3 * a + b) // 4, (a + 3 * b) // 4),
                           (a, (a + b) // 2)):
                if not a <= na < nb <= b:
                    continue
                trial = list(roots)
                trial[i], trial[i + 1] = na, nb
                if len(set(trial)) != len(trial):
                    continue
                counter[0] += 1
                tn = trial if which == "neg" else neg
                tp = trial if which == "pos" else pos
                if _pattern_holds(tn, tp, [], signs):
                    roots[i], roots[i + 1] = na, nb
                    moved = True
                    break
                if counter[0] >= limit:
                    return
        if not moved:
            break
    for shrink in (4, 16, 256):
        yield _collide_at(neg, pos, mneg, mpos, shrink)


def search_realizer(couple: Couple, budget: SearchBudget) -> Optional[RealizationCertificate]:
    """Randomized root-space search; a returned certificate is exactly verified.

    Three candidate streams run against one sample budget: deterministic
    ladder configurations, collision continuation from hyperbolic realizers of
    the same pattern, and log-uniform random configurations.  None means not
    found within budget -- never a nonrealizability proof.
    """
    pos, neg = couple.pair.pos, couple.pair.neg
    d = couple.degree
    pairs = (d - pos - neg) // 2
    signs = couple.pattern.signs
    counter = [0]
    limit = budget.max_samples
    rng = random.Random(couple_seed(couple, budget.rng_seed))

    def consider(cand: _Candidate) -> Optional[RealizationCertificate]:
        counter[0] += 1
        coeffs = _expand_int(cand.neg, cand.pos, cand.cpx)
        bad = _mismatches(coeffs, signs)
        if bad == 0:
            return verify_certificate(Polynomial(coeffs), couple)
        if bad <= 2 and budget.refinement_rounds:
            hit = _refine(cand, signs, bad, budget.refinement_rounds, counter, limit)
            if hit is not None:
                return verify_certificate(
                    Polynomial(_expand_int(hit.neg, hit.pos, hit.cpx)), couple)
        return None

    for cand in _structured_candidates(pos, neg, pairs):
        if counter[0] >= limit:
            return None
        found = consider(cand)
        if found:
            return found

    # continuation: start from the deterministic chain realizer of the full
    # Descartes pair, then collide matched adjacent same-sign roots
    if pairs:
        dp = descartes_pair(couple.pattern)
        kpos_full, kneg_full = (dp.c - pos) // 2, (dp.p - neg) // 2
        stage_cap = counter[0] + max(1000, limit // 5)
        for base in (3, 2, 4, 8):
            cn, cp = _chain_config(signs, base)
            if not _pattern_holds(sorted(cn), sorted(cp), [], signs):
                counter[0] += 1
                continue
            cn, cp = sorted(cn), sorted(cp)
            mn_all = _adjacent_matchings(len(cn), kneg_full, 6)
            mp_all = _adjacent_matchings(len(cp), kpos_full, 6)
            combos = [(mn, mp) for mn in mn_all for mp in mp_all][:12]
            for mn, mp in combos:
                for cand in _walked_collisions(cn, cp, signs, mn, mp, counter, stage_cap):
                    if counter[0] >= min(limit, stage_cap):
                        break
                    found = consider(cand)
                    if found:
                        return found
            if counter[0] >= min(limit, stage_cap):
                break

        # margin-descent polish: reaches thin feasible regions
        polish_cap = counter[0] + max(2000, (limit - counter[0]) * 3 // 5)
        found = _polish_stage(couple, rng, counter, min(limit, polish_cap))
        if found:
            return found

    while counter[0] < limit:
        found = consider(_random_candidate(rng, pos, neg, pairs))
        if found:
            return found
    return None


# ---------------------------------------------------------------------------
# degree-wide classification
# ---------------------------------------------------------------------------


def all_couples(d: int) -> Iterator[Couple]:
    """Every admissible couple of degree d (patterns lead with +)."""
    if d < 1:
        raise ValueError("degree must be >= 1")
    for bits in range(2 ** d):
        signs = [1]
        for i in range(d):
            signs.append(1 if not (bits >> i) & 1 else -1)
        pattern = SignPattern(tuple(signs))
        for pair in sorted(admissible_pairs(pattern), key=lambda a: (a.pos, a.neg)):
            yield Couple(pattern, pair)


class CertificatePool:
    """Certificates keyed by couple; registering one fills its whole orbit."""

    def __init__(self):
        self._by_couple: dict[Couple, RealizationCertificate] = {}
        self._by_degree: dict[int, list[RealizationCertificate]] = {}

    def __contains__(self, couple: Couple) -> bool:
        return couple in self._by_couple

    def get(self, couple: Couple) -> Optional[RealizationCertificate]:
        return self._by_couple.get(couple)

    def of_degree(self, d: int) -> list[RealizationCertificate]:
        return self._by_degree.get(d, [])

    def __len__(self) -> int:
        return len(self._by_couple)

    def add(self, cert: RealizationCertificate) -> None:
        if cert.couple in self._by_couple:
            return
        self._by_couple[cert.couple] = cert
        self._by_degree.setdefault(cert.degree, []).append(cert)

    def register_orbit(self, cert: RealizationCertificate) -> None:
        self.add(cert)
        seen = {cert.couple}
        frontier = [cert]
        while frontier:
            cur = frontier.pop()
            for gen in ("revert", "mirror"):
                moved = transport_certificate(cur, gen)
                if moved.couple not in seen:
                    seen.add(moved.couple)
                    self.add(moved)
                    frontier.append(moved)


@dataclass(frozen=True)
class OrbitReport:
    canonical: Couple
    orbit_size: int
    status: str  # realized | nonrealizable_by_kappa | unresolved
    method: str = ""
    certificate: Optional[RealizationCertificate] = None
    kappa_value: Optional[Fraction] = None
    kappa_member: Optional[Couple] = None


@dataclass(frozen=True)
class ClassificationReport:
    degree: int
    budget: SearchBudget
    orbits: tuple[OrbitReport, ...]

    def count(self, status: str) -> int:
        return sum(1 for o in self.orbits if o.status == status)

    @property
    def realized(self) -> int:
        return self.count("realized")

    @property
    def nonrealizable_by_kappa(self) -> int:
        return self.count("nonrealizable_by_kappa")

    @property
    def unresolved(self) -> int:
        return self.count("unresolved")

    @property
    def unrealized(self) -> int:
        """Orbits without a certificate: kappa-proved plus search-unresolved."""
        return self.nonrealizable_by_kappa + self.unresolved

    def orbit_for(self, couple: Couple) -> Optional[OrbitReport]:
        target = orbit(couple).canonical
        for rep in self.orbits:
            if rep.canonical == target:
                return rep
        return None


def _kappa_flag(orb: Orbit) -> Optional[tuple[Couple, Fraction]]:
    for member in sorted(orb.couples, key=Couple.key):
        tp = two_change_decomposition(member.pattern)
        if tp is None:
            continue
        verdict = two_change_verdict(tp)
        if verdict.nonrealizable is not None and member.pair == verdict.nonrealizable.pair:
            return member, verdict.kappa
    return None


def classify_degree(d: int, budget: SearchBudget,
                    pool: Optional[CertificatePool] = None,
                    search_hook=search_realizer) -> ClassificationReport:
    """Classify every canonical orbit of degree d.

    Lower degrees are classified on the way up so the concatenation phase has
    its full certificate pool.  The search hook exists for tests.
    """
    if pool is None:
        pool = CertificatePool()
    report: Optional[ClassificationReport] = None
    for dd in range(1, d + 1):
        report = _classify_one_degree(dd, budget, pool, search_hook)
    assert report is not None
    return report


def _classify_one_degree(d: int, budget: SearchBudget, pool: CertificatePool,
                         search_hook) -> ClassificationReport:
    orbits: dict[Couple, Orbit] = {}
    for couple in all_couples(d):
        orb = orbit(couple)
        orbits.setdefault(orb.canonical, orb)

    kappa_flags: dict[Couple, tuple[Couple, Fraction]] = {}
    methods: dict[Couple, str] = {}
    for canonical, orb in orbits.items():
        flag = _kappa_flag(orb)
        if flag is not None:
            kappa_flags[canonical] = flag
        if canonical in pool:
            methods[canonical] = "pool"

    def resolved(canonical: Couple) -> bool:
        return canonical in pool or canonical in kappa_flags

    # concatenation phase: lower-degree pools are complete by induction
    for d1 in range(1, d):
        d2 = d - d1
        for c1 in pool.of_degree(d1):
            for c2 in pool.of_degree(d2):
                target = predicted_concatenation(c1.couple, c2.couple)
                canonical = orbit(target).canonical
                if canonical not in orbits or resolved(canonical):
                    continue
                try:
                    cert = concatenate(c1, c2)
                except EpsilonExhausted:
                    continue
                pool.register_orbit(cert)
                methods[canonical] = "concatenation"

    # search phase for whatever remains
    for canonical in sorted(orbits, key=Couple.key):
        if resolved(canonical):
            continue
        cert = search_hook(canonical, budget)
        if cert is not None:
            pool.register_orbit(cert)
            methods[canonical] = "search"

    reports = []
    for canonical in sorted(orbits, key=Couple.key):
        orb = orbits[canonical]
        cert = pool.get(canonical)
        if cert is not None:
            reports.append(OrbitReport(canonical, orb.size, "realized",
                                       methods.get(canonical, "pool"), cert))
        elif canonical in kappa_flags:
            member, kval = kappa_flags[canonical]
            reports.append(OrbitReport(canonical, orb.size, "nonrealizable_by_kappa",
                                       "kappa", None, kval, member))
        else:
            reports.append(OrbitReport(canonical, orb.size, "unresolved"))
    return ClassificationReport(d, budget, tuple(reports))

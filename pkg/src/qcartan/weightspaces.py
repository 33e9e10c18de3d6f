"""Canonical bases of the U^+/U^- weight spaces.

The quantum Serre quotient is computed by weight-graded linear algebra, one
weight space at a time and inductively in height.  A weight space is spanned
by generator-times-lower-basis words; dependencies among those are detected
through the commutator maps [E_k, -], which are injective on U^- in negative
weights (the nondegeneracy of the standard pairing).  Both signs share these
tables because the E- and F-side Serre relations are identical.

Words are tuples of 1-based simple-root indices; the stored reduction data
expresses every generator-times-basis product in basis coordinates, so any
free word reduces by peeling letters from the left.  Basis words are the
lex-least spanning words, giving one canonical choice per weight space.
"""

from __future__ import annotations

from fractions import Fraction

from .linalg import Echelon, vec_add, vec_scale
from .qfield import ONE, QRat, q_power
from .rootsys import RootData, kostant_partition_count


class _Space:
    __slots__ = ("basis", "coords", "ab")

    def __init__(self, basis, coords, ab):
        self.basis = basis      # tuple of basis words, lex order
        self.coords = coords    # (i, lower_word) -> {basis_word: QRat}
        self.ab = ab            # (k, basis_word) -> (A_vec, B_vec) dicts


class WeightSpaces:
    """Grow-only cache of weight-space bases and reduction tables."""

    def __init__(self, rd: RootData, npow: int = 1):
        self.rd = rd
        self.npow = npow
        self._spaces: dict[tuple, _Space] = {}
        self._reduce_memo: dict[tuple, dict] = {}
        self._qafac = [None] + [
            (q_power(rd.d[i], npow) - q_power(-rd.d[i], npow)).inverse()
            for i in range(rd.rank)]

    # -- scalars ---------------------------------------------------------
    def qpow(self, e) -> QRat:
        return q_power(e, self.npow)

    def _ip(self, k: int, weight) -> Fraction:
        # (alpha_k, weight) for an integer weight tuple
        rd = self.rd
        return sum((Fraction(c) * rd.d[j] * rd.cartan[j][k - 1]
                    for j, c in enumerate(weight) if c), Fraction(0))

    # -- space construction ----------------------------------------------
    def space(self, weight: tuple) -> _Space:
        weight = tuple(int(c) for c in weight)
        got = self._spaces.get(weight)
        if got is None:
            got = self._build(weight)
            self._spaces[weight] = got
        return got

    def dimension(self, weight: tuple) -> int:
        return len(self.space(tuple(int(c) for c in weight)).basis)

    def basis_words(self, weight: tuple) -> tuple:
        return self.space(tuple(int(c) for c in weight)).basis

    def _build(self, weight: tuple) -> _Space:
        rd = self.rd
        n = rd.rank
        if any(c < 0 for c in weight):
            raise ValueError("weight not in the positive cone: %r" % (weight,))
        ht = sum(weight)
        if ht == 0:
            return _Space(((),), {}, {(k, ()): ({}, {})
                                      for k in range(1, n + 1)})

        lowers = {}
        for i in range(1, n + 1):
            if weight[i - 1]:
                low = tuple(c - (1 if j == i - 1 else 0)
                            for j, c in enumerate(weight))
                lowers[i] = (low, self.space(low))
        sub = {}
        for k in range(1, n + 1):
            if weight[k - 1]:
                wk = tuple(c - (1 if j == k - 1 else 0)
                           for j, c in enumerate(weight))
                sub[k] = (wk, self.space(wk))

        spanning = sorted((i,) + b for i, (_, sp) in lowers.items()
                          for b in sp.basis)

        # commutator data: [E_k, x] = A_k(x) K_k + K_k^{-1} B_k(x)
        ab_new: dict = {}

        def psi(word):
            i = word[0]
            b = word[1:]
            low_weight, low_sp = lowers[i]
            out_a, out_b = {}, {}
            stacked = {}
            for k in range(1, n + 1):
                if k not in sub:
                    out_a[k], out_b[k] = {}, {}
                    continue
                wk, spk = sub[k]
                a_b, b_b = low_sp.ab[(k, b)]
                # F_i * (lower A/B parts), pushed into basis coords of wk
                av = {}
                for lw, c in a_b.items():
                    av = vec_add(av, vec_scale(spk.coords[(i, lw)], c))
                bv = {}
                fac = self.qpow(-self._ip(k, rd.simple(i)))
                for lw, c in b_b.items():
                    bv = vec_add(bv, vec_scale(spk.coords[(i, lw)], c * fac))
                if k == i:
                    g = self._qafac[k] * self.qpow(-self._ip(k, low_weight))
                    av = vec_add(av, {b: g})
                    bv = vec_add(bv, {b: -self._qafac[k]})
                out_a[k], out_b[k] = av, bv
                for lw, c in av.items():
                    stacked[("A", k, lw)] = c
                for lw, c in bv.items():
                    stacked[("B", k, lw)] = c
            return stacked, out_a, out_b

        ech = Echelon(track=True)
        basis = []
        coords = {}
        for word in spanning:
            stacked, out_a, out_b = psi(word)
            is_new, combo = ech.add(stacked, label=word)
            key = (word[0], word[1:])
            if is_new:
                basis.append(word)
                coords[key] = {word: ONE}
                for k in range(1, n + 1):
                    ab_new[(k, word)] = (out_a[k], out_b[k])
            else:
                coords[key] = dict(combo or {})
        sp = _Space(tuple(basis), coords, ab_new)

        expected = kostant_partition_count(
            rd, tuple(Fraction(c) for c in weight))
        if len(basis) != expected:
            raise AssertionError(
                "weight space dimension %d != Kostant count %d at %r"
                % (len(basis), expected, weight))
        return sp

    # -- word reduction ----------------------------------------------------
    def reduce_word(self, word: tuple) -> dict:
        """Express a free word in canonical basis coordinates."""
        word = tuple(word)
        if len(word) <= 1:
            return {word: ONE}
        got = self._reduce_memo.get(word)
        if got is not None:
            return got
        i = word[0]
        rest = self.reduce_word(word[1:])
        weight = [0] * self.rd.rank
        for t in word:
            weight[t - 1] += 1
        sp = self.space(tuple(weight))
        out: dict = {}
        for b, c in rest.items():
            out = vec_add(out, vec_scale(sp.coords[(i, b)], c))
        self._reduce_memo[word] = out
        return out

    def word_weight(self, word: tuple) -> tuple:
        weight = [Fraction(0)] * self.rd.rank
        for t in word:
            weight[t - 1] += 1
        return tuple(weight)

"""Boolean functions on GF(2^n) as dense truth tables.

A function is a uint8 vector of length 2^n; entry v is f applied to the
field element with integer value v.  ANF variable X_j corresponds to bit
j-1 of the table index.

The Walsh transform uses the field pairing throughout:

    W_f(a) = sum_x (-1)^(f(x) + Tr^n_1(a x))

computed as a plain fast Hadamard butterfly followed by the linear
reindexing a -> perm[a] with Tr(a x) = parity(perm[a] & x).  Every
spectrum is checked against Parseval's relation and round-tripped back to
the truth table before being returned.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import FieldError, NotBentError, PreconditionError, VerificationError
from .gf2n import FieldSpec, _walsh_permutation


def fwht(signs):
    """In-place-style fast Walsh-Hadamard butterfly, O(n 2^n) exact ints."""
    a = np.asarray(signs, dtype=np.int64).copy()
    size = a.shape[0]
    h = 1
    while h < size:
        b = a.reshape(-1, 2, h)
        top = b[:, 0, :].copy()
        b[:, 0, :] = top + b[:, 1, :]
        b[:, 1, :] = top - b[:, 1, :]
        h *= 2
    return a


@dataclass(frozen=True)
class Classification:
    """Spectrum class: bent, semi-bent, plateaued(s), or mixed.

    Precedence: bent first (all |W| = 2^(n/2), n even), then a single
    amplitude 2^s (named semi-bent when s = n/2 + 1 with n even), else
    mixed carrying the exact absolute-value set.
    """

    kind: str  # "bent" | "semi-bent" | "plateaued" | "mixed"
    amplitude: int | None
    abs_values: tuple[int, ...]

    @property
    def plateaued_family(self):
        return self.kind != "mixed"

    def __str__(self):
        if self.kind == "bent":
            return f"Bent({self.amplitude})"
        if self.kind == "semi-bent":
            return f"SemiBent({self.amplitude})"
        if self.kind == "plateaued":
            return f"Plateaued({self.amplitude})"
        shown = ",".join(str(v) for v in self.abs_values[:8])
        if len(self.abs_values) > 8:
            shown += f",...({len(self.abs_values)} values)"
        return "Mixed{" + shown + "}"


def classify(values, n):
    """Classify a Walsh value vector per the precedence above."""
    absv = np.abs(np.asarray(values, dtype=np.int64))
    abs_set = tuple(int(v) for v in np.unique(absv))
    if n % 2 == 0 and abs_set == ((1 << (n // 2)),):
        return Classification("bent", 1 << (n // 2), abs_set)
    nonzero = [v for v in abs_set if v]
    if len(nonzero) == 1 and nonzero[0] & (nonzero[0] - 1) == 0:
        amp = nonzero[0]
        s = amp.bit_length() - 1
        kind = "semi-bent" if n % 2 == 0 and s == n // 2 + 1 else "plateaued"
        return Classification(kind, amp, abs_set)
    return Classification("mixed", None, abs_set)


class WalshSpectrum:
    """Full integer Walsh spectrum indexed by field elements, plus class."""

    __slots__ = ("field", "values", "classification")

    def __init__(self, field, values):
        values = np.asarray(values, dtype=np.int64)
        if values.shape != (field.size,):
            raise FieldError("spectrum length must be 2^n")
        n = field.n
        if int(np.sum(values * values)) != 1 << (2 * n):
            raise VerificationError("Parseval check failed")
        if np.any(values & 1):
            raise VerificationError("spectrum parity check failed")
        values.flags.writeable = False
        self.field = field
        self.values = values
        self.classification = classify(values, n)

    @property
    def is_bent(self):
        return self.classification.kind == "bent"

    def __getitem__(self, a):
        return int(self.values[a])


class BooleanFunction:
    """Immutable n-variable Boolean function bound to a field model."""

    __slots__ = ("field", "table", "_walsh")

    def __init__(self, field: FieldSpec, table):
        table = np.asarray(table, dtype=np.uint8)
        if table.shape != (field.size,):
            raise FieldError(f"truth table must have length {field.size}")
        if np.any(table > 1):
            raise FieldError("truth table entries must be bits")
        table = table.copy()
        table.flags.writeable = False
        self.field = field
        self.table = table
        self._walsh = None

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, field):
        return cls(field, np.zeros(field.size, dtype=np.uint8))

    @classmethod
    def constant(cls, field, bit):
        return cls(field, np.full(field.size, bit & 1, dtype=np.uint8))

    @classmethod
    def from_univariate(cls, field, terms):
        """x -> Tr^n_1(sum of c_i x^(d_i)) from (coefficient, exponent) pairs."""
        acc = np.zeros(field.size, dtype=np.int64)
        xs = np.arange(field.size, dtype=np.int64)
        for c, d in terms:
            field.check(c)
            if not 0 <= d <= field.order:
                raise FieldError(f"exponent {d} outside [0, 2^n - 1]")
            acc ^= field.mul_elems(field.pow_elems(xs, d), c)
        tr = field.abs_trace_table()
        return cls(field, tr[acc])

    @classmethod
    def from_anf(cls, field, monomials):
        """Build from ANF monomial supports (sets of 1-based variable indices)."""
        coeffs = np.zeros(field.size, dtype=np.uint8)
        for mono in monomials:
            mask = 0
            for j in mono:
                if not 1 <= j <= field.n:
                    raise FieldError(f"variable X{j} outside X1..X{field.n}")
                mask |= 1 << (j - 1)
            coeffs[mask] ^= 1
        return cls(field, _mobius(coeffs))

    # -- structure ------------------------------------------------------------

    @property
    def n(self):
        return self.field.n

    def __eq__(self, other):
        if not isinstance(other, BooleanFunction):
            return NotImplemented
        return self.field == other.field and np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash((self.field, self.table.tobytes()))

    def __repr__(self):
        return f"BooleanFunction(n={self.n}, weight={self.weight()})"

    def weight(self):
        return int(self.table.sum())

    def is_balanced(self):
        return 2 * self.weight() == self.field.size

    # -- pointwise algebra ------------------------------------------------------

    def _same_field(self, other):
        if self.field != other.field:
            raise FieldError("operands live in different fields")

    def __xor__(self, other):
        self._same_field(other)
        return BooleanFunction(self.field, self.table ^ other.table)

    def __and__(self, other):
        self._same_field(other)
        return BooleanFunction(self.field, self.table & other.table)

    def complement(self):
        return BooleanFunction(self.field, self.table ^ 1)

    def shift(self, a):
        """x -> f(x + a) (field addition is XOR)."""
        self.field.check(a)
        idx = np.arange(self.field.size) ^ a
        return BooleanFunction(self.field, self.table[idx])

    def scale_input(self, delta):
        """x -> f(delta x) for nonzero delta."""
        if delta == 0:
            raise FieldError("input scaling needs a nonzero factor")
        idx = self.field.mul_elems(np.arange(self.field.size, dtype=np.int64), delta)
        return BooleanFunction(self.field, self.table[idx])

    def derivative(self, a):
        """D_a f(x) = f(x) + f(x + a)."""
        return self ^ self.shift(a)

    def second_derivative(self, a, b):
        """D_a D_b f: four-term sum over the coset of span{a, b}."""
        idx = np.arange(self.field.size)
        t = self.table
        return BooleanFunction(
            self.field, t ^ t[idx ^ a] ^ t[idx ^ b] ^ t[idx ^ a ^ b]
        )

    # -- spectra ---------------------------------------------------------------

    def walsh(self):
        """Walsh spectrum over the field pairing, verified exactly.

        Parseval and the inverse-transform round trip are asserted inline
        for every spectrum this package ever computes.
        """
        if self._walsh is None:
            perm = _walsh_permutation(self.field)
            signs = 1 - 2 * self.table.astype(np.int64)
            hadamard = fwht(signs)
            values = hadamard[perm]
            spectrum = WalshSpectrum(self.field, values)
            # Round trip: the inverse butterfly must reproduce the table.
            back = np.empty_like(hadamard)
            back[perm] = values
            if not np.array_equal(fwht(back) // self.field.size, signs):
                raise VerificationError("Walsh round-trip failed")
            self._walsh = spectrum
        return self._walsh

    def classification(self):
        return self.walsh().classification

    def is_bent(self):
        return self.walsh().is_bent

    def dual(self):
        """The dual f* of a bent function: W_f(a) = 2^(n/2) (-1)^(f*(a))."""
        spectrum = self.walsh()
        if self.n % 2:
            raise NotBentError(0, spectrum[0], "2^(n/2) with n even")
        r = 1 << (self.n // 2)
        bad = np.nonzero(np.abs(spectrum.values) != r)[0]
        if bad.size:
            a = int(bad[0])
            raise NotBentError(a, spectrum[a], r)
        return BooleanFunction(self.field, (spectrum.values < 0).astype(np.uint8))

    # -- algebraic normal form ---------------------------------------------------

    def anf_mask(self):
        """Möbius transform: uint8 vector of ANF coefficients by monomial mask."""
        return _mobius(self.table)

    def anf_monomials(self):
        """ANF as a set of monomial supports (frozensets of 1-based indices)."""
        coeffs = self.anf_mask()
        out = set()
        for mask in np.nonzero(coeffs)[0]:
            mask = int(mask)
            out.add(frozenset(j + 1 for j in range(self.n) if (mask >> j) & 1))
        return frozenset(out)

    def degree(self):
        """Algebraic degree; 0 for the zero function by convention."""
        masks = np.nonzero(self.anf_mask())[0]
        if masks.size == 0:
            return 0
        return int(np.bitwise_count(masks.astype(np.uint64)).max())


def _mobius(bits):
    """Binary Möbius transform (self-inverse XOR butterfly)."""
    a = np.asarray(bits, dtype=np.uint8).copy()
    size = a.shape[0]
    h = 1
    while h < size:
        b = a.reshape(-1, 2, h)
        b[:, 1, :] ^= b[:, 0, :]
        h *= 2
    return a


def walsh_transform(f: BooleanFunction) -> WalshSpectrum:
    """Module-level alias for BooleanFunction.walsh()."""
    return f.walsh()


def sigma_of(f1, f2, f3):
    """Majority-of-three combiner f1 f2 + f1 f3 + f2 f3."""
    return (f1 & f2) ^ (f1 & f3) ^ (f2 & f3)


def check_lemma_walsh_identity(f1, f2, f3):
    """W_sigma(a) = (W_f1 + W_f2 + W_f3 - W_f4)(a) / 2 with f4 = f1+f2+f3.

    Returns True; raises VerificationError otherwise (theorem check).
    """
    f4 = f1 ^ f2 ^ f3
    sigma = sigma_of(f1, f2, f3)
    lhs = sigma.walsh().values * 2
    rhs = (
        f1.walsh().values + f2.walsh().values + f3.walsh().values - f4.walsh().values
    )
    if not np.array_equal(lhs, rhs):
        raise VerificationError("four-function Walsh identity failed")
    return True


def bent_or_raise(f, name="input"):
    """Require bentness, re-raising with a labelled witness."""
    spectrum = f.walsh()
    if not spectrum.is_bent:
        absv = np.abs(spectrum.values)
        r = 1 << (f.n // 2) if f.n % 2 == 0 else None
        a = int(np.nonzero(absv != r)[0][0]) if r is not None else 0
        raise PreconditionError(
            f"{name} is not bent: class {spectrum.classification}, "
            f"W({a}) = {spectrum[a]}"
        )
    return f

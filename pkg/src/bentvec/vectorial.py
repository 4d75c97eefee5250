"""(n,m)-functions with values in a subfield, plus appended Boolean coordinates.

A VectorialFunction stores one output per field element: a value in the
subfield F_{2^m} of GF(2^n) and, for augmented functions, t extra output
bits.  Components are selected by pairs (lambda, v) with lambda in
F_{2^m}, v an integer mask of the extra coordinates, (lambda, v) != (0,0):

    component(lambda, v)(x) = Tr^m_1(lambda F(x)) + <v, extra bits(x)>

Enumeration order is lambda ascending by value, then v ascending, so that
witnesses and reports are deterministic.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .boolfun import BooleanFunction
from .errors import FieldError, VerificationError
from .gf2n import FieldSpec


class BentnessCheck(NamedTuple):
    ok: bool
    selector: tuple[int, int] | None  # failing (lambda, v)
    point: int | None                 # spectrum index witnessing failure
    value: int | None                 # offending Walsh value


class PlateauedCheck(NamedTuple):
    ok: bool
    amplitudes: dict  # (lambda, v) -> amplitude for plateaued, None for mixed
    witness: tuple[int, int] | None


def max_bent_components_bound(n, m):
    """Largest possible number of bent components of an (n,m)-function, m >= n/2."""
    if n % 2:
        raise FieldError("bound needs even n")
    if m < n // 2:
        raise FieldError(f"bound formula needs m >= n/2, got m={m}, n={n}")
    return (1 << m) - (1 << (m - n // 2))


class VectorialFunction:
    """Immutable (n, m [+t])-function as a dense output table."""

    __slots__ = ("field", "m", "values", "t", "extra")

    def __init__(self, field: FieldSpec, m, values, extra=None, t=0):
        if m < 1 or field.n % m != 0:
            raise FieldError(f"output dimension {m} must divide n={field.n}")
        values = np.asarray(values, dtype=np.int64)
        if values.shape != (field.size,):
            raise FieldError(f"output table must have length {field.size}")
        if not np.array_equal(field.pow_elems(values, 1 << m), values):
            raise FieldError(f"outputs must lie in the subfield F_(2^{m})")
        if t < 0:
            raise FieldError("appended coordinate count must be nonnegative")
        if extra is None:
            extra = np.zeros(field.size, dtype=np.int64)
        extra = np.asarray(extra, dtype=np.int64)
        if extra.shape != (field.size,) or np.any(extra < 0) or np.any(extra >> t):
            raise FieldError("extra bits out of range for t appended coordinates")
        values = values.copy()
        extra = extra.copy()
        values.flags.writeable = False
        extra.flags.writeable = False
        self.field = field
        self.m = m
        self.values = values
        self.t = t
        self.extra = extra

    @property
    def n(self):
        return self.field.n

    @property
    def out_bits(self):
        """Total output dimension m + t."""
        return self.m + self.t

    def __eq__(self, other):
        if not isinstance(other, VectorialFunction):
            return NotImplemented
        return (
            self.field == other.field
            and self.m == other.m
            and self.t == other.t
            and np.array_equal(self.values, other.values)
            and np.array_equal(self.extra, other.extra)
        )

    def __hash__(self):
        return hash(
            (self.field, self.m, self.t, self.values.tobytes(), self.extra.tobytes())
        )

    def __repr__(self):
        return f"VectorialFunction(n={self.n}, m={self.m}, t={self.t})"

    # -- construction -----------------------------------------------------------

    @classmethod
    def from_univariate(cls, field, m, terms):
        """Outputs sum of c_i x^(d_i); must land in the subfield F_{2^m}."""
        acc = np.zeros(field.size, dtype=np.int64)
        xs = np.arange(field.size, dtype=np.int64)
        for c, d in terms:
            acc ^= field.mul_elems(field.pow_elems(xs, d), c)
        return cls(field, m, acc)

    def add_boolean(self, g: BooleanFunction):
        """H(x) = F(x) + g(x), the bit embedded as the subfield element 1."""
        if g.field != self.field:
            raise FieldError("operands live in different fields")
        return VectorialFunction(
            self.field, self.m, self.values ^ g.table, self.extra, self.t
        )

    def augment(self, fs):
        """Append Boolean coordinate functions: (F, f_1, ..., f_t')."""
        extra = self.extra.copy()
        t = self.t
        for f in fs:
            if f.field != self.field:
                raise FieldError("appended coordinate lives in a different field")
            extra |= f.table.astype(np.int64) << t
            t += 1
        return VectorialFunction(self.field, self.m, self.values, extra, t)

    # -- components ---------------------------------------------------------------

    def selectors(self):
        """All component selectors (lambda, v) in canonical order."""
        sub = self.field.subfield(self.m)
        for lam in sub:
            for v in range(1 << self.t):
                if lam == 0 and v == 0:
                    continue
                yield int(lam), v

    def component(self, lam, v=0):
        """Truth table of Tr^m_1(lambda F(x)) + <v, extra bits>."""
        self.field.check(lam)
        if self.field.pow(lam, 1 << self.m) != lam:
            raise FieldError(f"selector {lam:#x} is not in F_(2^{self.m})")
        if not 0 <= v < (1 << self.t):
            raise FieldError(f"extra-bit selector {v:#x} out of range")
        if lam == 0 and v == 0:
            raise FieldError("zero selector does not name a component")
        if lam == 0:
            table = np.zeros(self.field.size, dtype=np.uint8)
        else:
            w = self.field.mul_elems(self.values, lam)
            acc = w.copy()
            for _ in range(self.m - 1):
                w = self.field.mul_elems(w, w)
                acc ^= w
            if np.any(acc > 1):
                raise FieldError("subfield trace left the prime field")
            table = acc.astype(np.uint8)
        if v:
            table = table ^ (np.bitwise_count((self.extra & v).astype(np.uint64)) & 1).astype(np.uint8)
        return BooleanFunction(self.field, table)

    def components(self):
        for lam, v in self.selectors():
            yield (lam, v), self.component(lam, v)

    # -- predicates ----------------------------------------------------------------

    def is_vectorial_bent(self):
        """All components bent?  Witness identifies the first failure."""
        if self.n % 2:
            raise FieldError("vectorial bentness needs even n")
        for (lam, v), comp in self.components():
            spectrum = comp.walsh()
            if not spectrum.is_bent:
                r = 1 << (self.n // 2)
                bad = np.nonzero(np.abs(spectrum.values) != r)[0]
                a = int(bad[0])
                return BentnessCheck(False, (lam, v), a, spectrum[a])
        if self.out_bits > self.n // 2:
            # vectorial bent (n,m)-functions exist only for m <= n/2
            raise VerificationError(
                f"certified a vectorial bent ({self.n},{self.out_bits})-function; "
                "this contradicts the m <= n/2 bound"
            )
        return BentnessCheck(True, None, None, None)

    def is_vectorial_plateaued(self):
        """Per-component amplitudes; ok iff every component is plateaued.

        Amplitudes may differ between components (the literal reading of
        the definition); the multiset is reported, not collapsed.
        """
        amplitudes = {}
        ok = True
        witness = None
        for (lam, v), comp in self.components():
            cls = comp.classification()
            amplitudes[(lam, v)] = cls.amplitude
            if not cls.plateaued_family and ok:
                ok = False
                witness = (lam, v)
        return PlateauedCheck(ok, amplitudes, witness)

    def bent_component_count(self):
        if self.n % 2:
            raise FieldError("bent-component counting needs even n")
        return sum(1 for _, comp in self.components() if comp.is_bent())

    # -- degree ----------------------------------------------------------------------

    def coordinate_functions(self):
        """Coordinates w.r.t. the least basis of F_{2^m}, then the extra bits."""
        basis = self.field.subfield_basis(self.m)
        combo_values = np.zeros(1 << self.m, dtype=np.int64)
        for i, b in enumerate(basis):
            half = 1 << i
            combo_values[half : 2 * half] = combo_values[:half] ^ b
        lookup = np.full(self.field.size, -1, dtype=np.int64)
        lookup[combo_values] = np.arange(1 << self.m)
        coords = lookup[self.values]
        if np.any(coords < 0):
            raise FieldError("output outside the declared subfield")
        out = []
        for j in range(self.m):
            out.append(BooleanFunction(self.field, ((coords >> j) & 1).astype(np.uint8)))
        for j in range(self.t):
            out.append(
                BooleanFunction(self.field, ((self.extra >> j) & 1).astype(np.uint8))
            )
        return out

    def degree(self):
        """Algebraic degree: max over components, cross-checked on coordinates."""
        comp_deg = max(comp.degree() for _, comp in self.components())
        coord_deg = max(f.degree() for f in self.coordinate_functions())
        if comp_deg != coord_deg:
            raise VerificationError(
                f"component degree {comp_deg} != coordinate degree {coord_deg}"
            )
        return comp_deg

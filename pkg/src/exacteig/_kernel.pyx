# cython: boundscheck=False, wraparound=False
"""Compiled scalar backend.

Same observable API as ``exacteig._kernel_py`` (the pure-Python twin), but
the reduced integer pairs are managed directly in cdef classes instead of
composing ``fractions.Fraction``. Values stay Python ints, so precision is
arbitrary; the win is avoiding per-operation Fraction construction and
method dispatch. Addition and multiplication use the classic cross-GCD
formulations that keep intermediate products small while preserving the
reduced normal form.
"""

from math import gcd

from exacteig.errors import DivisionByZero

BACKEND_NAME = "compiled"


cdef class Rational:
    """Exact rational number, always reduced with positive denominator."""

    cdef readonly object numerator
    cdef readonly object denominator

    def __init__(self, numerator=0, denominator=1):
        if isinstance(numerator, Rational):
            if not isinstance(denominator, int):
                raise TypeError(
                    f"denominator must be int, not {type(denominator).__name__}")
            if denominator == 0:
                raise DivisionByZero("rational with zero denominator")
            num = (<Rational>numerator).numerator
            den = (<Rational>numerator).denominator * denominator
        else:
            if not isinstance(numerator, int):
                raise TypeError(
                    f"numerator must be int, not {type(numerator).__name__}")
            if not isinstance(denominator, int):
                raise TypeError(
                    f"denominator must be int, not {type(denominator).__name__}")
            if denominator == 0:
                raise DivisionByZero("rational with zero denominator")
            num = numerator
            den = denominator
        g = gcd(num, den)
        if den < 0:
            g = -g
        self.numerator = num // g
        self.denominator = den // g

    @staticmethod
    cdef Rational _new(object num, object den):
        # Caller guarantees gcd(num, den) == 1 and den > 0.
        cdef Rational r = Rational.__new__(Rational)
        r.numerator = num
        r.denominator = den
        return r

    @staticmethod
    cdef Rational _make(object num, object den):
        # den != 0 but otherwise unnormalized.
        g = gcd(num, den)
        if den < 0:
            g = -g
        return Rational._new(num // g, den // g)

    cdef Rational _add_raw(self, object bn, object bd):
        cdef object an = self.numerator, ad = self.denominator
        g = gcd(ad, bd)
        if g == 1:
            return Rational._new(an * bd + bn * ad, ad * bd)
        s = ad // g
        t = an * (bd // g) + bn * s
        g2 = gcd(t, g)
        if g2 == 1:
            return Rational._new(t, s * bd)
        return Rational._new(t // g2, s * (bd // g2))

    cdef Rational _mul_raw(self, object bn, object bd):
        cdef object an = self.numerator, ad = self.denominator
        g1 = gcd(an, bd)
        if g1 > 1:
            an = an // g1
            bd = bd // g1
        g2 = gcd(bn, ad)
        if g2 > 1:
            bn = bn // g2
            ad = ad // g2
        return Rational._new(an * bn, bd * ad)

    cdef Rational _div_raw(self, object bn, object bd):
        # self / (bn/bd); bn may be negative or zero.
        if bn == 0:
            raise DivisionByZero("division by zero rational")
        cdef object an = self.numerator, ad = self.denominator
        g1 = gcd(an, bn)
        if g1 > 1:
            an = an // g1
            bn = bn // g1
        g2 = gcd(bd, ad)
        if g2 > 1:
            bd = bd // g2
            ad = ad // g2
        num = an * bd
        den = ad * bn
        if den < 0:
            return Rational._new(-num, -den)
        return Rational._new(num, den)

    def __add__(self, other):
        if isinstance(other, Rational):
            return self._add_raw((<Rational>other).numerator,
                                 (<Rational>other).denominator)
        if isinstance(other, int):
            return Rational._new(self.numerator + other * self.denominator,
                                 self.denominator)
        return NotImplemented

    def __radd__(self, other):
        if isinstance(other, int):
            return Rational._new(self.numerator + other * self.denominator,
                                 self.denominator)
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, Rational):
            return self._add_raw(-(<Rational>other).numerator,
                                 (<Rational>other).denominator)
        if isinstance(other, int):
            return Rational._new(self.numerator - other * self.denominator,
                                 self.denominator)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, int):
            return Rational._new(other * self.denominator - self.numerator,
                                 self.denominator)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, Rational):
            return self._mul_raw((<Rational>other).numerator,
                                 (<Rational>other).denominator)
        if isinstance(other, int):
            return self._mul_raw(other, 1)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self._mul_raw(other, 1)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, Rational):
            return self._div_raw((<Rational>other).numerator,
                                 (<Rational>other).denominator)
        if isinstance(other, int):
            return self._div_raw(other, 1)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, int):
            if self.numerator == 0:
                raise DivisionByZero("division by zero rational")
            return Rational._make(other * self.denominator, self.numerator)
        return NotImplemented

    def __pow__(self, exponent, modulo):
        if modulo is not None or not isinstance(exponent, int):
            return NotImplemented
        if exponent >= 0:
            return Rational._new(self.numerator ** exponent,
                                 self.denominator ** exponent)
        if self.numerator == 0:
            raise DivisionByZero("zero raised to a negative power")
        num = self.denominator ** (-exponent)
        den = self.numerator ** (-exponent)
        if den < 0:
            return Rational._new(-num, -den)
        return Rational._new(num, den)

    def __neg__(self):
        return Rational._new(-self.numerator, self.denominator)

    def __pos__(self):
        return self

    def __abs__(self):
        if self.numerator < 0:
            return Rational._new(-self.numerator, self.denominator)
        return self

    def __bool__(self):
        return self.numerator != 0

    def __eq__(self, other):
        if isinstance(other, Rational):
            return (self.numerator == (<Rational>other).numerator
                    and self.denominator == (<Rational>other).denominator)
        if isinstance(other, int):
            return self.denominator == 1 and self.numerator == other
        return NotImplemented

    def __lt__(self, other):
        if isinstance(other, Rational):
            return (self.numerator * (<Rational>other).denominator
                    < (<Rational>other).numerator * self.denominator)
        if isinstance(other, int):
            return self.numerator < other * self.denominator
        return NotImplemented

    def __le__(self, other):
        if isinstance(other, Rational):
            return (self.numerator * (<Rational>other).denominator
                    <= (<Rational>other).numerator * self.denominator)
        if isinstance(other, int):
            return self.numerator <= other * self.denominator
        return NotImplemented

    def __gt__(self, other):
        if isinstance(other, Rational):
            return (self.numerator * (<Rational>other).denominator
                    > (<Rational>other).numerator * self.denominator)
        if isinstance(other, int):
            return self.numerator > other * self.denominator
        return NotImplemented

    def __ge__(self, other):
        if isinstance(other, Rational):
            return (self.numerator * (<Rational>other).denominator
                    >= (<Rational>other).numerator * self.denominator)
        if isinstance(other, int):
            return self.numerator >= other * self.denominator
        return NotImplemented

    def __hash__(self):
        # Consistent with equality against plain ints.
        if self.denominator == 1:
            return hash(self.numerator)
        return hash((self.numerator, self.denominator))

    def __repr__(self):
        if self.denominator == 1:
            return str(self.numerator)
        return f"{self.numerator}/{self.denominator}"


cdef Rational _rat_zero = Rational._new(0, 1)
cdef Rational _rat_one = Rational._new(1, 1)


cdef Rational _to_rational(object value, str what):
    if isinstance(value, Rational):
        return <Rational>value
    if isinstance(value, int):
        return Rational._make(value, 1)
    raise TypeError(f"{what} must be int or Rational, not {type(value).__name__}")


cdef class GaussianRational:
    """Exact complex number with rational real and imaginary parts."""

    cdef readonly Rational re
    cdef readonly Rational im

    def __init__(self, re=0, im=0):
        self.re = _to_rational(re, "real part")
        self.im = _to_rational(im, "imaginary part")

    @staticmethod
    cdef GaussianRational _new(Rational re, Rational im):
        cdef GaussianRational z = GaussianRational.__new__(GaussianRational)
        z.re = re
        z.im = im
        return z

    cpdef GaussianRational conjugate(self):
        return GaussianRational._new(self.re, Rational._new(-self.im.numerator,
                                                            self.im.denominator))

    cpdef bint is_real(self):
        return self.im.numerator == 0

    cdef GaussianRational _coerce(self, object other):
        if isinstance(other, GaussianRational):
            return <GaussianRational>other
        if isinstance(other, int):
            return GaussianRational._new(Rational._make(other, 1), _rat_zero)
        if isinstance(other, Rational):
            return GaussianRational._new(<Rational>other, _rat_zero)
        return None

    def __add__(self, other):
        cdef GaussianRational w = self._coerce(other)
        if w is None:
            return NotImplemented
        return GaussianRational._new(
            self.re._add_raw(w.re.numerator, w.re.denominator),
            self.im._add_raw(w.im.numerator, w.im.denominator))

    def __radd__(self, other):
        return self.__add__(other)

    def __sub__(self, other):
        cdef GaussianRational w = self._coerce(other)
        if w is None:
            return NotImplemented
        return GaussianRational._new(
            self.re._add_raw(-w.re.numerator, w.re.denominator),
            self.im._add_raw(-w.im.numerator, w.im.denominator))

    def __rsub__(self, other):
        cdef GaussianRational w = self._coerce(other)
        if w is None:
            return NotImplemented
        return GaussianRational._new(
            w.re._add_raw(-self.re.numerator, self.re.denominator),
            w.im._add_raw(-self.im.numerator, self.im.denominator))

    def __mul__(self, other):
        cdef GaussianRational w = self._coerce(other)
        if w is None:
            return NotImplemented
        cdef Rational ac = self.re._mul_raw(w.re.numerator, w.re.denominator)
        cdef Rational bd = self.im._mul_raw(w.im.numerator, w.im.denominator)
        cdef Rational ad = self.re._mul_raw(w.im.numerator, w.im.denominator)
        cdef Rational bc = self.im._mul_raw(w.re.numerator, w.re.denominator)
        return GaussianRational._new(
            ac._add_raw(-bd.numerator, bd.denominator),
            ad._add_raw(bc.numerator, bc.denominator))

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other):
        cdef GaussianRational w = self._coerce(other)
        if w is None:
            return NotImplemented
        cdef Rational c = w.re, d = w.im
        cdef Rational cc = c._mul_raw(c.numerator, c.denominator)
        cdef Rational dd = d._mul_raw(d.numerator, d.denominator)
        cdef Rational norm = cc._add_raw(dd.numerator, dd.denominator)
        if norm.numerator == 0:
            raise DivisionByZero("division by zero scalar")
        cdef Rational a = self.re, b = self.im
        cdef Rational ac = a._mul_raw(c.numerator, c.denominator)
        cdef Rational bd = b._mul_raw(d.numerator, d.denominator)
        cdef Rational bc = b._mul_raw(c.numerator, c.denominator)
        cdef Rational ad = a._mul_raw(d.numerator, d.denominator)
        cdef Rational re_num = ac._add_raw(bd.numerator, bd.denominator)
        cdef Rational im_num = bc._add_raw(-ad.numerator, ad.denominator)
        return GaussianRational._new(
            re_num._div_raw(norm.numerator, norm.denominator),
            im_num._div_raw(norm.numerator, norm.denominator))

    def __rtruediv__(self, other):
        cdef GaussianRational w = self._coerce(other)
        if w is None:
            return NotImplemented
        return w.__truediv__(self)

    def __pow__(self, exponent, modulo):
        if modulo is not None or not isinstance(exponent, int):
            return NotImplemented
        cdef GaussianRational base
        cdef object k = exponent
        if k < 0:
            base = GaussianRational._new(_rat_one, _rat_zero).__truediv__(self)
            k = -k
        else:
            base = self
        cdef GaussianRational result = GaussianRational._new(_rat_one, _rat_zero)
        while k:
            if k & 1:
                result = result.__mul__(base)
            base = base.__mul__(base)
            k >>= 1
        return result

    def __neg__(self):
        return GaussianRational._new(
            Rational._new(-self.re.numerator, self.re.denominator),
            Rational._new(-self.im.numerator, self.im.denominator))

    def __pos__(self):
        return self

    def __bool__(self):
        return self.re.numerator != 0 or self.im.numerator != 0

    def __eq__(self, other):
        cdef GaussianRational w = self._coerce(other)
        if w is None:
            return NotImplemented
        return (self.re.numerator == w.re.numerator
                and self.re.denominator == w.re.denominator
                and self.im.numerator == w.im.numerator
                and self.im.denominator == w.im.denominator)

    def __hash__(self):
        # Consistent with equality against Rational and int when im == 0.
        if self.im.numerator == 0:
            return hash(self.re)
        return hash((self.re.numerator, self.re.denominator,
                     self.im.numerator, self.im.denominator))

    def __repr__(self):
        if self.im.numerator == 0:
            return repr(self.re)
        sign = "+" if self.im.numerator > 0 else "-"
        return f"({self.re!r}{sign}{abs(self.im)!r}i)"

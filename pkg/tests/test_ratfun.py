import json
import random
from fractions import Fraction

import pytest

from igusazeta.errors import DivisionByZero, PoleAtZero
from igusazeta.exactpoly import IntPoly
from igusazeta.ratfun import RationalFunction

RF = RationalFunction


def rand_rf(rng):
    while True:
        den = IntPoly([rng.randint(-5, 5) for _ in range(rng.randint(1, 4))])
        if not den.is_zero:
            break
    num = IntPoly([rng.randint(-5, 5) for _ in range(rng.randint(1, 4))])
    return RF(num, den)


class TestCanonicalForm:
    def test_reduction(self):
        # (1 - t^2) / (1 - t) reduces to 1 + t
        r = RF(IntPoly([1, 0, -1]), IntPoly([1, -1]))
        assert r == RF(IntPoly([1, 1]))

    def test_joint_content(self):
        r = RF(IntPoly([2, 2]), IntPoly([4]))
        assert (r.num.coeffs, r.den.coeffs) == ((1, 1), (2,))

    def test_low_coefficient_sign(self):
        r = RF(IntPoly([1]), IntPoly([-2, 1]))
        assert r.den.coeffs == (2, -1)
        assert r.num.coeffs == (-1,)

    def test_idempotent(self):
        rng = random.Random(5)
        for _ in range(100):
            r = rand_rf(rng)
            again = RF(r.num, r.den)
            assert again == r

    def test_zero(self):
        r = RF(IntPoly(), IntPoly([3, 1]))
        assert r.is_zero
        assert r.den == IntPoly([1])

    def test_zero_denominator_rejected(self):
        with pytest.raises(DivisionByZero):
            RF(IntPoly([1]), IntPoly())


class TestArithmetic:
    def test_add_cancels(self):
        one_minus_t = IntPoly([1, -1])
        a = RF(IntPoly([1]), one_minus_t)
        b = RF(IntPoly([0, -1]), one_minus_t)
        assert a + b == RF.one()

    def test_add_identity(self):
        a = RF(IntPoly([2]), IntPoly([2, -1]))
        assert a + RF.zero() == a

    def test_add_cross(self):
        a = RF(IntPoly([1]), IntPoly([2, -1]))
        b = RF(IntPoly([1]), IntPoly([2, 1]))
        assert a + b == RF(IntPoly([4]), IntPoly([4, 0, -1]))

    def test_mul_inverse(self):
        t = RF(IntPoly([0, 1]))
        inv = RF(IntPoly([1]), IntPoly([0, 1]))
        assert t * inv == RF.one()

    def test_div_polynomial_quotient(self):
        a = RF(IntPoly([1, 0, -1]))
        b = RF(IntPoly([1, -1]))
        assert a / b == RF(IntPoly([1, 1]))

    def test_div_by_zero(self):
        with pytest.raises(DivisionByZero):
            RF.one() / RF.zero()

    def test_scale_normalization(self):
        r = RF(IntPoly([3, 1]), IntPoly([3, 0, -1]))
        s = r.scale(Fraction(1, 3))
        assert s.num.coeffs == (3, 1)
        assert s.den.coeffs == (9, 0, -3)

    def test_int_operands(self):
        a = RF(IntPoly([1]), IntPoly([1, -1]))
        assert 1 - (1 - RF(IntPoly([0, 1]))) * a == RF.zero() + 0


class TestSeries:
    def test_geometric(self):
        r = RF(IntPoly([1]), IntPoly([1, -1]))
        assert r.series(3) == [1, 1, 1, 1]

    def test_geometric_halves(self):
        r = RF(IntPoly([2]), IntPoly([2, -1]))
        assert r.series(3) == [1, Fraction(1, 2), Fraction(1, 4), Fraction(1, 8)]

    def test_even_odd_split(self):
        r = RF(IntPoly([2, 1]), IntPoly([2, 0, -1]))
        assert r.series(4) == [
            1,
            Fraction(1, 2),
            Fraction(1, 2),
            Fraction(1, 4),
            Fraction(1, 4),
        ]

    def test_pole_at_zero(self):
        r = RF(IntPoly([1]), IntPoly([0, 1]))
        with pytest.raises(PoleAtZero):
            r.series(2)

    def test_linearity(self):
        rng = random.Random(11)
        for _ in range(60):
            a, b = rand_rf(rng), rand_rf(rng)
            if a.den(0) == 0 or b.den(0) == 0:
                continue
            s = a + b
            if s.den(0) == 0:
                continue
            sa, sb, ss = a.series(8), b.series(8), s.series(8)
            assert ss == [x + y for x, y in zip(sa, sb)]

    def test_round_trip_with_denominator(self):
        rng = random.Random(13)
        for _ in range(60):
            r = rand_rf(rng)
            assert r * RF(r.den) == RF(r.num)


class TestSerialization:
    def test_text(self):
        r = RF(IntPoly([6]), IntPoly([7, -1]))
        assert r.to_text() == "(6) / (-t + 7)"

    def test_json_round_trip(self):
        rng = random.Random(17)
        for _ in range(50):
            r = rand_rf(rng)
            data = json.loads(json.dumps(r.to_json_dict()))
            back = RF.from_json_dict(data)
            assert back == r
            assert back.to_json_dict() == r.to_json_dict()

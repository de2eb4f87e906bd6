import random
import unittest

from src.endostar.algebra import StarAlgebra
from src.endostar.groups import FreeShift, ShiftZ, Times2
from src.endostar.semigroup import EMPTY_IDEAL, EnvElement, Semigroup, SemigroupElement
from src.endostar.testing import AlgebraAssertionsMixin


class TestSemigroup(unittest.TestCase):

    def setUp(self):
        self.group = ShiftZ()
        self.semigroup = Semigroup(self.group)
        self.e = self.group.identity

    def test_multiplication(self):
        """Test (g,n)(h,m) = (g phi^n(h), n+m)"""

        S = self.semigroup
        p = SemigroupElement(((0, 1),), 1)
        q = SemigroupElement(((0, 2),), 0)
        self.assertEqual(SemigroupElement(((0, 1), (1, 2)), 1), S.s_mul(p, q))
        one = SemigroupElement(self.e, 1)
        self.assertEqual(SemigroupElement(self.e, 2), S.s_mul(one, one))

    def test_natural_exponent(self):
        """Test semigroup elements need n >= 0"""

        with self.assertRaises(ValueError):
            SemigroupElement(self.e, -1)

    def test_common_left_multiple(self):
        """Test the explicit pair and its common product"""

        S, group = self.semigroup, self.group
        g, h = ((0, 1),), ((1, -2),)
        p, q = SemigroupElement(g, 1), SemigroupElement(h, 2)
        cp, cq = S.common_left_multiple(p, q)
        self.assertEqual(SemigroupElement(group.phi_pow(group.invert(g), 2), 2), cp)
        self.assertEqual(SemigroupElement(group.phi(group.invert(h)), 1), cq)
        self.assertEqual(SemigroupElement(self.e, 3), S.s_mul(cp, p))
        self.assertEqual(S.s_mul(cp, p), S.s_mul(cq, q))

    def test_common_left_multiple_special_cases(self):
        """Test equal elements and the pair (e,0), (e,5)"""

        S = self.semigroup
        p = SemigroupElement(((0, 1),), 2)
        self.assertEqual((S.unit, S.unit), S.common_left_multiple(p, p))
        cp, cq = S.common_left_multiple(S.unit, SemigroupElement(self.e, 5))
        self.assertEqual(SemigroupElement(self.e, 5), cp)
        self.assertEqual(SemigroupElement(self.e, 0), cq)

    def test_cancellative(self):
        """Test left and right cancellation on random samples"""

        for group in (ShiftZ(), FreeShift(), Times2()):
            S = Semigroup(group)
            rng = random.Random(group.id)
            for _ in range(300):
                p, q, r = (
                    SemigroupElement(group.random_element(rng, 1), rng.randint(0, 3))
                    for _ in range(3)
                )
                if q != r:
                    self.assertNotEqual(S.s_mul(p, q), S.s_mul(p, r))
                    self.assertNotEqual(S.s_mul(q, p), S.s_mul(r, p))
                cp, cq = S.common_left_multiple(p, q)
                self.assertEqual(S.s_mul(cp, p), S.s_mul(cq, q))


class TestEnvelopingGroup(unittest.TestCase):

    def setUp(self):
        self.group = ShiftZ()
        self.semigroup = Semigroup(self.group)
        self.e = self.group.identity

    def test_normalize(self):
        """Test (phi(h), level 1) is identified with (h, level 0)"""

        S = self.semigroup
        h = ((0, 3),)
        self.assertEqual(EnvElement(h, 0, 4), S.env_normalize(EnvElement(self.group.phi(h), 1, 4)))
        self.assertEqual(EnvElement(((0, 3),), 2, 0), S.env_normalize(EnvElement(((0, 3),), 2, 0)))

    def test_embedding_is_homomorphism(self):
        """Test embed(p) embed(q) = embed(pq) and injectivity on samples"""

        S = self.semigroup
        rng = random.Random("embed")
        for _ in range(300):
            p, q = (
                SemigroupElement(self.group.random_element(rng, 2), rng.randint(0, 3))
                for _ in range(2)
            )
            self.assertEqual(S.embed(S.s_mul(p, q)), S.env_mul(S.embed(p), S.embed(q)))
            self.assertEqual(p == q, S.embed(p) == S.embed(q))

    def test_inverse(self):
        """Test x^-1 x = 1 = x x^-1"""

        S = self.semigroup
        rng = random.Random("inverse")
        for _ in range(300):
            x = S.env_normalize(
                EnvElement(self.group.random_element(rng, 2), rng.randint(0, 3), rng.randint(-3, 3))
            )
            self.assertEqual(S.env_identity, S.env_mul(S.env_inv(x), x))
            self.assertEqual(S.env_identity, S.env_mul(x, S.env_inv(x)))

    def test_factor(self):
        """Test x = embed(p)^-1 embed(q) for the returned pair"""

        S = self.semigroup
        self.assertEqual((S.unit, S.unit), S.env_factor(S.env_identity))
        g = ((0, 1),)
        p, q = S.env_factor(EnvElement(g, 2, -1))
        self.assertEqual(SemigroupElement(self.group.invert(g), 2), p)
        self.assertEqual(SemigroupElement(self.e, 1), q)
        rng = random.Random("factor")
        for _ in range(300):
            x = S.env_normalize(
                EnvElement(self.group.random_element(rng, 2), rng.randint(0, 3), rng.randint(-3, 3))
            )
            p, q = S.env_factor(x)
            self.assertEqual(x, S.env_mul(S.env_inv(S.embed(p)), S.embed(q)))


class TestIdeals(AlgebraAssertionsMixin, unittest.TestCase):

    def setUp(self):
        self.group = ShiftZ()
        self.semigroup = Semigroup(self.group)
        self.e = self.group.identity

    def test_intersection(self):
        """Test nested and disjoint principal ideals"""

        S = self.semigroup
        one, two = SemigroupElement(self.e, 1), SemigroupElement(self.e, 2)
        self.assertEqual(S.principal(two), S.ideal_intersect(S.principal(one), S.principal(two)))
        shifted = S.principal(SemigroupElement(((0, 1),), 0))
        self.assertEqual(shifted, S.ideal_intersect(shifted, S.whole()))
        disjoint = S.ideal_intersect(
            S.principal(SemigroupElement(((0, 1),), 1)), S.principal(one)
        )
        self.assertIs(EMPTY_IDEAL, disjoint)
        self.assertIs(EMPTY_IDEAL, S.ideal_intersect(EMPTY_IDEAL, S.whole()))

    def test_preimage(self):
        """Test p^-1 I for the whole ideal, a deeper ideal and a disjoint one"""

        S = self.semigroup
        one = SemigroupElement(self.e, 1)
        self.assertEqual(S.whole(), S.ideal_preimage(one, S.whole()))
        deeper = S.principal(SemigroupElement(((1, 2),), 3))
        self.assertEqual(
            S.principal(SemigroupElement(((0, 2),), 2)), S.ideal_preimage(one, deeper)
        )
        self.assertIs(
            EMPTY_IDEAL,
            S.ideal_preimage(one, S.principal(SemigroupElement(((0, 1),), 1))),
        )

    def test_against_ball(self):
        """Test the closed forms against membership on a finite ball"""

        for group in (ShiftZ(), Times2()):
            S = Semigroup(group)
            points = group.window(indices=2, bound=1) if group.id == "shift-z" else group.window(bound=4)
            ball = [SemigroupElement(x, n) for n in range(4) for x in points]
            generators = [
                SemigroupElement(g, n)
                for n in range(3)
                for g in (group.identity, *group.walk_generators())
            ]
            for p in generators:
                first = S.principal(p)
                for q in generators:
                    second = S.principal(q)
                    meet = S.ideal_intersect(first, second)
                    pre = S.ideal_preimage(p, second)
                    for z in ball:
                        self.assertEqual(
                            S.ideal_contains(first, z) and S.ideal_contains(second, z),
                            S.ideal_contains(meet, z),
                        )
                        self.assertEqual(
                            S.ideal_contains(second, S.s_mul(p, z)), S.ideal_contains(pre, z)
                        )

    def test_projections(self):
        """Test the isometries and range projections of ideals"""

        S = self.semigroup
        algebra = StarAlgebra(self.group)
        self.assertAlgebraEqual(algebra, algebra.one(), S.li_generators(algebra, S.unit))
        one = S.principal(SemigroupElement(self.e, 1))
        self.assertAlgebraEqual(algebra, algebra.e(self.group.image(1)), S.li_ideal_projection(algebra, one))
        self.assertFalse(S.li_ideal_projection(algebra, EMPTY_IDEAL))


if __name__ == "__main__":
    unittest.main()

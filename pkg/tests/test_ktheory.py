import random
import unittest

from src.endostar.ktheory import (
    CoeffGroup,
    FinSeq,
    adversarial_samples,
    cokernel_class,
    kernel_probe,
    one_minus_sigma,
    shift,
    six_term_summary,
    solve_one_minus_sigma,
    stage,
    stage_values,
)


class TestCoeffGroup(unittest.TestCase):

    def test_reduction(self):
        """Test torsion coordinates are reduced and free ones are not"""

        coeff = CoeffGroup(2, (3,))
        self.assertEqual((5, -1, 1), coeff.element([5, -1, 4]))
        self.assertEqual((0, 0, 0), coeff.add((1, 2, 2), (-1, -2, 1)))
        self.assertEqual((-1, 0, 2), coeff.neg((1, 0, 1)))

    def test_names(self):
        """Test the printed form of a few groups"""

        self.assertEqual("Z", str(CoeffGroup()))
        self.assertEqual("Z^2 + Z/3", str(CoeffGroup(2, (3,))))
        self.assertEqual("0", str(CoeffGroup(0)))

    def test_validation(self):
        """Test negative ranks, small orders and wrong widths"""

        with self.assertRaises(ValueError):
            CoeffGroup(-1)
        with self.assertRaises(ValueError):
            CoeffGroup(1, (1,))
        with self.assertRaises(ValueError):
            CoeffGroup(1).element([1, 2])


class TestShift(unittest.TestCase):

    def setUp(self):
        self.coeff = CoeffGroup()

    def seq(self, *values):
        return FinSeq.of(self.coeff, enumerate((v,) for v in values))

    def test_one_minus_sigma(self):
        """Test (a,0,...) -> (a,-a), (a,a) -> (a,0,-a) and 0 -> 0"""

        self.assertEqual(self.seq(3, -3), one_minus_sigma(self.seq(3)))
        self.assertEqual(self.seq(3, 0, -3), one_minus_sigma(self.seq(3, 3)))
        self.assertFalse(one_minus_sigma(self.seq()))

    def test_zeros_are_not_stored(self):
        """Test cancelling entries leave nothing behind"""

        x = FinSeq.of(self.coeff, [(2, (1,)), (2, (-1,))])
        self.assertFalse(x)
        self.assertEqual(0, x.length)
        self.assertEqual(3, self.seq(1, 0, 4).length)

    def test_shift(self):
        """Test the shift moves every entry one place right"""

        self.assertEqual(FinSeq.of(self.coeff, {1: (2,), 3: (5,)}), shift(self.seq(2, 0, 5)))

    def test_cokernel_class(self):
        """Test the class is the sum of coordinates"""

        self.assertEqual((0,), cokernel_class(self.seq(4, -4)))
        self.assertEqual((7,), cokernel_class(self.seq(3, 4)))

    def test_solve(self):
        """Test partial sums recover x and off-image vectors are refused"""

        x = self.seq(1, -2, 0, 5)
        self.assertEqual(x, solve_one_minus_sigma(one_minus_sigma(x)))
        self.assertIsNone(solve_one_minus_sigma(self.seq(1)))

    def test_stages(self):
        """Test the inclusion of A^n and its inverse"""

        coeff = CoeffGroup(1, (2,))
        x = stage(coeff, [(1, 1), (0, 0), (2, 0)])
        self.assertEqual(3, x.length)
        self.assertEqual(((1, 1), (0, 0), (2, 0), (0, 0)), stage_values(x, 4))
        with self.assertRaises(ValueError):
            stage_values(x, 2)

    def test_negative_index(self):
        """Test sequences are indexed by natural numbers"""

        with self.assertRaises(ValueError):
            FinSeq.of(self.coeff, {-1: (1,)})


class TestProbe(unittest.TestCase):

    def test_adversarial_samples(self):
        """Test the fixed samples for Z and for the trivial group"""

        self.assertEqual(7, len(adversarial_samples(CoeffGroup())))
        self.assertEqual(11, len(adversarial_samples(CoeffGroup(0, (2, 3)))))
        self.assertEqual([FinSeq(CoeffGroup(0))], adversarial_samples(CoeffGroup(0)))

    def test_probe_passes(self):
        """Test no kernel and exactness on several coefficient groups"""

        for coeff in (CoeffGroup(), CoeffGroup(2, (3,)), CoeffGroup(0), CoeffGroup(0, (4,))):
            with self.subTest(coeff=str(coeff)):
                report = kernel_probe(coeff, random.Random(0), samples=300)
                self.assertTrue(report.passed)
                self.assertEqual(300 + len(adversarial_samples(coeff)), report.samples)

    def test_summary(self):
        """Test the report for Z"""

        summary = six_term_summary(CoeffGroup(), random.Random(1), samples=200)
        self.assertEqual("Z", summary["cokernel"])
        self.assertEqual("0", summary["kernel"])
        self.assertEqual(207, summary["samples"])
        self.assertTrue(summary["passed"])
        self.assertEqual({"rank": 1, "torsion": []}, summary["coefficients"])


if __name__ == "__main__":
    unittest.main()

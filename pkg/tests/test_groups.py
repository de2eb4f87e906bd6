import itertools
import random
import unittest

from src.endostar.groups import (
    FreeShift,
    IndexKind,
    ShiftZ,
    Times2,
    check_image_hypothesis,
    get_instance,
    purity_probe,
)


class TestShiftZ(unittest.TestCase):

    def setUp(self):
        self.group = ShiftZ(("G", "H"))

    def test_phi_pow(self):
        """Test the index shift applied twice and zero times"""

        self.assertEqual(((2, 1),), self.group.phi_pow(((0, 1),), 2))
        self.assertEqual(((0, 1), (3, -2)), self.group.phi_pow(((0, 1), (3, -2)), 0))

    def test_phi_preimage(self):
        """Test shifting back, and that support at index 0 has no preimage"""

        self.assertEqual(((0, 5),), self.group.phi_preimage(((2, 5),), 2))
        self.assertIsNone(self.group.phi_preimage(((0, 1),), 1))
        self.assertEqual((), self.group.phi_preimage((), 4))

    def test_membership(self):
        """Test membership in images and in the even subgroup"""

        group = self.group
        self.assertTrue(group.member(((1, 3),), group.image(1)))
        self.assertFalse(group.member(((0, 3),), group.image(1)))
        self.assertTrue(group.member(((0, 2),), group.image(0, "H")))
        self.assertFalse(group.member(((0, 1),), group.image(0, "H")))
        for L in (group.whole(), group.image(3), group.image(2, "H")):
            self.assertTrue(group.member(group.identity, L))

    def test_canonical_lattice(self):
        """Test that equal subgroups get equal descriptors"""

        group = self.group
        self.assertEqual(group.image(1), group.meet(group.image(1), group.whole()))
        self.assertEqual(group.image(1), group.meet(group.image(1), group.image(0, "H")))
        self.assertEqual(group.image(2), group.lattice([(1, "G"), (2, "G")]))

    def test_index_class(self):
        """Test one, finite and infinite index classes"""

        group = self.group
        self.assertIs(IndexKind.INFINITE, group.index_class(group.image(1), group.image(2)).kind)
        finite = group.index_class(group.whole(), group.image(0, "H"))
        self.assertIs(IndexKind.FINITE, finite.kind)
        self.assertEqual(2, finite.value)
        self.assertIs(IndexKind.ONE, group.index_class(group.image(1), group.image(1)).kind)
        self.assertEqual("finite(2)", str(finite))

    def test_coset_meet(self):
        """Test intersections of cosets of images and of H"""

        group = self.group
        self.assertEqual((), group.coset_meet((), group.image(1), (), group.image(2)))
        self.assertIsNone(group.coset_meet(((0, 1),), group.image(1), (), group.image(1)))
        self.assertEqual(
            ((0, 2),), group.coset_meet(((0, 2),), group.image(1), (), group.image(0, "H"))
        )

    def test_transversal(self):
        """Test representatives of G modulo H"""

        group = self.group
        self.assertEqual([(), ((0, 1),)], group.transversal(group.whole(), group.image(0, "H")))

    def test_window_size(self):
        """Test the default window holds every vector on indices 0..2 with values in -2..2"""

        window = self.group.window(indices=3, bound=2)
        self.assertEqual(125, len(window))
        self.assertEqual(125, len(set(window)))
        self.assertEqual(self.group.identity, window[0])

    def test_enumeration_order(self):
        """Test the enumeration starts with e, then ±1 at index 0"""

        elements = self.group.iter_elements()
        self.assertEqual([(), ((0, 1),), ((0, -1),)], [next(elements) for _ in range(3)])

    def test_text_and_json(self):
        """Test the element syntax and the JSON form"""

        group = self.group
        x = group.parse_element("0:1, 1:2")
        self.assertEqual(((0, 1), (1, 2)), x)
        self.assertEqual("0:1,1:2", group.format_element(x))
        self.assertEqual("e", group.format_element(group.identity))
        self.assertEqual(x, group.from_json(group.to_json(x)))
        with self.assertRaises(ValueError):
            group.parse_element("-1:2")
        with self.assertRaises(ValueError):
            group.parse_element("1")


class TestFreeShift(unittest.TestCase):

    def setUp(self):
        self.group = FreeShift()

    def test_phi(self):
        """Test the generator relabeling"""

        self.assertEqual(((2, 1), (3, -1)), self.group.phi(((1, 1), (2, -1))))

    def test_reduction(self):
        """Test that a word times its inverse is e"""

        x = ((1, 1), (2, -1), (1, 1))
        self.assertEqual((), self.group.multiply(x, self.group.invert(x)))

    def test_coset_rep(self):
        """Test that the suffix inside the subgroup is dropped"""

        group = self.group
        self.assertEqual(((1, 1),), group.coset_rep(((1, 1), (2, 1), (3, -1)), group.image(1)))
        self.assertEqual((), group.coset_rep(((2, 1),), group.image(1)))

    def test_index_is_one_or_infinite(self):
        """Test the images form a chain of infinite index"""

        group = self.group
        self.assertIs(IndexKind.INFINITE, group.index_class(group.image(1), group.image(2)).kind)
        self.assertIs(IndexKind.ONE, group.index_class(group.image(2), group.image(1)).kind)

    def test_text(self):
        """Test the element syntax"""

        group = self.group
        x = group.parse_element("a1 a2^-1")
        self.assertEqual(((1, 1), (2, -1)), x)
        self.assertEqual("a1 a2^-1", group.format_element(x))
        with self.assertRaises(ValueError):
            group.parse_element("b1")

    def test_window_contains_identity(self):
        """Test the window holds e and reduced words only"""

        window = self.group.window(length=2, index=2)
        self.assertEqual((), window[0])
        self.assertNotIn(((1, 1), (1, -1)), window)


class TestTimes2(unittest.TestCase):

    def setUp(self):
        self.group = Times2(("G", "T"))

    def test_phi_preimage(self):
        """Test halving"""

        self.assertEqual(3, self.group.phi_preimage(6, 1))
        self.assertIsNone(self.group.phi_preimage(6, 2))

    def test_window(self):
        """Test |x| <= 8 gives 17 elements"""

        self.assertEqual(17, len(self.group.window(bound=8)))

    def test_finite_index(self):
        """Test every pair of lattice subgroups has finite index"""

        group = self.group
        index = group.index_class(group.whole(), group.image(3))
        self.assertEqual(8, index.value)
        self.assertEqual(3, group.index_class(group.whole(), group.image(0, "T")).value)

    def test_coset_meet(self):
        """Test the Chinese remainder intersection"""

        group = self.group
        self.assertEqual(4, group.coset_meet(0, group.image(2), 1, group.image(0, "T")))
        self.assertIsNone(group.coset_meet(1, group.image(1), 0, group.image(1)))

    def test_unknown_base(self):
        """Test a base the instance does not offer"""

        with self.assertRaises(ValueError):
            Times2(("G", "H"))


class TestInstanceInvariants(unittest.TestCase):

    def setUp(self):
        self.instances = (ShiftZ(("G", "H")), FreeShift(), Times2(("G", "T")))

    def test_phi_is_injective_homomorphism(self):
        """Test phi on 1000 random pairs per instance"""

        for group in self.instances:
            rng = random.Random(group.id)
            for _ in range(1000):
                g, h = group.random_element(rng), group.random_element(rng)
                with self.subTest(instance=group.id, g=g, h=h):
                    self.assertEqual(
                        group.multiply(group.phi(g), group.phi(h)),
                        group.phi(group.multiply(g, h)),
                    )
                    self.assertEqual(g == h, group.phi(g) == group.phi(h))

    def test_preimage_inverts_phi_pow(self):
        """Test phi_preimage(phi_pow(g, n), n) = g for n <= 6"""

        for group in self.instances:
            rng = random.Random(group.id)
            for _ in range(1000):
                g, n = group.random_element(rng), rng.randint(0, 6)
                self.assertEqual(g, group.phi_preimage(group.phi_pow(g, n), n), (group.id, g, n))

    def test_membership_matches_preimage(self):
        """Test g in phi^n(G) exactly when the preimage exists, on both sides"""

        for group in self.instances:
            rng = random.Random(group.id)
            inside = outside = 0
            for _ in range(1000):
                g, h, n = group.random_element(rng), group.random_element(rng), rng.randint(0, 6)
                for x in (g, group.phi_pow(h, n), group.multiply(g, group.phi_pow(h, n))):
                    member = group.member(x, group.image(n))
                    self.assertEqual(member, group.phi_preimage(x, n) is not None, (group.id, x, n))
                    inside += member
                    outside += not member
            self.assertGreater(inside, 0)
            self.assertGreater(outside, 0)

    def test_enumeration(self):
        """Test the enumeration starts at e and never repeats"""

        for group in self.instances:
            first = list(itertools.islice(group.iter_elements(), 2000))
            self.assertEqual(group.identity, first[0])
            self.assertEqual(len(first), len(set(first)), group.id)


class TestProbes(unittest.TestCase):

    def test_shift_z_purity(self):
        """Test no nonzero vector of the window lies in every image up to 5"""

        group = ShiftZ()
        report = purity_probe(group, 5, group.window(indices=3, bound=2))
        self.assertTrue(report.passed)

    def test_times2_purity(self):
        """Test only 0 in |x| <= 100 is divisible by 2^10"""

        group = Times2()
        report = purity_probe(group, 10, range(-100, 101))
        self.assertTrue(report.passed)
        self.assertIn((0, 10), report.survival)
        self.assertIn((64, 6), report.survival)

    def test_probe_depth(self):
        """Test the probe needs a positive depth"""

        with self.assertRaises(ValueError):
            purity_probe(ShiftZ(), 0, [()])

    def test_image_hypothesis(self):
        """Test the least k with phi^k(G) inside every base subgroup"""

        self.assertEqual(0, check_image_hypothesis(ShiftZ()))
        self.assertEqual(1, check_image_hypothesis(ShiftZ(("G", "H"))))
        with self.assertLogs("src.endostar.groups.probes", level="WARNING"):
            self.assertIsNone(check_image_hypothesis(Times2(("G", "T")), 8))

    def test_get_instance(self):
        """Test lookup by id and the error for unknown ids"""

        self.assertIsInstance(get_instance("free-shift"), FreeShift)
        self.assertEqual(("G", "H"), get_instance("shift-z", ["H"]).bases)
        with self.assertRaises(ValueError):
            get_instance("nope")

import unittest

from src.endostar.errors import EmptyDomainError, WitnessNotFoundError
from src.endostar.groups import IndexKind, ShiftZ, Times2
from src.endostar.lattice import BasicCoset, CosetLattice, VirtualIndicator
from src.endostar.testing import AlgebraAssertionsMixin


class TestCosetLattice(AlgebraAssertionsMixin, unittest.TestCase):

    def setUp(self):
        self.group = ShiftZ(("G", "H"))
        self.lattice = CosetLattice(self.group)
        self.G = self.group.whole()
        self.H = self.group.image(0, "H")
        self.phi1 = self.group.image(1)
        self.phi2 = self.group.image(2)
        self.points = self.group.window(indices=3, bound=2)

    def coset(self, rep, L):
        return self.lattice.coset(rep, L)

    def test_intersect(self):
        """Test nested, disjoint and finite-index intersections"""

        lattice = self.lattice
        self.assertEqual(
            self.coset((), self.phi2),
            lattice.intersect(self.coset((), self.phi1), self.coset((), self.phi2)),
        )
        self.assertIsNone(
            lattice.intersect(self.coset(((0, 1),), self.phi1), self.coset((), self.phi1))
        )
        meet = lattice.intersect(self.coset(((0, 2),), self.phi1), self.coset((), self.H))
        self.assertEqual(BasicCoset(((0, 2),), self.phi1), meet)

    def test_intersection_matches_points(self):
        """Test set intersections against membership on the window"""

        lattice = self.lattice
        cosets = [
            self.coset(rep, L)
            for rep in ((), ((0, 1),), ((0, 2), (1, -1)))
            for L in (self.G, self.H, self.phi1, self.phi2)
        ]
        for c in cosets:
            for d in cosets:
                meet = lattice.intersect(c, d)
                for x in self.points:
                    both = lattice.contains(c, x) and lattice.contains(d, x)
                    self.assertEqual(both, meet is not None and lattice.contains(meet, x))

    def test_translate_and_phi(self):
        """Test translation there and back, and the image of a coset"""

        lattice, group = self.lattice, self.group
        c = self.coset((), self.phi1)
        g = ((0, 3), (1, 1))
        self.assertEqual(c, lattice.translate(lattice.translate(c, g), group.invert(g)))
        self.assertEqual(
            BasicCoset(((1, 1),), self.phi2), lattice.phi(self.coset(((0, 1),), self.phi1), 1)
        )
        self.assertEqual(c, lattice.phi(c, 0))

    def test_translated_family(self):
        """Test G splits into the two cosets of H"""

        family = self.lattice.translated_family(self.lattice.whole(), self.H)
        self.assertEqual([BasicCoset((), self.H), BasicCoset(((0, 1),), self.H)], family)

    def test_orthogonalize_disjoint(self):
        """Test disjoint cosets are their own atoms"""

        cosets = [self.coset((), self.phi1), self.coset(((0, 1),), self.phi1)]
        atoms = self.lattice.orthogonalize(cosets)
        self.assertEqual(2, len(atoms))
        self.assertEqual([frozenset({0}), frozenset({1})], [a.support for a in atoms])
        for atom, c in zip(atoms, cosets):
            self.assertEqual(VirtualIndicator.of({c: 1}), atom.indicator)

    def test_orthogonalize_nested(self):
        """Test {G, phi(G)} gives phi(G) and G minus phi(G)"""

        G, phi1 = self.lattice.whole(), self.coset((), self.phi1)
        atoms = self.lattice.orthogonalize([G, phi1])
        self.assertEqual(2, len(atoms))
        outside, inside = atoms
        self.assertEqual(frozenset({0}), outside.support)
        self.assertEqual(VirtualIndicator.of({G: 1, phi1: -1}), outside.indicator)
        self.assertEqual(VirtualIndicator.of({phi1: 1}), inside.indicator)
        self.assertEqual(((0, 1),), outside.witness)

    def test_orthogonalize_three(self):
        """Test {G, H, phi(G)} gives three atoms partitioning G"""

        lattice = self.lattice
        cosets = [lattice.whole(), self.coset((), self.H), self.coset((), self.phi1)]
        atoms = lattice.orthogonalize(cosets)
        self.assertEqual(3, len(atoms))
        for x in self.points:
            values = [lattice.evaluate(a.indicator, x) for a in atoms]
            self.assertEqual(1, sum(values))
            self.assertTrue(all(v in (0, 1) for v in values))
            (hit,) = [a for a, v in zip(atoms, values) if v]
            expected = {i for i, c in enumerate(cosets) if lattice.contains(c, x)}
            self.assertEqual(expected, set(hit.support))
        for atom in atoms:
            self.assertEqual(1, lattice.evaluate(atom.indicator, atom.witness))

    def test_orthogonalize_needs_input(self):
        """Test an empty family is refused"""

        with self.assertRaises(ValueError):
            self.lattice.orthogonalize([])

    def test_witness_outside(self):
        """Test the first enumerated witnesses"""

        lattice, whole = self.lattice, self.lattice.whole()
        self.assertEqual((), lattice.witness_outside(whole, []))
        self.assertEqual(((0, 1),), lattice.witness_outside(whole, [self.coset((), self.phi1)]))
        excluded = [self.coset((), self.phi1), self.coset(((0, 1),), self.phi1)]
        self.assertEqual(((0, -1),), lattice.witness_outside(whole, excluded))

    def test_witness_errors(self):
        """Test an empty domain and an exhausted cap"""

        with self.assertRaises(EmptyDomainError):
            self.lattice.witness_outside(None, [])
        capped = CosetLattice(self.group, witness_cap=3)
        with self.assertRaises(WitnessNotFoundError):
            capped.witness_outside(capped.whole(), [capped.whole()])

    def test_cell_witness_empty(self):
        """Test a cell covered by finitely many cosets"""

        lattice = self.lattice
        parts = lattice.translated_family(lattice.whole(), self.H)
        self.assertIsNone(lattice.cell_witness(lattice.whole(), parts))
        witness = lattice.cell_witness(lattice.whole(), parts[:1])
        self.assertEqual(((0, 1),), witness)

    def test_cell_indicator(self):
        """Test inclusion-exclusion against membership"""

        lattice = self.lattice
        base = lattice.whole()
        excluded = [self.coset((), self.H), self.coset((), self.phi1)]
        indicator = lattice.cell_indicator(base, excluded)
        for x in self.points:
            inside = not any(lattice.contains(d, x) for d in excluded)
            self.assertEqual(int(inside), lattice.evaluate(indicator, x))

    def test_refine_family(self):
        """Test refinement leaves index classes one or infinite"""

        lattice = self.lattice
        self.assertEqual([self.phi1, self.phi2], lattice.refine_family([self.phi1, self.phi2]))
        self.assertEqual([self.H, self.H], lattice.refine_family([self.G, self.H]))
        self.assertEqual([self.phi1], lattice.refine_family([self.phi1]))
        refined = lattice.refine_family([self.G, self.H, self.phi1, self.phi2])
        for L in refined:
            for M in refined:
                self.assertIsNot(IndexKind.FINITE, lattice.index_class(L, M).kind)

    def test_refine_family_times2(self):
        """Test everything collapses to the smallest member when indices are finite"""

        group = Times2(("G", "T"))
        lattice = CosetLattice(group)
        family = [group.whole(), group.image(1), group.image(0, "T")]
        refined = lattice.refine_family(family)
        smallest = group.meet(group.image(1), group.image(0, "T"))
        self.assertEqual([smallest] * 3, refined)

    def test_indicator_arithmetic(self):
        """Test virtual indicators cancel and compare pointwise"""

        lattice = self.lattice
        G, phi1 = lattice.whole(), self.coset((), self.phi1)
        a = VirtualIndicator.of({G: 1, phi1: -1})
        self.assertFalse(a - a)
        self.assertIndicatorsEqual(
            lattice, a + VirtualIndicator.of({phi1: 1}), VirtualIndicator.of({G: 1}), self.points
        )
        self.assertEqual((G, phi1), a.cosets)


if __name__ == "__main__":
    unittest.main()

"""
Tests for finite categories, sieves and carriers.
"""

import pytest

from sieveforge.category import (
    CatPoint,
    Flavor,
    Sieve,
    arrow_id,
    build_category,
    carrier_of,
    category_points,
    designated_terminal,
    generated_sieve,
    is_sieve,
    maximal_sieve,
    poset_category,
    principal_sieve,
    pullback_sieve,
    sieves_on,
    terminal_objects,
)
from sieveforge.core.exceptions import (
    AssociativityViolation,
    BadCodomain,
    BudgetExceeded,
    CompositionTypeError,
    IdentityViolation,
    MissingComposite,
    NoTerminalObject,
    OwnerMismatch,
    UnknownObject,
)

X = frozenset({"x", "a"})
Y = frozenset({"y", "b"})


class TestBuildCategory:
    """Test category construction and certification."""

    def test_twopt(self, twopt):
        """Test the two-point category."""
        assert twopt.objects == ("1", "C")
        assert [m.id for m in twopt.morphisms] == ["id_1", "id_C", "x", "y", "t", "a", "b"]
        assert twopt.compose("t", "x") == "id_1"
        assert twopt.compose("x", "t") == "a"
        assert twopt.compose("x", "x") is None
        assert twopt.hom("1", "C") == ["x", "y"]
        assert twopt.arrows_into("1") == ["id_1", "t"]

    def test_factorization(self, twopt):
        """Test factoring through a morphism."""
        assert twopt.factors_through("a", "x")
        assert twopt.factors_through("x", "a")
        assert not twopt.factors_through("b", "x")

    def test_identities_are_filled_in(self):
        """Test that identity composites need not be declared."""
        category = build_category(["A", "B"], [("f", "A", "B")])
        assert category.compose("f", "id_A") == "f"
        assert category.compose("id_B", "f") == "f"

    def test_custom_identity(self):
        """Test declared identity ids."""
        category = build_category(["A"], [], identities={"A": "one"})
        assert category.identity == {"A": "one"}
        assert category.compose("one", "one") == "one"

    def test_missing_composite(self):
        """Test that every composable pair needs a composite."""
        with pytest.raises(MissingComposite) as exc_info:
            build_category(["A", "B"], [("f", "A", "B"), ("g", "B", "A")])
        assert len(exc_info.value.witness["morphisms"]) == 2

    def test_not_composable(self):
        """Test that an entry for a non-composable pair is rejected."""
        with pytest.raises(CompositionTypeError):
            build_category(["A", "B"], [("f", "A", "B")], [("f", "f", "f")])

    def test_mistyped_composite(self):
        """Test that a composite of the wrong type is rejected."""
        with pytest.raises(CompositionTypeError):
            build_category(
                ["A", "B"], [("f", "A", "B"), ("g", "A", "A")], [("f", "g", "id_B")]
            )

    def test_identity_violation(self):
        """Test that declared composites must respect identities."""
        with pytest.raises(IdentityViolation):
            build_category(
                ["A", "B"], [("f", "A", "B"), ("g", "A", "B")], [("f", "id_A", "g")]
            )

    def test_associativity_violation(self):
        """Test a non-associative composition table."""
        table = [("e", "e", "e"), ("e", "f", "e"), ("f", "e", "f"), ("f", "f", "e")]
        with pytest.raises(AssociativityViolation):
            build_category(["A"], [("e", "A", "A"), ("f", "A", "A")], table)

    def test_unknown_object(self):
        """Test morphisms on undeclared objects."""
        with pytest.raises(UnknownObject):
            build_category(["A"], [("f", "A", "Z")])


class TestPosetCategory:
    """Test the category of a lattice."""

    def test_chain(self, chain3):
        """Test morphisms and forced composition."""
        category = poset_category(chain3)
        assert category.objects == ("0", "1", "2")
        assert len(category.morphisms) == 6
        assert category.compose(arrow_id("1", "2"), arrow_id("0", "1")) == "0->2"
        assert category.lattice is chain3

    def test_cached(self, chain3):
        """Test one category per lattice."""
        assert poset_category(chain3) is poset_category(chain3)

    def test_points(self, chain3):
        """Test that only the top has points."""
        category = poset_category(chain3)
        assert designated_terminal(category) == "2"
        assert category_points(category, "2") == [CatPoint("2->2", "2", "2")]
        assert category_points(category, "1") == []

    def test_sieves_are_down_sets(self, chain3):
        """Test sieves of a poset category."""
        category = poset_category(chain3)
        assert is_sieve(category, "2", ["0->2", "1->2"]).passed
        assert not is_sieve(category, "2", ["1->2"]).passed


class TestPoints:
    """Test terminal objects and categorical points."""

    def test_twopt_points(self, twopt):
        """Test the two points of C."""
        assert terminal_objects(twopt) == ["1"]
        points = category_points(twopt, "C")
        assert [p.label for p in points] == ["x", "y"]
        assert all(p.terminal == "1" and p.target == "C" for p in points)

    def test_no_terminal(self):
        """Test a discrete category has no terminal object."""
        category = build_category(["A", "B"], [])
        with pytest.raises(NoTerminalObject):
            category_points(category, "A")


class TestCategorySieves:
    """Test sieves of a finite category."""

    def test_enumeration(self, twopt):
        """Test all five sieves on C in canonical order."""
        sieves = sieves_on(twopt, "C")
        assert [s.members for s in sieves] == [
            frozenset(),
            X,
            Y,
            X | Y,
            frozenset({"id_C", "x", "y", "a", "b"}),
        ]
        assert len(sieves_on(twopt, "1")) == 2

    def test_principal_and_generated(self, twopt):
        """Test principal and generated sieves."""
        assert principal_sieve(twopt, "C", "x") == Sieve("C", X)
        assert principal_sieve(twopt, "C", "a") == Sieve("C", X)
        assert generated_sieve(twopt, "C", ["x", "y"]) == Sieve("C", X | Y)
        assert maximal_sieve(twopt, "1") == Sieve("1", frozenset({"id_1", "t"}))

    def test_bad_codomain(self, twopt):
        """Test generators must land in the owner."""
        with pytest.raises(BadCodomain):
            generated_sieve(twopt, "C", ["t"])

    def test_sieve_check(self, twopt):
        """Test codomain and right-ideal failures."""
        assert is_sieve(twopt, "C", ["x", "a"]).passed
        assert is_sieve(twopt, "C", ["x"]).axiom == "right-ideal"
        assert is_sieve(twopt, "C", ["t"]).axiom == "codomain"

    def test_pullback(self, twopt):
        """Test restriction along the two points."""
        assert pullback_sieve(twopt, "x", Sieve("C", X)) == Sieve("1", frozenset({"id_1", "t"}))
        assert pullback_sieve(twopt, "y", Sieve("C", X)) == Sieve("1", frozenset())
        with pytest.raises(OwnerMismatch):
            pullback_sieve(twopt, "t", Sieve("C", X))

    def test_budget(self, twopt):
        """Test that enumeration honours its limit."""
        with pytest.raises(BudgetExceeded):
            sieves_on(twopt, "C", limit=3)

    def test_render(self, twopt):
        """Test canonical rendering."""
        carrier = carrier_of(twopt)
        assert carrier.render(Sieve("C", X)) == ["x", "a"]
        assert carrier.flavor is Flavor.CATEGORY
        assert carrier_of(twopt) is carrier


class TestLocaleSieves:
    """Test the locale reading of a lattice."""

    def test_enumeration(self, chain3):
        """Test sieves are the down-sets of ↓k."""
        sieves = sieves_on(chain3, "2")
        assert [set(s.members) for s in sieves] == [set(), {"0"}, {"0", "1"}, {"0", "1", "2"}]
        assert carrier_of(chain3).flavor is Flavor.LOCALE

    def test_principal_and_pullback(self, chain3):
        """Test principal sieves and restriction along m <= k."""
        assert principal_sieve(chain3, "2", "1") == Sieve("2", frozenset({"0", "1"}))
        full = maximal_sieve(chain3, "2")
        assert pullback_sieve(chain3, "1", full) == Sieve("1", frozenset({"0", "1"}))

    def test_not_a_down_set(self, square):
        """Test right-ideal failure in the locale reading."""
        assert is_sieve(square, "⊤", ["a"]).axiom == "right-ideal"
        assert is_sieve(square, "a", ["b"]).axiom == "codomain"


class TestSieveValue:
    """Test the sieve value type."""

    def test_lattice_operations(self):
        """Test intersection, union and inclusion."""
        first, second = Sieve("C", X), Sieve("C", X | Y)
        assert first & second == first
        assert first | Sieve("C", Y) == second
        assert first <= second
        assert second >= first
        assert first.meets(second)
        assert Sieve("C", frozenset()).is_empty

    def test_owner_mismatch(self):
        """Test sieves on different objects do not combine."""
        with pytest.raises(OwnerMismatch):
            Sieve("C", X) & Sieve("1", frozenset({"t"}))

    def test_unknown_structure(self):
        """Test carriers only wrap categories and lattices."""
        with pytest.raises(TypeError):
            carrier_of(42)

"""
Registry of executable laws.

Each law replays one stated invariant over its slice of the corpus and
returns a verdict with a replayable witness. Strict laws are library
contracts; the others are claims under test whose falsification is
reported without failing the suite.
"""

import itertools
import logging
from collections.abc import Callable, Iterable, Iterator
from dataclasses import dataclass
from functools import cached_property, reduce

import numpy as np
import sympy

from sieveforge.category.carrier import Carrier, carrier_of, is_sieve
from sieveforge.category.category import arrow_id, category_points, poset_category
from sieveforge.category.sieves import Sieve
from sieveforge.config.models import LawSettings
from sieveforge.convergence.compactness import (
    CompactnessMethod,
    compactness_report,
    tychonoff_check,
)
from sieveforge.convergence.limits import (
    closure,
    cluster_points,
    converges,
    limit_points,
    sup_converges,
)
from sieveforge.convergence.neighborhoods import g_neighborhoods, neighborhood_system
from sieveforge.convergence.points import is_frame_homomorphism, locale_points, points_of
from sieveforge.core.exceptions import ImproperFilter, UnresolvedReference
from sieveforge.core.verdict import Verdict
from sieveforge.coverage.assignment import CoverAssignment
from sieveforge.coverage.topology import (
    Comparison,
    TopologyKind,
    check_topology,
    compare_assignments,
    standard_assignment,
    sup_topology,
    topology_is_filter,
)
from sieveforge.filters.axioms import FilterCertificate, check_basis, check_filter
from sieveforge.filters.generation import (
    filter_from_basis,
    filter_generators,
    is_finer,
    meet_filters,
    saturate_subbase,
)
from sieveforge.filters.products import product_corollary_check
from sieveforge.filters.ultrafilters import (
    enumerate_filters,
    enumerate_ultrafilters,
    extend_to_ultrafilter,
    is_ultrafilter,
)
from sieveforge.functors.functor import image_sieve
from sieveforge.functors.image_laws import compactness_preservation, image_law_report
from sieveforge.laws import corpus
from sieveforge.model.format import (
    BlockKind,
    assignment_document,
    category_document,
    lattice_document,
    parse_documents,
    parse_model,
    serialize_model,
)
from sieveforge.order.element_sets import (
    closure_down,
    down_sets,
    is_down_set,
    is_up_set,
    principal_down,
    principal_up,
)
from sieveforge.order.lattice import FiniteLattice, divisor_lattice, is_boolean, is_frame

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LawOutcome:
    """
    Verdict of a law together with the number of instances drawn.

    ``skipped`` counts drawn instances that were not eligible for the
    statement; they are included in ``cases``.
    """

    verdict: Verdict
    cases: int
    skipped: int = 0


class LawContext:
    """
    Shared inputs for one law-suite invocation.

    Random families are generated lazily and cached, so a single law can be
    replayed without building the whole corpus.
    """

    def __init__(self, settings: LawSettings, budget: int | None = None):
        self.settings = settings
        self.seed = settings.seed
        self.budget = budget

    def rng(self, salt: int) -> np.random.Generator:
        """Per-law generator; independent of which other laws run."""
        return np.random.default_rng([self.seed, salt])

    @cached_property
    def random_locales(self) -> list[FiniteLattice]:
        return corpus.random_lattices(
            self.seed,
            self.settings.random_locales,
            self.settings.max_random_elements,
            frames_only=True,
        )

    @cached_property
    def random_posets(self) -> list[FiniteLattice]:
        return corpus.random_lattices(
            self.seed + 1, self.settings.random_posets, self.settings.max_random_elements
        )

    @cached_property
    def random_filters(self) -> list[FilterCertificate]:
        """
        One saturated random subbase per random locale and poset category,
        followed by every filter on TWOPT and CHAIN3.
        """
        rng = self.rng(0)
        structures = [*self.random_locales, *(poset_category(p) for p in self.random_posets)]
        found: list[FilterCertificate] = []
        for structure in structures:
            carrier = carrier_of(structure)
            table = {
                obj: frozenset([_pick(rng, [s for s in carrier.sieves_on(obj) if not s.is_empty])])
                for obj in carrier.objects
            }
            try:
                found.append(saturate_subbase(CoverAssignment(carrier, table), self.budget))
            except ImproperFilter:
                continue
        for name in ("TWOPT", "CHAIN3"):
            found.extend(enumerate_filters(corpus.fixture(name), self.budget))
        logger.debug(f"Random filter pool holds {len(found)} filters")
        return found


@dataclass(frozen=True)
class Law:
    """A registered law."""

    name: str
    group: str
    strict: bool
    statement: str
    check: Callable[[LawContext], LawOutcome]


LAWS: dict[str, Law] = {}


def law(name: str, group: str, statement: str, strict: bool = True):
    """Register the decorated function as a law."""

    def register(check: Callable[[LawContext], LawOutcome]) -> Callable[[LawContext], LawOutcome]:
        LAWS[name] = Law(name, group, strict, statement, check)
        return check

    return register


def select_laws(names: Iterable[str] | None = None) -> list[Law]:
    """
    Laws in registration order, optionally restricted to ``names``.

    Raises:
        UnresolvedReference: If a name is not registered
    """
    if not names:
        return list(LAWS.values())
    selected = []
    for name in names:
        if name not in LAWS:
            raise UnresolvedReference(f"Unknown law {name!r}", details=", ".join(LAWS))
        selected.append(LAWS[name])
    return selected


def _pick(rng: np.random.Generator, items: list):
    return items[int(rng.integers(len(items)))]


def _subsets(items: tuple[str, ...]) -> Iterator[frozenset[str]]:
    for size in range(len(items) + 1):
        for combo in itertools.combinations(items, size):
            yield frozenset(combo)


def _render(carrier: Carrier, sieves: Iterable[Sieve]) -> list[list[str]]:
    return [carrier.render(s) for s in sieves]


def _labels(points) -> list[str]:
    return [p.label for p in points]


def _sites(*names: str) -> list[CoverAssignment]:
    return [corpus.site(n) for n in names]


CONVERGENCE_SITES = (*corpus.CATEGORY_SITES, "CHAIN3_TRIVIAL", "CHAIN3_DENSE")


def _small_sites() -> list[CoverAssignment]:
    """Standard assignments on lattices with at most four elements, plus TWOPT."""
    sites = [
        standard_assignment(kind, corpus.lattice(name))
        for name in ("CHAIN3", "SQ")
        for kind in TopologyKind
    ]
    sites.extend(sup_topology(corpus.lattice(name)) for name in ("CHAIN3", "SQ"))
    sites.extend(_sites(*corpus.CATEGORY_SITES))
    return sites


# order


@law("principal-sets", "order", "↓x is a down-set and ↑x an up-set")
def _principal_sets(ctx: LawContext) -> LawOutcome:
    cases = 0
    for lattice in [*corpus.fixture_lattices(), *ctx.random_posets]:
        for x in lattice.elements:
            cases += 1
            if not is_down_set(lattice, principal_down(lattice, x).members):
                return LawOutcome(Verdict.fail("principal-down", lattice=lattice.name, element=x), cases)
            if not is_up_set(lattice, principal_up(lattice, x).members):
                return LawOutcome(Verdict.fail("principal-up", lattice=lattice.name, element=x), cases)
    return LawOutcome(Verdict.ok(), cases)


@law("closure-down-least", "order", "↓M is the least down-set containing M")
def _closure_down_least(ctx: LawContext) -> LawOutcome:
    cases = 0
    for lattice in corpus.fixture_lattices():
        downs = [d.members for d in down_sets(lattice)]
        for members in _subsets(lattice.elements):
            cases += 1
            expected = reduce(frozenset.intersection, [d for d in downs if members <= d])
            actual = closure_down(lattice, members).members
            if actual != expected:
                return LawOutcome(
                    Verdict.fail(
                        "least-down-set",
                        lattice=lattice.name,
                        members=list(lattice.canonical(members)),
                        closure=list(lattice.canonical(actual)),
                        expected=list(lattice.canonical(expected)),
                    ),
                    cases,
                )
    return LawOutcome(Verdict.ok(), cases)


def _squarefree(n: int) -> bool:
    return all(power == 1 for power in sympy.factorint(n).values())


@law("squarefree-boolean", "order", "D_n is Boolean iff n is squarefree")
def _squarefree_boolean(ctx: LawContext) -> LawOutcome:
    limit = ctx.settings.squarefree_limit
    for n in range(1, limit + 1):
        if is_boolean(divisor_lattice(n)) != _squarefree(n):
            return LawOutcome(Verdict.fail("squarefree", n=n, squarefree=_squarefree(n)), n)
    return LawOutcome(Verdict.ok(), limit)


@law("meet-join-tables", "order", "meet/join tables agree with glb/lub read off leq")
def _meet_join_tables(ctx: LawContext) -> LawOutcome:
    cases = 0
    for lattice in [*corpus.fixture_lattices(), *ctx.random_posets]:
        elements = lattice.elements
        for x, y in itertools.product(elements, repeat=2):
            cases += 1
            lower = [z for z in elements if lattice.le(z, x) and lattice.le(z, y)]
            upper = [z for z in elements if lattice.le(x, z) and lattice.le(y, z)]
            glb = [z for z in lower if all(lattice.le(w, z) for w in lower)]
            lub = [z for z in upper if all(lattice.le(z, w) for w in upper)]
            if glb != [lattice.meet(x, y)] or lub != [lattice.join(x, y)]:
                return LawOutcome(
                    Verdict.fail("bounds", lattice=lattice.name, elements=[x, y]), cases
                )
    return LawOutcome(Verdict.ok(), cases)


# category


def _pullback_carriers() -> list[Carrier]:
    return [
        carrier_of(corpus.fixture(name))
        for name in ("TWOPT", "POSET_CHAIN3", "CHAIN3", "SQ", "D12")
    ]


@law("pullback-algebra", "category", "h*(t_C) = t_D, h*(S∩R) = h*S ∩ h*R, h* monotone")
def _pullback_algebra(ctx: LawContext) -> LawOutcome:
    cases = 0
    for carrier in _pullback_carriers():
        for obj in carrier.objects:
            sieves = carrier.sieves_on(obj)
            for h in carrier.arrows_into(obj):
                domain = carrier.arrow_domain(h)
                cases += 1
                if carrier.pullback(h, carrier.maximal(obj)) != carrier.maximal(domain):
                    return LawOutcome(
                        Verdict.fail("maximal", carrier=carrier.name, morphism=h), cases
                    )
                for s, r in itertools.product(sieves, repeat=2):
                    cases += 1
                    meet = carrier.pullback(h, s & r)
                    if meet != carrier.pullback(h, s) & carrier.pullback(h, r):
                        return LawOutcome(
                            Verdict.fail(
                                "intersection",
                                carrier=carrier.name,
                                morphism=h,
                                sieves=_render(carrier, [s, r]),
                            ),
                            cases,
                        )
                    if s <= r and not carrier.pullback(h, s) <= carrier.pullback(h, r):
                        return LawOutcome(
                            Verdict.fail(
                                "monotone",
                                carrier=carrier.name,
                                morphism=h,
                                sieves=_render(carrier, [s, r]),
                            ),
                            cases,
                        )
    return LawOutcome(Verdict.ok(), cases)


@law("generated-closure", "category", "generated_sieve is extensive, monotone and idempotent")
def _generated_closure(ctx: LawContext) -> LawOutcome:
    cases = 0
    for carrier in _pullback_carriers():
        for obj in carrier.objects:
            arrows = carrier.arrows_into(obj)
            for generators in _subsets(arrows):
                cases += 1
                sieve = carrier.generated(obj, generators)
                data = {"carrier": carrier.name, "object": obj, "generators": carrier.ordered(generators)}
                if not generators <= sieve.members:
                    return LawOutcome(Verdict.fail("extensive", **data), cases)
                if carrier.generated(obj, sieve.members) != sieve:
                    return LawOutcome(Verdict.fail("idempotent", **data), cases)
                for extra in arrows:
                    if not sieve <= carrier.generated(obj, generators | {extra}):
                        return LawOutcome(Verdict.fail("monotone", extra=extra, **data), cases)
    return LawOutcome(Verdict.ok(), cases)


@law("poset-sieves", "category", "sieves of a poset category are the down-sets of ↓k")
def _poset_sieves(ctx: LawContext) -> LawOutcome:
    cases = 0
    for name in ("CHAIN3", "D12"):
        lattice = corpus.lattice(name)
        category = poset_category(lattice)
        for k in lattice.elements:
            for members in _subsets(lattice.below(k)):
                cases += 1
                arrows = {arrow_id(m, k) for m in members}
                if is_sieve(category, k, arrows).passed != is_down_set(lattice, members):
                    return LawOutcome(
                        Verdict.fail(
                            "down-set", lattice=name, element=k, members=list(lattice.canonical(members))
                        ),
                        cases,
                    )
    return LawOutcome(Verdict.ok(), cases)


@law("twopt-points", "category", "TWOPT has exactly two distinct points of C")
def _twopt_points(ctx: LawContext) -> LawOutcome:
    points = category_points(corpus.category("TWOPT"), "C")
    labels = _labels(points)
    if len(points) != 2 or len(set(labels)) != 2:
        return LawOutcome(Verdict.fail("points", points=labels), 1)
    return LawOutcome(Verdict.ok(), 1)


# coverage


@law("standard-topologies", "coverage", "standard and sup assignments are topologies")
def _standard_topologies(ctx: LawContext) -> LawOutcome:
    cases = 0
    for lattice in [*corpus.fixture_lattices(), *ctx.random_locales[:20]]:
        assignments = [standard_assignment(kind, lattice) for kind in TopologyKind]
        if is_frame(lattice).passed:
            assignments.append(sup_topology(lattice))
        for assignment in assignments:
            cases += 1
            verdict = check_topology(assignment)
            if not verdict.passed:
                return LawOutcome(
                    Verdict.fail(
                        "topology",
                        lattice=lattice.name,
                        assignment=assignment.name,
                        violation=verdict.witness.to_dict(),
                    ),
                    cases,
                )
    return LawOutcome(Verdict.ok(), cases)


@law("comparison-order", "coverage", "compare_assignments is a partial order")
def _comparison_order(ctx: LawContext) -> LawOutcome:
    lattice = corpus.lattice("D12")
    family = [standard_assignment(kind, lattice) for kind in TopologyKind]
    family.append(sup_topology(lattice))
    below = {Comparison.LESS, Comparison.EQUAL}
    cases = 0
    for a, b in itertools.product(family, repeat=2):
        cases += 1
        forward, backward = compare_assignments(a, b), compare_assignments(b, a)
        names = [a.name, b.name]
        if a is b and forward is not Comparison.EQUAL:
            return LawOutcome(Verdict.fail("reflexive", assignments=names), cases)
        if forward is Comparison.EQUAL and a != b:
            return LawOutcome(Verdict.fail("antisymmetric", assignments=names), cases)
        if (forward is Comparison.LESS) != (backward is Comparison.GREATER):
            return LawOutcome(Verdict.fail("converse", assignments=names), cases)
        for c in family:
            if forward in below and compare_assignments(b, c) in below:
                if compare_assignments(a, c) not in below:
                    return LawOutcome(Verdict.fail("transitive", assignments=[*names, c.name]), cases)
    return LawOutcome(Verdict.ok(), cases)


@law("topology-filter-agreement", "coverage", "topology_is_filter agrees with check_filter")
def _topology_filter_agreement(ctx: LawContext) -> LawOutcome:
    candidates = [
        standard_assignment(kind, lattice)
        for lattice in corpus.fixture_lattices()
        for kind in TopologyKind
    ]
    candidates.extend(sup_topology(lattice) for lattice in corpus.fixture_frames())
    candidates.extend(_sites(*corpus.CATEGORY_SITES))
    candidates.append(standard_assignment(TopologyKind.ATOMIC, corpus.category("TWOPT")))
    cases = 0
    for topology in candidates:
        if not check_topology(topology).passed:
            continue
        cases += 1
        if topology_is_filter(topology).passed != check_filter(topology).passed:
            return LawOutcome(
                Verdict.fail("agreement", carrier=topology.carrier.name, assignment=topology.name),
                cases,
            )
    return LawOutcome(Verdict.ok(), cases)


# filters


@law("filter-is-topology", "filters", "every filter is a Grothendieck topology", strict=False)
def _filter_is_topology(ctx: LawContext) -> LawOutcome:
    cases = 0
    for candidate in ctx.random_filters:
        cases += 1
        verdict = check_topology(candidate.assignment)
        if not verdict.passed:
            return LawOutcome(
                Verdict.fail(
                    "filter-topology",
                    filter=candidate.to_dict(),
                    violation=verdict.witness.to_dict(),
                ),
                cases,
            )
    return LawOutcome(Verdict.ok(), cases)


@law("subtopology-filter", "filters", "a topology J ≼ F is a filter")
def _subtopology_filter(ctx: LawContext) -> LawOutcome:
    rng = ctx.rng(1)
    pool = ctx.random_filters
    cases = skipped = 0
    for _ in range(ctx.settings.pruning_pairs if pool else 0):
        fine = _pick(rng, pool)
        carrier = fine.carrier
        generators = filter_generators(fine)
        table = {}
        for obj in carrier.objects:
            coarser = [s for s in carrier.sieves_on(obj) if generators[obj] <= s]
            pruned = _pick(rng, coarser)
            table[obj] = frozenset(s for s in coarser if pruned <= s)
        topology = CoverAssignment(carrier, table, "pruned")
        cases += 1
        if not check_topology(topology).passed:
            skipped += 1
            continue
        if compare_assignments(topology, fine.assignment) not in (Comparison.LESS, Comparison.EQUAL):
            return LawOutcome(Verdict.fail("pruning", topology=topology.to_dict()), cases, skipped)
        verdict = check_filter(topology)
        if not verdict.passed:
            return LawOutcome(
                Verdict.fail(
                    "subtopology",
                    topology=topology.to_dict(),
                    filter=fine.to_dict(),
                    violation=verdict.witness.to_dict(),
                ),
                cases,
                skipped,
            )
    return LawOutcome(Verdict.ok(), cases, skipped)


@law("ultrafilter-primality", "filters", "S ∪ T ∈ U(C) implies S or T in U(C)", strict=False)
def _ultrafilter_primality(ctx: LawContext) -> LawOutcome:
    cases = 0
    for name in ("CHAIN3", "TWOPT"):
        for ultrafilter in enumerate_ultrafilters(corpus.fixture(name), ctx.budget):
            carrier = ultrafilter.carrier
            for obj in carrier.objects:
                sieves = carrier.sieves_on(obj)
                for size in (2, 3):
                    for family in itertools.combinations(sieves, size):
                        cases += 1
                        union = reduce(lambda s, r: s | r, family)
                        if union in ultrafilter[obj] and not any(s in ultrafilter[obj] for s in family):
                            return LawOutcome(
                                Verdict.fail(
                                    "primality",
                                    structure=name,
                                    object=obj,
                                    sieves=_render(carrier, family),
                                    ultrafilter=ultrafilter.to_dict(),
                                ),
                                cases,
                            )
    return LawOutcome(Verdict.ok(), cases)


@law("extend-ultrafilter", "filters", "extend_to_ultrafilter is finer and maximal")
def _extend_ultrafilter(ctx: LawContext) -> LawOutcome:
    cases = 0
    for candidate in enumerate_filters(corpus.lattice("CHAIN3"), ctx.budget):
        cases += 1
        extended = extend_to_ultrafilter(candidate, ctx.budget)
        if not is_finer(candidate, extended) or not is_ultrafilter(extended, ctx.budget).passed:
            return LawOutcome(
                Verdict.fail("extension", filter=candidate.to_dict(), result=extended.to_dict()),
                cases,
            )
    return LawOutcome(Verdict.ok(), cases)


@law("basis-oracle", "filters", "filter_from_basis equals the superset closure of the basis")
def _basis_oracle(ctx: LawContext) -> LawOutcome:
    rng = ctx.rng(2)
    carrier = carrier_of(corpus.lattice("CHAIN3"))
    cases = 0
    for _ in range(ctx.settings.basis_samples):
        table = {}
        for obj in carrier.objects:
            nonempty = [s for s in carrier.sieves_on(obj) if not s.is_empty]
            mask = rng.integers(0, 2, size=len(nonempty))
            chosen = [s for s, keep in zip(nonempty, mask) if keep] or [_pick(rng, nonempty)]
            table[obj] = frozenset(chosen)
        basis = CoverAssignment(carrier, table, "sample")
        if not check_basis(basis).passed:
            continue
        cases += 1
        generated = filter_from_basis(basis)
        for obj in carrier.objects:
            expected = {s for s in carrier.sieves_on(obj) if any(b <= s for b in basis[obj])}
            if generated[obj] != expected:
                return LawOutcome(
                    Verdict.fail("superset-closure", basis=basis.to_dict(), object=obj), cases
                )
    return LawOutcome(Verdict.ok(), cases)


@law("ultrafilter-oracle", "filters", "ultrafilters are the maximal enumerated filters")
def _ultrafilter_oracle(ctx: LawContext) -> LawOutcome:
    structure = corpus.lattice("CHAIN3")
    filters = enumerate_filters(structure, ctx.budget)
    maximal = {
        f.assignment
        for f in filters
        if not any(g.assignment != f.assignment and is_finer(f, g) for g in filters)
    }
    found = {u.assignment for u in enumerate_ultrafilters(structure, ctx.budget)}
    if found != maximal:
        return LawOutcome(
            Verdict.fail(
                "maximal-filters",
                ultrafilters=[a.to_dict() for a in found],
                maximal=[a.to_dict() for a in maximal],
            ),
            len(filters),
        )
    return LawOutcome(Verdict.ok(), len(filters))


@law("meet-glb", "filters", "meet_filters is the greatest lower bound")
def _meet_glb(ctx: LawContext) -> LawOutcome:
    filters = enumerate_filters(corpus.lattice("CHAIN3"), ctx.budget)
    cases = 0
    for first, second in itertools.combinations_with_replacement(filters, 2):
        cases += 1
        meet = meet_filters([first, second])
        pair = [first.to_dict(), second.to_dict()]
        if not (is_finer(meet, first) and is_finer(meet, second)):
            return LawOutcome(Verdict.fail("lower-bound", filters=pair), cases)
        for lower in filters:
            if is_finer(lower, first) and is_finer(lower, second) and not is_finer(lower, meet):
                return LawOutcome(
                    Verdict.fail("greatest", filters=pair, lower=lower.to_dict()), cases
                )
    return LawOutcome(Verdict.ok(), cases)


@law("least-saturation", "filters", "saturate_subbase is the least filter containing the subbase")
def _least_saturation(ctx: LawContext) -> LawOutcome:
    structure = corpus.lattice("CHAIN3")
    carrier = carrier_of(structure)
    filters = enumerate_filters(structure, ctx.budget)
    choices = [
        [frozenset()] + [frozenset([s]) for s in carrier.sieves_on(obj) if not s.is_empty]
        for obj in carrier.objects
    ]
    cases = 0
    for combo in itertools.product(*choices):
        cases += 1
        subbase = CoverAssignment(carrier, dict(zip(carrier.objects, combo)), "subbase")
        saturated = saturate_subbase(subbase, ctx.budget)
        if not all(subbase[obj] <= saturated[obj] for obj in carrier.objects):
            return LawOutcome(Verdict.fail("contains-subbase", subbase=subbase.to_dict()), cases)
        for candidate in filters:
            contains = all(subbase[obj] <= candidate[obj] for obj in carrier.objects)
            if contains and not is_finer(saturated, candidate):
                return LawOutcome(
                    Verdict.fail("least", subbase=subbase.to_dict(), filter=candidate.to_dict()),
                    cases,
                )
    return LawOutcome(Verdict.ok(), cases)


@law("product-generation", "filters", "product basis and restricted families generate one filter")
def _product_generation(ctx: LawContext) -> LawOutcome:
    lattice = corpus.lattice("D12")
    families = [
        standard_assignment(TopologyKind.TRIVIAL, lattice),
        *enumerate_ultrafilters(lattice, ctx.budget),
    ]
    cases = 0
    for size in (1, 2):
        for targets in itertools.combinations(lattice.elements, size):
            for filters in itertools.product(families, repeat=size):
                cases += 1
                verdict = product_corollary_check(lattice, list(targets), list(filters))
                if not verdict.passed:
                    return LawOutcome(
                        Verdict.fail(
                            "product-generation",
                            targets=list(targets),
                            violation=verdict.witness.to_dict(),
                        ),
                        cases,
                    )
    return LawOutcome(Verdict.ok(), cases)


# convergence


@law("filtered-object", "convergence", "cover-neighborhood systems are filtered")
def _filtered_object(ctx: LawContext) -> LawOutcome:
    cases = 0
    for site in _sites(*corpus.CATEGORY_SITES, *corpus.LOCALE_SITES, *corpus.TYCHONOFF_SITES):
        for obj in site.objects:
            for point in points_of(site, obj):
                system = neighborhood_system(site, obj, point)
                if system.blind:
                    continue
                cases += 1
                if not system.filtered.passed:
                    return LawOutcome(
                        Verdict.fail("filtered", site=site.name, system=system.to_dict()), cases
                    )
    return LawOutcome(Verdict.ok(), cases)


def _convergence_corpus(ctx: LawContext):
    for site in _sites(*CONVERGENCE_SITES):
        yield site, enumerate_filters(site.carrier, ctx.budget)


@law("cluster-finer", "convergence", "p clusters F iff a finer filter converges to p", strict=False)
def _cluster_finer(ctx: LawContext) -> LawOutcome:
    cases = 0
    for site, filters in _convergence_corpus(ctx):
        for candidate in filters:
            for obj in site.objects:
                clusters = cluster_points(candidate, obj, site)
                for point in points_of(site, obj):
                    cases += 1
                    finer = [
                        g for g in filters if is_finer(candidate, g) and converges(g, obj, point, site)
                    ]
                    if (point in clusters) != bool(finer):
                        return LawOutcome(
                            Verdict.fail(
                                "cluster-finer",
                                site=site.name,
                                object=obj,
                                point=point.label,
                                cluster=point in clusters,
                                filter=candidate.to_dict(),
                            ),
                            cases,
                        )
    return LawOutcome(Verdict.ok(), cases)


@law("closure-filter", "convergence", "p ∈ cl(A) iff a filter with A converges to p", strict=False)
def _closure_filter(ctx: LawContext) -> LawOutcome:
    cases = 0
    for site, filters in _convergence_corpus(ctx):
        carrier = site.carrier
        for obj in site.objects:
            for sieve in carrier.sieves_on(obj):
                closed = closure(site, obj, sieve)
                for point in points_of(site, obj):
                    cases += 1
                    witnessed = any(
                        sieve in g[obj] and converges(g, obj, point, site) for g in filters
                    )
                    if (point in closed) != witnessed:
                        return LawOutcome(
                            Verdict.fail(
                                "closure-filter",
                                site=site.name,
                                object=obj,
                                sieve=carrier.render(sieve),
                                point=point.label,
                                in_closure=point in closed,
                            ),
                            cases,
                        )
    return LawOutcome(Verdict.ok(), cases)


@law("ultrafilter-limits", "convergence", "for ultrafilters limit points equal cluster points", strict=False)
def _ultrafilter_limits(ctx: LawContext) -> LawOutcome:
    cases = 0
    for site in _sites(*CONVERGENCE_SITES):
        for ultrafilter in enumerate_ultrafilters(site.carrier, ctx.budget):
            for obj in site.objects:
                cases += 1
                limits = _labels(limit_points(ultrafilter, obj, site))
                clusters = _labels(cluster_points(ultrafilter, obj, site))
                if limits != clusters:
                    return LawOutcome(
                        Verdict.fail(
                            "limit-cluster",
                            site=site.name,
                            object=obj,
                            limits=limits,
                            clusters=clusters,
                            ultrafilter=ultrafilter.to_dict(),
                        ),
                        cases,
                    )
    return LawOutcome(Verdict.ok(), cases)


def _empty_covering_sites() -> list[CoverAssignment]:
    """Locale sites on which ∅ covers some element."""
    sites = [standard_assignment(TopologyKind.DISCRETE, lattice) for lattice in corpus.fixture_frames()]
    sites.extend(sup_topology(lattice) for lattice in corpus.fixture_frames())
    return sites


@law("locale-degeneracy", "convergence", "locale G-neighborhoods at k are exactly J(k)")
def _locale_degeneracy(ctx: LawContext) -> LawOutcome:
    cases = 0
    sites = [*_sites(*corpus.LOCALE_SITES, *corpus.TYCHONOFF_SITES), *_empty_covering_sites()]
    for site in sites:
        for point in locale_points(site.carrier.structure):
            for k in site.carrier.structure.canonical(point.kernel):
                cases += 1
                if set(g_neighborhoods(site, k, point)) != set(site[k]):
                    return LawOutcome(
                        Verdict.fail(
                            "degeneracy",
                            site=site.name,
                            carrier=site.carrier.name,
                            element=k,
                            point=point.label,
                        ),
                        cases,
                    )
    return LawOutcome(Verdict.ok(), cases)


@law(
    "locale-filtered-empty-cover",
    "convergence",
    "cover-neighborhood systems are filtered on locale sites where ∅ covers",
    strict=False,
)
def _locale_filtered_empty_cover(ctx: LawContext) -> LawOutcome:
    cases = 0
    for site in _empty_covering_sites():
        for point in locale_points(site.carrier.structure):
            for k in site.carrier.structure.canonical(point.kernel):
                cases += 1
                system = neighborhood_system(site, k, point)
                if not system.filtered.passed:
                    return LawOutcome(
                        Verdict.fail(
                            "filtered",
                            site=site.name,
                            carrier=site.carrier.name,
                            system=system.to_dict(),
                        ),
                        cases,
                    )
    return LawOutcome(Verdict.ok(), cases)


@law("sup-convergence", "convergence", "sup_converges agrees with a direct join fold")
def _sup_convergence(ctx: LawContext) -> LawOutcome:
    cases = 0
    for lattice in corpus.fixture_frames():
        for candidate in enumerate_filters(lattice, ctx.budget):
            for c in lattice.elements:
                cases += 1
                expected = all(
                    reduce(lattice.join, s.members, lattice.bottom) == c for s in candidate[c]
                )
                if sup_converges(lattice, candidate, c) != expected:
                    return LawOutcome(
                        Verdict.fail(
                            "join-criterion",
                            lattice=lattice.name,
                            element=c,
                            expected=expected,
                            filter=candidate.to_dict(),
                        ),
                        cases,
                    )
    return LawOutcome(Verdict.ok(), cases)


@law("compactness-methods", "convergence", "ultrafilter and exhaustive quasi-compactness agree", strict=False)
def _compactness_methods(ctx: LawContext) -> LawOutcome:
    cases = 0
    for site in _small_sites():
        for obj in site.objects:
            cases += 1
            by_ultra = compactness_report(site, obj, CompactnessMethod.ULTRAFILTER, ctx.budget)
            by_search = compactness_report(site, obj, CompactnessMethod.EXHAUSTIVE, ctx.budget)
            if by_ultra.quasi_compact != by_search.quasi_compact:
                return LawOutcome(
                    Verdict.fail(
                        "method-agreement",
                        site=site.name,
                        carrier=site.carrier.name,
                        object=obj,
                        ultrafilter=by_ultra.to_dict(),
                        exhaustive=by_search.to_dict(),
                    ),
                    cases,
                )
    return LawOutcome(Verdict.ok(), cases)


@law(
    "ultrafilter-compactness",
    "convergence",
    "compact iff every ultrafilter has exactly one limit point",
    strict=False,
)
def _ultrafilter_compactness(ctx: LawContext) -> LawOutcome:
    cases = 0
    for site in _small_sites():
        ultrafilters = enumerate_ultrafilters(site.carrier, ctx.budget)
        for obj in site.objects:
            cases += 1
            report = compactness_report(site, obj, CompactnessMethod.ULTRAFILTER, ctx.budget)
            unique = all(len(limit_points(u, obj, site)) == 1 for u in ultrafilters)
            if report.compact != unique:
                return LawOutcome(
                    Verdict.fail(
                        "ultrafilter-convergence",
                        site=site.name,
                        carrier=site.carrier.name,
                        object=obj,
                        compact=report.compact,
                        unique_limits=unique,
                    ),
                    cases,
                )
    return LawOutcome(Verdict.ok(), cases)


@law("locale-tychonoff", "convergence", "meets of compact elements are compact", strict=False)
def _locale_tychonoff(ctx: LawContext) -> LawOutcome:
    cases = 0
    for site in _sites(*corpus.TYCHONOFF_SITES):
        compact = [
            k for k in site.objects if compactness_report(site, k, budget=ctx.budget).compact
        ]
        for pair in itertools.combinations(compact, 2):
            cases += 1
            verdict = tychonoff_check(site, list(pair), budget=ctx.budget)
            if not verdict.passed:
                return LawOutcome(
                    Verdict.fail(
                        "tychonoff", site=site.name, targets=list(pair), violation=verdict.witness.to_dict()
                    ),
                    cases,
                )
    return LawOutcome(Verdict.ok(), cases)


# functors


@law("image-sieve", "functors", "⟨F(R)⟩ is a sieve containing F(R), monotone in R")
def _image_sieve(ctx: LawContext) -> LawOutcome:
    cases = 0
    for name in ("SWAP", "IDENTITY", "COLLAPSE"):
        functor = corpus.functor(name)
        source, target = carrier_of(functor.source), carrier_of(functor.target)
        for obj in source.objects:
            sieves = source.sieves_on(obj)
            for sieve in sieves:
                cases += 1
                image = image_sieve(functor, sieve)
                data = {"functor": name, "object": obj, "sieve": source.render(sieve)}
                if not target.check_sieve(image.owner, image.members).passed:
                    return LawOutcome(Verdict.fail("image-is-sieve", **data), cases)
                if not {functor.on_morphism(f) for f in sieve.members} <= image.members:
                    return LawOutcome(Verdict.fail("extensive", **data), cases)
                for larger in sieves:
                    if sieve <= larger and not image <= image_sieve(functor, larger):
                        return LawOutcome(
                            Verdict.fail("monotone", larger=source.render(larger), **data), cases
                        )
    return LawOutcome(Verdict.ok(), cases)


def _functor_sites():
    trivial = standard_assignment(TopologyKind.TRIVIAL, corpus.category("POSET_CHAIN3"))
    return [
        ("SWAP", corpus.site("J1"), corpus.site("J1")),
        ("SWAP", corpus.site("J3"), corpus.site("J3")),
        ("IDENTITY", corpus.site("J1"), corpus.site("J1")),
        ("IDENTITY", corpus.site("J2"), corpus.site("J2")),
        ("COLLAPSE", trivial, trivial),
    ]


@law("image-laws", "functors", "images of neighborhoods, cover-neighborhoods and bases", strict=False)
def _image_laws(ctx: LawContext) -> LawOutcome:
    cases = 0
    for name, source, target in _functor_sites():
        cases += 1
        report = image_law_report(
            corpus.functor(name), source, target, require_morphism_of_sites=False
        )
        if not report.passed:
            return LawOutcome(
                Verdict.fail("image-laws", functor=name, site=source.name, report=report.to_dict()),
                cases,
            )
    return LawOutcome(Verdict.ok(), cases)


@law("compactness-preservation", "functors", "compact objects have compact images", strict=False)
def _compactness_preservation(ctx: LawContext) -> LawOutcome:
    cases = 0
    for name, source, target in _functor_sites():
        cases += 1
        verdict = compactness_preservation(corpus.functor(name), source, target)
        if not verdict.passed:
            return LawOutcome(
                Verdict.fail(
                    "compactness-preservation",
                    functor=name,
                    site=source.name,
                    violation=verdict.witness.to_dict(),
                ),
                cases,
            )
    return LawOutcome(Verdict.ok(), cases)


# model files and points


@law("model-round-trip", "model", "parse(serialize(d)) = d on the fixture corpus")
def _model_round_trip(ctx: LawContext) -> LawOutcome:
    documents = parse_documents(corpus.FIXTURE_MODEL)
    text = serialize_model(documents)
    again = parse_documents(text)
    if again != documents or serialize_model(again) != text:
        return LawOutcome(Verdict.fail("round-trip", text=text), len(documents))

    model = corpus.fixture_model()
    rebuilt_documents = [lattice_document(corpus.lattice(n)) for n in ("CHAIN3", "D12", "SQ", "M3")]
    rebuilt_documents.append(category_document(corpus.category("TWOPT")))
    sites = [n for n in model.names(BlockKind.TOPOLOGY, BlockKind.FILTER)]
    for name in sites:
        on = model.document(name).body["on"]
        rebuilt_documents.append(assignment_document(BlockKind.FILTER, name, corpus.site(name), on))
    rebuilt = parse_model(serialize_model(rebuilt_documents))
    for name in sites:
        if rebuilt.get(name).fingerprint() != corpus.site(name).fingerprint():
            return LawOutcome(Verdict.fail("rebuilt-assignment", block=name), len(documents))
    for name in ("CHAIN3", "D12", "SQ", "M3"):
        original, copy = corpus.lattice(name), rebuilt.get(name)
        if original.elements != copy.elements or not (original.leq == copy.leq).all():
            return LawOutcome(Verdict.fail("rebuilt-lattice", block=name), len(documents))
    return LawOutcome(Verdict.ok(), len(documents) + len(rebuilt_documents))


@law("locale-points", "model", "locale_points equals the subset scan for frame homomorphisms")
def _locale_points(ctx: LawContext) -> LawOutcome:
    cases = 0
    for lattice in [*corpus.fixture_frames(), *ctx.random_locales]:
        cases += 1
        elements = lattice.elements
        scanned = set()
        for mask in range(2 ** len(elements)):
            values = {x: (mask >> i) & 1 for i, x in enumerate(elements)}
            if is_frame_homomorphism(lattice, values).passed:
                scanned.add(frozenset(x for x in elements if values[x]))
        found = {p.dual_kernel for p in locale_points(lattice)}
        if found != scanned:
            return LawOutcome(
                Verdict.fail(
                    "points",
                    lattice=lattice.name,
                    found=sorted(sorted(s) for s in found),
                    scanned=sorted(sorted(s) for s in scanned),
                ),
                cases,
            )
    return LawOutcome(Verdict.ok(), cases)

"""
Command-line interface for sieveforge.
"""

import argparse
import logging
import re
import sys
import time
from typing import Any

from sieveforge import __version__
from sieveforge.category.carrier import carrier_of
from sieveforge.category.category import FiniteCategory, category_points, terminal_objects
from sieveforge.config.settings import (
    apply_overrides,
    get_settings,
    load_settings,
    use_settings,
)
from sieveforge.convergence.compactness import (
    CompactnessMethod,
    compactness_report,
    tychonoff_check,
)
from sieveforge.convergence.limits import closure, cluster_points, converges, limit_points
from sieveforge.convergence.neighborhoods import neighborhood_system
from sieveforge.convergence.points import locale_points, points_of, resolve_point
from sieveforge.core.exceptions import ImproperFilter, SieveForgeError
from sieveforge.core.verdict import Verdict
from sieveforge.coverage.assignment import CoverAssignment
from sieveforge.coverage.topology import check_topology, topology_is_filter
from sieveforge.filters.axioms import check_basis, check_filter, check_subbase
from sieveforge.filters.generation import saturate_subbase
from sieveforge.filters.ultrafilters import enumerate_filters, enumerate_ultrafilters
from sieveforge.functors.functor import is_filter_preserving
from sieveforge.functors.image_laws import image_law_report
from sieveforge.laws.registry import LawContext, select_laws
from sieveforge.laws.run import LawStatus
from sieveforge.laws.runner import run_laws
from sieveforge.model.format import ASSIGNMENT_KINDS, BlockKind, ModelFile, load_model
from sieveforge.model.reports import Report, replay_command
from sieveforge.order.lattice import FiniteLattice, is_boolean, is_frame
from sieveforge.utils.logging_utils import setup_logging

logger = logging.getLogger(__name__)

STRUCTURE_KINDS = (BlockKind.LATTICE, BlockKind.CATEGORY)


def _members(text: str) -> list[str]:
    return [m for m in re.split(r"[\s,]+", text.strip()) if m]


def _structure(model: ModelFile, name: str | None) -> tuple[str, FiniteLattice | FiniteCategory]:
    return model.pick(STRUCTURE_KINDS, name)


def _site(model: ModelFile, name: str | None) -> CoverAssignment:
    return model.pick((BlockKind.TOPOLOGY,), name)[1]


def _point(model: ModelFile, site: CoverAssignment, obj: str, label: str):
    if label in model.names(BlockKind.POINT):
        label = model.get(label).label
    return resolve_point(site, obj, label)


def _check(args: argparse.Namespace, report: Report) -> None:
    model = load_model(args.model)
    kind = BlockKind(args.kind)
    name, value = model.pick((kind,), args.name)

    if kind is BlockKind.LATTICE:
        report.add("lattice", Verdict.ok(), {"name": name, "elements": list(value.elements)})
        report.add("frame", is_frame(value), {"boolean": is_boolean(value)}, strict=False)
    elif kind is BlockKind.CATEGORY:
        report.add(
            "category",
            Verdict.ok(),
            {
                "name": name,
                "objects": list(value.objects),
                "morphisms": len(value.morphisms),
                "terminal_objects": terminal_objects(value),
            },
        )
    elif kind is BlockKind.TOPOLOGY:
        verdict = check_topology(value)
        report.add("topology", verdict, {"name": name})
        if verdict.passed:
            report.add("topology-is-filter", topology_is_filter(value), strict=False)
    elif kind is BlockKind.FILTER:
        report.add("filter", check_filter(value), {"name": name})
    elif kind is BlockKind.BASIS:
        report.add("basis", check_basis(value), {"name": name})
    elif kind is BlockKind.SUBBASE:
        verdict = check_subbase(value)
        report.add("subbase", verdict, {"name": name})
        if verdict.passed:
            try:
                generated = saturate_subbase(value)
                report.add("saturation", Verdict.ok(), {"filter": generated.to_dict()})
            except ImproperFilter as e:
                report.add("saturation", Verdict.fail("improper", trace=e.trace), strict=False)
    else:
        report.add("functor", Verdict.ok(), value.to_dict())
        if args.site and args.target_site:
            source, target = _site(model, args.site), _site(model, args.target_site)
            report.add("filter-preserving", is_filter_preserving(value, source, target))
            laws = image_law_report(value, source, target, require_morphism_of_sites=False)
            report.add("neighborhood-images", laws.neighborhoods, {"interpretation": laws.interpretation})
            report.add("cover-neighborhood-images", laws.cover_neighborhoods)
            report.add("basis-images", laws.bases)


def _enumerate(args: argparse.Namespace, report: Report) -> None:
    model = load_model(args.model)
    name, structure = _structure(model, args.name)
    carrier = carrier_of(structure)
    objects = [carrier.check_object(args.object)] if args.object else list(carrier.objects)

    if args.what == "sieves":
        data: dict[str, Any] = {
            obj: [carrier.render(s) for s in carrier.sieves_on(obj)] for obj in objects
        }
    elif args.what == "filters":
        data = {"filters": [f.to_dict() for f in enumerate_filters(structure)]}
    elif args.what == "ultrafilters":
        data = {"ultrafilters": [u.to_dict() for u in enumerate_ultrafilters(structure)]}
    elif isinstance(structure, FiniteCategory):
        data = {
            obj: [p.label for p in category_points(structure, obj)] for obj in objects
        }
    else:
        data = {"points": [p.to_dict() for p in locale_points(structure)]}
    report.add(args.what, Verdict.ok(), {"structure": name, **data})


def _converge(args: argparse.Namespace, report: Report) -> None:
    model = load_model(args.model)
    site = _site(model, args.site)
    _, value = model.pick(ASSIGNMENT_KINDS, args.filter)
    points = (
        [_point(model, site, args.object, args.point)]
        if args.point
        else points_of(site, args.object)
    )
    for point in points:
        system = neighborhood_system(site, args.object, point)
        if converges(value, args.object, point, site):
            verdict = Verdict.ok()
        else:
            verdict = Verdict.fail("convergence", object=args.object, point=point.label)
        report.add(f"converges:{point.label}", verdict, {"neighborhoods": system.to_dict()})


def _closure(args: argparse.Namespace, report: Report) -> None:
    model = load_model(args.model)
    site = _site(model, args.site)
    sieve = site.carrier.sieve(args.object, _members(args.sieve))
    points = closure(site, args.object, sieve)
    report.add(
        "closure",
        Verdict.ok(),
        {"sieve": site.carrier.render(sieve), "points": [p.label for p in points]},
    )


def _cluster(args: argparse.Namespace, report: Report) -> None:
    model = load_model(args.model)
    site = _site(model, args.site)
    _, value = model.pick(ASSIGNMENT_KINDS, args.filter)
    report.add(
        "cluster",
        Verdict.ok(),
        {
            "cluster_points": [p.label for p in cluster_points(value, args.object, site)],
            "limit_points": [p.label for p in limit_points(value, args.object, site)],
        },
    )


def _compact(args: argparse.Namespace, report: Report) -> None:
    model = load_model(args.model)
    site = _site(model, args.site)
    result = compactness_report(site, args.object, args.method)
    if result.compact:
        verdict = Verdict.ok()
    else:
        verdict = Verdict.fail("compactness", object=args.object, **result.witnesses)
    report.add("compact", verdict, result.to_dict())


def _tychonoff(args: argparse.Namespace, report: Report) -> None:
    model = load_model(args.model)
    site = _site(model, args.site)
    report.add("tychonoff", tychonoff_check(site, args.targets, args.method), {"targets": args.targets})


def _laws(args: argparse.Namespace, report: Report) -> None:
    settings = get_settings()
    if args.seed is not None:
        settings.laws.seed = args.seed
    if args.corpus == "fixtures":
        settings.laws.random_locales = 0
        settings.laws.random_posets = 0

    context = LawContext(settings.laws, settings.enumeration.budget)
    tracker = run_laws(select_laws(args.law), context)
    for run in tracker.get_runs():
        if run.status is LawStatus.HELD:
            verdict = Verdict.ok()
        elif run.status is LawStatus.FALSIFIED:
            verdict = run.verdict
        else:
            verdict = Verdict.fail("error", message=run.error_message, details=run.error_details)
        replay = replay_command(
            ["laws", "--corpus", args.corpus, "--seed", str(settings.laws.seed), "--law", run.law]
        )
        data = {"group": run.group, "cases": run.cases, "skipped": run.skipped}
        if settings.report.include_timing:
            data["duration_seconds"] = run.get_duration_seconds()
        report.add(run.law, verdict, data, replay=replay, strict=run.strict)
    report.summary = tracker.get_statistics()


COMMANDS = {
    "check": _check,
    "enumerate": _enumerate,
    "converge": _converge,
    "closure": _closure,
    "cluster": _cluster,
    "compact": _compact,
    "tychonoff": _tychonoff,
    "laws": _laws,
}


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one subparser per command."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=str, default=None, help="Path to configuration file")
    common.add_argument("--debug", action="store_true", help="Enable debug logging")
    common.add_argument("--format", choices=["json", "text"], default=None, help="Report format")
    common.add_argument("--budget", type=int, default=None, help="Maximum saturation states")
    common.add_argument("--max-sieves", type=int, default=None, help="Maximum sieves per object")
    common.add_argument(
        "--strict-basis",
        action="store_true",
        help="Require pullbacks of basis sieves to be basis members",
    )
    common.add_argument("--timing", action="store_true", help="Include wall-clock timing")

    parser = argparse.ArgumentParser(
        prog="sieveforge",
        description="Filters, Grothendieck topologies and compactness on finite categories and locales",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Check a topology declared in a model file
  sieveforge check topology model.txt --name J

  # Compactness of an element under a site
  sieveforge compact model.txt --site J --object 2 --method ultrafilter

  # Run the law suite with a fixed seed
  sieveforge laws --corpus default --seed 42
        """,
    )
    parser.add_argument("--version", action="version", version=f"sieveforge {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    check = commands.add_parser("check", parents=[common], help="Run an axiom checker")
    check.add_argument("kind", choices=[k.value for k in BlockKind if k is not BlockKind.POINT])
    check.add_argument("model", help="Model file")
    check.add_argument("--name", help="Block to check (default: the only one of its kind)")
    check.add_argument("--site", help="Source topology for functor checks")
    check.add_argument("--target-site", help="Target topology for functor checks")

    enumerate_ = commands.add_parser("enumerate", parents=[common], help="Enumerate structures")
    enumerate_.add_argument("what", choices=["sieves", "filters", "ultrafilters", "points"])
    enumerate_.add_argument("model", help="Model file")
    enumerate_.add_argument("--name", help="Lattice or category block")
    enumerate_.add_argument("--object", "--element", dest="object", help="Restrict to one object")

    for name, help_text in (
        ("converge", "Decide convergence of a filter to points"),
        ("cluster", "Cluster and limit points of a filter"),
    ):
        sub = commands.add_parser(name, parents=[common], help=help_text)
        sub.add_argument("model", help="Model file")
        sub.add_argument("--site", help="Topology block")
        sub.add_argument("--filter", help="Filter block")
        sub.add_argument("--object", "--element", dest="object", required=True)
        if name == "converge":
            sub.add_argument("--point", help="Point label or point block")

    closure_ = commands.add_parser("closure", parents=[common], help="Closure of a sieve")
    closure_.add_argument("model", help="Model file")
    closure_.add_argument("--site", help="Topology block")
    closure_.add_argument("--object", "--element", dest="object", required=True)
    closure_.add_argument("--sieve", required=True, help="Sieve members, space or comma separated")

    compact = commands.add_parser("compact", parents=[common], help="Compactness report")
    compact.add_argument("model", help="Model file")
    compact.add_argument("--site", help="Topology block")
    compact.add_argument("--object", "--element", dest="object", required=True)
    compact.add_argument("--method", choices=[m.value for m in CompactnessMethod], default="ultrafilter")

    tychonoff = commands.add_parser("tychonoff", parents=[common], help="Locale Tychonoff check")
    tychonoff.add_argument("model", help="Model file")
    tychonoff.add_argument("--site", help="Topology block on a lattice")
    tychonoff.add_argument("--targets", nargs="+", required=True, help="Compact elements")
    tychonoff.add_argument("--method", choices=[m.value for m in CompactnessMethod], default="ultrafilter")

    laws = commands.add_parser("laws", parents=[common], help="Run the law suite")
    laws.add_argument("--corpus", choices=["default", "fixtures"], default="default")
    laws.add_argument("--seed", type=int, default=None, help="Seed for the random corpus")
    laws.add_argument("--law", action="append", help="Run only this law (repeatable)")
    return parser


def _apply_overrides(args: argparse.Namespace) -> None:
    settings = apply_overrides(
        load_settings(args.config),
        report_format=args.format,
        budget=args.budget,
        max_sieves=args.max_sieves,
        strict_basis=args.strict_basis,
        include_timing=args.timing,
    )
    use_settings(settings)
    setup_logging(settings.logging, debug=args.debug)


def _check_site_options(parser: argparse.ArgumentParser, args: argparse.Namespace) -> None:
    if args.command != "check" or not (args.site or args.target_site):
        return
    if args.kind != BlockKind.FUNCTOR.value:
        parser.error("--site and --target-site only apply to 'check functor'")
    if not (args.site and args.target_site):
        parser.error("check functor needs both --site and --target-site")


def run_command(argv: list[str]) -> Report:
    """
    Execute one command and return its report.

    Raises:
        SystemExit: On usage errors (status 2)
        SieveForgeError: If a model or configuration cannot be loaded
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    _check_site_options(parser, args)
    _apply_overrides(args)
    report = Report(list(argv))
    started = time.perf_counter()
    logger.info(f"Running {args.command}")
    COMMANDS[args.command](args, report)
    if get_settings().report.include_timing:
        report.timing = time.perf_counter() - started
    return report


def main(argv: list[str] | None = None) -> None:
    """Main entry point."""
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        report = run_command(argv)
    except SieveForgeError as e:
        print(f"Error: {e}", file=sys.stderr)
        sys.exit(2)

    settings = get_settings().report
    print(report.render(settings.format, settings.indent))
    sys.exit(report.exit_code)


if __name__ == "__main__":
    main()

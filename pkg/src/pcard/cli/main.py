"""Command-line front end: one subcommand per check, each emitting a JSON report."""

import argparse
import json
import logging
import os
import sys
from collections.abc import Callable, Iterator
from contextlib import contextmanager
from pathlib import Path
from typing import Any

from pydantic import BaseModel

from ..cantor_bernstein import cb_witness, chain_decomposition, phi_table
from ..choice import (
    audit_pairwise_disjoint,
    check_honestly_nonempty,
    check_refinement,
    choice_bruteforce,
    refine_uniformize,
    slice_members,
    transversal_member,
)
from ..diag import check_requirements, default_catalog, run_construction
from ..exceptions import (
    AuditFailure,
    OffsetMismatchError,
    PCardError,
    PreconditionError,
)
from ..findiff import findiff_witness, shift_function, transfer_countability
from ..iso_tools import (
    cylinder_witness,
    enum_by_iteration,
    iso_from_complements,
    reduction_from_witness,
)
from ..languages import GALLERY, census_table, enumerate_upto, sigma_star
from ..maps import MAP_GALLERY
from ..models.diag import CatalogEntry, MachineCatalog, Verdict
from ..models.equipollence import Equipollence, VerificationReport
from ..models.findiff import FiniteDiff
from ..models.language import Language
from ..models.partial_map import PartialMap
from ..models.polynomial import Polynomial
from ..models.string import Str
from ..ranking import census_poly_related, exp_density_check, rank_inverse, strong_rank
from ..strings import strings_upto, unpair
from ..witnesses import audit_map, verify_equipollence
from .dsl import BUILDERS, Kind, build, kind_of

logger = logging.getLogger(__name__)

EXIT_CLEAN = 0
EXIT_VIOLATIONS = 1
EXIT_USAGE = 2


class Envelope(BaseModel):
    """The report every subcommand produces."""

    command: str
    inputs: dict[str, Any]
    checked_up_to: int | None = None
    violations: list[dict[str, Any]] = []
    summary: dict[str, Any] = {}

    def render(self) -> str:
        return json.dumps(
            self.model_dump(), sort_keys=True, indent=2, ensure_ascii=False
        )


Handler = Callable[[argparse.Namespace, logging.Logger], Envelope]

_RESERVED = {"handler", "json", "log", "command"}


def _envelope(args: argparse.Namespace, **fields: Any) -> Envelope:
    inputs = {k: v for k, v in sorted(vars(args).items()) if k not in _RESERVED}
    return Envelope(command=args.command, inputs=inputs, **fields)


def _language(text: str) -> Language:
    lang: Language = build(text, Kind.LANGUAGE)
    return lang


def _witness(text: str) -> Equipollence:
    e: Equipollence = build(text, Kind.WITNESS)
    return e


def _coefficients(text: str) -> Polynomial:
    try:
        return Polynomial([int(c) for c in text.split(",")])
    except ValueError as e:
        raise PreconditionError(f"not a coefficient list: {text!r}") from e


def _string(text: str) -> Str:
    return Str.parse(text.strip('"'))


def _verification(
    report: VerificationReport,
) -> tuple[list[dict[str, Any]], dict[str, Any]]:
    return [v.to_dict() for v in report.violations], {
        "witness": report.witness,
        "clean": report.clean,
        "max_steps": {str(n): s for n, s in sorted(report.max_steps.items())},
        "message": report.summary(),
    }


def _str_or_none(x: Str | None) -> str | None:
    return None if x is None else str(x)


# Subcommands


def cmd_eval(args: argparse.Namespace, logger: logging.Logger) -> Envelope:
    value = build(args.expr)
    kind = kind_of(value)
    summary: dict[str, Any] = {"kind": kind.value}
    match value:
        case int():
            summary["value"] = value
        case Str():
            summary["value"] = str(value)
        case FiniteDiff():
            summary.update(
                name=value.derived().name,
                offset=value.offset,
                members=[str(x) for x in enumerate_upto(value.derived(), args.upto)],
            )
        case Language():
            members = [str(x) for x in enumerate_upto(value, args.upto)]
            summary.update(name=value.name, members=members)
        case PartialMap():
            summary.update(
                name=value.name,
                bound=str(value.bound),
                table={
                    str(x): _str_or_none(value(x))
                    for x in strings_upto(value.source, args.upto)
                },
            )
        case Equipollence():
            summary.update(
                name=value.name,
                a=value.a.name,
                b=value.b.name,
                forward_bound=str(value.forward.bound),
                backward_bound=str(value.backward.bound),
            )
        case _:
            summary["name"] = str(getattr(value, "name", value))
    return _envelope(args, checked_up_to=args.upto, summary=summary)


def cmd_census(args: argparse.Namespace, logger: logging.Logger) -> Envelope:
    table = census_table(_language(args.lang), args.upto)
    csv = table.to_csv()
    if args.csv:
        Path(args.csv).write_text(csv)
    else:
        sys.stdout.write(csv)
    violations = [] if table.is_monotone else [{"kind": "census_not_monotone"}]
    return _envelope(
        args,
        checked_up_to=args.upto,
        violations=violations,
        summary={
            "language": table.language,
            "census": [list(e) for e in table.entries],
        },
    )


def cmd_density_compare(args: argparse.Namespace, logger: logging.Logger) -> Envelope:
    a, b = _language(args.a), _language(args.b)
    report = census_poly_related(
        a, b, _coefficients(args.p), _coefficients(args.q), args.upto, logger=logger
    )
    violations = [
        {"kind": "census_gap", **row.model_dump()}
        for row in report.rows
        if not row.passes
    ]
    summary: dict[str, Any] = {"related": report.passes, "p": report.p, "q": report.q}
    if args.c_exp is not None:
        summary["density"] = [
            exp_density_check(lang, args.c_exp, args.upto).model_dump(mode="json")
            for lang in (a, b)
        ]
    return _envelope(
        args, checked_up_to=args.upto, violations=violations, summary=summary
    )


def cmd_check_equi(args: argparse.Namespace, logger: logging.Logger) -> Envelope:
    report = verify_equipollence(_witness(args.witness), args.upto, logger=logger)
    violations, summary = _verification(report)
    return _envelope(
        args, checked_up_to=args.upto, violations=violations, summary=summary
    )


def cmd_audit_map(args: argparse.Namespace, logger: logging.Logger) -> Envelope:
    f: PartialMap = build(args.map, Kind.MAP)
    audit = audit_map(f, args.upto, logger=logger)
    violations = []
    if audit.collision is not None:
        violations.append(
            {"kind": "collision", "inputs": [str(x) for x in audit.collision]}
        )
    honesty = audit.honesty_polynomial
    return _envelope(
        args,
        checked_up_to=args.upto,
        violations=violations,
        summary={
            "map": audit.map,
            "injective": audit.injective,
            "length_increasing": audit.length_increasing,
            "shrinking_input": _str_or_none(audit.shrinking_input),
            "honest_with": audit.honest_with,
            "honesty_polynomial": None if honesty is None else str(honesty),
        },
    )


def cmd_cb(args: argparse.Namespace, logger: logging.Logger) -> Envelope:
    p = build(args.p, Kind.INJECTION)
    q = build(args.q, Kind.INJECTION)
    a = _language(args.a) if args.a else sigma_star(p.forward.source)
    b = _language(args.b) if args.b else sigma_star(q.forward.source)
    try:
        e = cb_witness(p, q, a, b, audit_upto=args.upto, logger=logger)
    except AuditFailure as err:
        return _envelope(
            args,
            checked_up_to=args.upto,
            violations=[
                {
                    "kind": "audit_failure",
                    "input": _str_or_none(err.offending),
                    "detail": str(err),
                }
            ],
        )
    report = verify_equipollence(e, args.upto, logger=logger)
    violations, summary = _verification(report)
    summary["phi"] = {str(x): _str_or_none(y) for x, y in phi_table(e, args.upto)}
    if args.emit_chains:
        summary["chains"] = [
            {
                "origin": chain.origin.value,
                "source": str(chain.source),
                "members": [[side.value, str(x)] for side, x in chain.members],
            }
            for chain in chain_decomposition(p, q, a, b, args.upto)
        ]
    return _envelope(
        args, checked_up_to=args.upto, violations=violations, summary=summary
    )


def cmd_rank(args: argparse.Namespace, logger: logging.Logger) -> Envelope:
    lang = _language(args.lang)
    x = _string(args.x)
    return _envelope(
        args,
        summary={"language": lang.name, "x": str(x), "rank": strong_rank(lang, x)},
    )


def cmd_unrank_in(args: argparse.Namespace, logger: logging.Logger) -> Envelope:
    lang = _language(args.lang)
    x = rank_inverse(lang, args.r, args.nmax)
    return _envelope(
        args,
        checked_up_to=args.nmax,
        summary={"language": lang.name, "rank": args.r, "member": str(x)},
    )


def _shift_violations(d: FiniteDiff, upto: int) -> list[dict[str, Any]]:
    sigma = shift_function(d)
    derived = d.derived()
    violations = []
    for x in strings_upto(d.base.alphabet, upto):
        expected = strong_rank(d.base, x) + sigma(x)
        actual = strong_rank(derived, x)
        if actual != expected:
            violations.append(
                {
                    "kind": "shift_mismatch",
                    "diff": derived.name,
                    "input": str(x),
                    "expected": expected,
                    "actual": actual,
                }
            )
    return violations


def _strs(text: str | None) -> list[Str]:
    """A comma-separated list of string literals; blank means none."""
    if not text:
        return []
    return [_string(s.strip()) for s in text.split(",") if s.strip()]


def _diffs(args: argparse.Namespace) -> tuple[FiniteDiff, FiniteDiff | None]:
    if args.d1:
        if args.other_add is not None or args.other_remove is not None:
            raise PreconditionError("--other-add/--other-remove go with --base")
        d2: FiniteDiff | None = build(args.d2, Kind.DIFF) if args.d2 else None
        return build(args.d1, Kind.DIFF), d2
    if args.d2:
        raise PreconditionError("--d2 goes with --d1")
    base = _language(args.base)
    d1 = FiniteDiff(base=base, added=_strs(args.add), removed=_strs(args.remove))
    if args.other_add is None and args.other_remove is None:
        return d1, None
    other = FiniteDiff(
        base=base, added=_strs(args.other_add), removed=_strs(args.other_remove)
    )
    return d1, other


def cmd_findiff(args: argparse.Namespace, logger: logging.Logger) -> Envelope:
    d1, d2 = _diffs(args)
    violations = _shift_violations(d1, args.upto)
    summary: dict[str, Any] = {"d1": d1.derived().name, "offset_1": d1.offset}
    if d2 is not None:
        violations += _shift_violations(d2, args.upto)
        summary.update(d2=d2.derived().name, offset_2=d2.offset)
        try:
            e = findiff_witness(d1, d2)
        except OffsetMismatchError as err:
            violations.append({"kind": "offset_mismatch", "detail": str(err)})
        else:
            report = verify_equipollence(e, args.upto, logger=logger)
            found, checked = _verification(report)
            violations += found
            summary["witness"] = checked
    if args.enum:
        e = transfer_countability(_witness(args.enum), d1, logger=logger)
        found, checked = _verification(verify_equipollence(e, args.upto, logger=logger))
        violations += found
        summary["transfer"] = checked
    return _envelope(
        args, checked_up_to=args.upto, violations=violations, summary=summary
    )


def _carried(
    phi: PartialMap, a: Language, b: Language, upto: int
) -> list[dict[str, Any]]:
    """Inputs x where membership of x in A differs from membership of phi(x) in B."""
    violations = []
    for x in strings_upto(phi.source, upto):
        y = phi(x)
        if y is None or (x in a) != (y in b):
            violations.append(
                {"kind": "not_carried", "input": str(x), "image": _str_or_none(y)}
            )
    return violations


def cmd_iso(args: argparse.Namespace, logger: logging.Logger) -> Envelope:
    e, ec = _witness(args.e), _witness(args.ec)
    iso = iso_from_complements(e, ec, e.a, logger=logger)
    report = verify_equipollence(iso, args.upto, logger=logger)
    violations, summary = _verification(report)
    violations += _carried(iso.forward, e.a, e.b, args.upto)
    return _envelope(
        args, checked_up_to=args.upto, violations=violations, summary=summary
    )


def cmd_reduce(args: argparse.Namespace, logger: logging.Logger) -> Envelope:
    e = _witness(args.witness)
    a0 = _string(args.a0)
    r = reduction_from_witness(e, a0)
    violations = []
    fallbacks = 0
    for x in strings_upto(e.b.alphabet, args.upto):
        y = r(x)
        if y == a0:
            fallbacks += 1
        if y is None or (x in e.b) != (y in e.a):
            violations.append(
                {
                    "kind": "reduction_mismatch",
                    "input": str(x),
                    "image": _str_or_none(y),
                }
            )
    return _envelope(
        args,
        checked_up_to=args.upto,
        violations=violations,
        summary={"reduction": r.name, "fallbacks": fallbacks},
    )


def cmd_enumerate(args: argparse.Namespace, logger: logging.Logger) -> Envelope:
    enum = enum_by_iteration(_witness(args.witness))
    items = enum.take(args.count)
    violations = []
    for previous, x in zip(items, items[1:], strict=False):
        if enum.step_inverse(x) != previous:
            violations.append({"kind": "step_not_inverted", "input": str(x)})
    return _envelope(
        args,
        violations=violations,
        summary={"x0": str(enum.x0), "items": [str(x) for x in items]},
    )


def cmd_cylinder(args: argparse.Namespace, logger: logging.Logger) -> Envelope:
    e_a, e_ac = _witness(args.e_a), _witness(args.e_ac)
    cyl = cylinder_witness(e_a, e_ac, e_a.a)
    report = verify_equipollence(cyl, args.upto, logger=logger)
    violations, summary = _verification(report)
    for x in strings_upto(e_a.a.alphabet, args.upto):
        y = cyl.forward(x)
        if y is None or (x in e_a.a) != (unpair(y)[0] in e_a.a):
            violations.append(
                {"kind": "not_carried", "input": str(x), "image": _str_or_none(y)}
            )
    return _envelope(
        args, checked_up_to=args.upto, violations=violations, summary=summary
    )


def cmd_choice(args: argparse.Namespace, logger: logging.Logger) -> Envelope:
    c = build(args.collection, Kind.COLLECTION)
    report = check_honestly_nonempty(c, args.upto, logger=logger)
    violations = [{"kind": "empty_slice", "index": str(x)} for x in report.failures]
    choices = {
        str(row.x): str(choice_bruteforce(c, row.x))
        for row in report.rows
        if row.nonempty
    }
    return _envelope(
        args,
        checked_up_to=args.upto,
        violations=violations,
        summary={"collection": c.name, "choices": choices},
    )


def cmd_transversal(args: argparse.Namespace, logger: logging.Logger) -> Envelope:
    c = build(args.collection, Kind.COLLECTION)
    horizon = args.horizon if args.horizon is not None else args.upto
    disjoint = audit_pairwise_disjoint(c, args.upto)
    violations: list[dict[str, Any]] = []
    if not disjoint.disjoint:
        assert disjoint.indices is not None
        violations.append(
            {
                "kind": "slices_overlap",
                "input": _str_or_none(disjoint.offending),
                "indices": [str(x) for x in disjoint.indices],
            }
        )
    picked: dict[str, list[str]] = {}
    for x in strings_upto(c.carrier.alphabet, args.upto):
        members = slice_members(c, x)
        hits = [str(y) for y in members if transversal_member(c, y, horizon)]
        if members and len(hits) != 1:
            violations.append(
                {"kind": "transversal_count", "index": str(x), "hits": hits}
            )
        if hits:
            picked[str(x)] = hits
    return _envelope(
        args,
        checked_up_to=args.upto,
        violations=violations,
        summary={"collection": c.name, "transversal": picked},
    )


def cmd_uniformize(args: argparse.Namespace, logger: logging.Logger) -> Envelope:
    r = build(args.relation, Kind.MULTIMAP)
    f = refine_uniformize(r, args.upto)
    report = check_refinement(r, f, args.upto)
    violations = [
        {"kind": "domain_mismatch", "input": str(x)} for x in report.domain_mismatches
    ] + [{"kind": "escaped_value", "input": str(x)} for x in report.escaped_values]
    return _envelope(
        args,
        checked_up_to=args.upto,
        violations=violations,
        summary={
            "refinement": f.name,
            "table": {
                str(x): _str_or_none(f(x)) for x in strings_upto(f.source, args.upto)
            },
        },
    )


def load_catalog(path: str) -> MachineCatalog:
    """A JSON list of {name, alpha, beta}, the maps written as expressions."""
    entries = []
    for i, item in enumerate(json.loads(Path(path).read_text())):
        try:
            name, alpha, beta = item["name"], item["alpha"], item["beta"]
        except (KeyError, TypeError) as e:
            raise PreconditionError(
                f"catalog entry {i} needs name, alpha and beta"
            ) from e
        entries.append(
            CatalogEntry(
                name=name, alpha=build(alpha, Kind.MAP), beta=build(beta, Kind.MAP)
            )
        )
    return MachineCatalog(entries=entries)


def cmd_diag(args: argparse.Namespace, logger: logging.Logger) -> Envelope:
    a, b = _language(args.a), _language(args.b)
    catalog = (
        load_catalog(args.catalog) if args.catalog else default_catalog(a.alphabet.size)
    )
    state, c = run_construction(a, b, catalog, args.stages, args.horizon, logger=logger)
    trace = [record.to_dict() for record in state.log]
    if args.trace:
        Path(args.trace).write_text(json.dumps(trace, sort_keys=True, indent=2))
    requirements = check_requirements(state, a, b, catalog, args.horizon)
    violations = [
        {"kind": "requirement_unsatisfied", **req.to_dict()}
        for req in requirements
        if Verdict.UNSATISFIED in (req.r1.verdict, req.r2.verdict)
    ]
    return _envelope(
        args,
        checked_up_to=args.horizon,
        violations=violations,
        summary={
            "language": c.name,
            "added": [str(x) for x in state.added],
            "excluded": [str(x) for x in state.excluded],
            "requirements": [req.to_dict() for req in requirements],
            "assumes": f"{a.name} much smaller than {b.name} (not checked)",
        },
    )


def cmd_gallery(args: argparse.Namespace, logger: logging.Logger) -> Envelope:
    names: dict[str, list[str]] = {
        "languages": sorted(GALLERY),
        "maps": sorted(MAP_GALLERY),
        "expressions": sorted(BUILDERS),
    }
    return _envelope(args, summary={args.kind: names[args.kind]})


# Parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pcard", description="Checkable witnesses for polynomial-time cardinality"
    )
    subparsers = parser.add_subparsers(dest="command")
    all_subparsers = []

    def add(name: str, handler: Handler, help: str) -> argparse.ArgumentParser:
        sub = subparsers.add_parser(name, help=help)
        sub.set_defaults(handler=handler)
        all_subparsers.append(sub)
        return sub

    def upto(sub: argparse.ArgumentParser, default: int = 6) -> None:
        sub.add_argument(
            "--upto",
            "--verify-upto",
            dest="upto",
            type=int,
            default=default,
            metavar="N",
            help="check lengths up to N",
        )

    s = add("eval", cmd_eval, "evaluate an expression")
    s.add_argument("--expr", required=True)
    upto(s, 3)

    s = add("census", cmd_census, "census table of a language")
    s.add_argument("--lang", required=True)
    s.add_argument(
        "--csv", metavar="PATH", help="write the table here instead of stdout"
    )
    upto(s)

    s = add("density-compare", cmd_density_compare, "polynomial relation of censuses")
    s.add_argument("--a", required=True)
    s.add_argument("--b", required=True)
    s.add_argument("--p", default="0,1", help="coefficients of p, constant first")
    s.add_argument("--q", default="0,1", help="coefficients of q, constant first")
    s.add_argument("--c-exp", type=float, help="also estimate exponential density")
    upto(s, 10)

    s = add("check-equi", cmd_check_equi, "verify a witness")
    s.add_argument("--witness", required=True)
    upto(s)

    s = add("audit-map", cmd_audit_map, "injectivity, honesty and length increase")
    s.add_argument("--map", required=True)
    upto(s)

    s = add("cb", cmd_cb, "Cantor-Bernstein witness from two injections")
    s.add_argument("--p", required=True, help="injection A -> B")
    s.add_argument("--q", required=True, help="injection B -> A")
    s.add_argument("--a", help="domain of p; defaults to Σ*")
    s.add_argument("--b", help="domain of q; defaults to Σ*")
    s.add_argument("--emit-chains", action="store_true")
    upto(s)

    s = add("rank", cmd_rank, "strong rank of a string")
    s.add_argument("--lang", required=True)
    s.add_argument("--x", required=True, help='string as "size:digits"')

    s = add("unrank-in", cmd_unrank_in, "member of a given rank")
    s.add_argument("--lang", required=True)
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--nmax", type=int, default=16)

    s = add("findiff", cmd_findiff, "finite differences: shift identity and witnesses")
    given = s.add_mutually_exclusive_group(required=True)
    given.add_argument("--base", help="base language A")
    given.add_argument("--d1", help="first difference as an expression")
    s.add_argument("--add", help="comma-separated strings added to A")
    s.add_argument("--remove", help="comma-separated strings removed from A")
    s.add_argument("--other-add", help="added strings of a second difference of A")
    s.add_argument("--other-remove", help="removed strings of a second difference of A")
    s.add_argument("--d2", help="second difference as an expression, with --d1")
    s.add_argument("--enum", help="witness Σ* ≈ base to transfer")
    upto(s)

    s = add("iso", cmd_iso, "total isomorphism from A ≈ B and its complement")
    s.add_argument("--e", required=True)
    s.add_argument("--ec", required=True)
    upto(s)

    s = add("reduce", cmd_reduce, "many-one reduction from a witness")
    s.add_argument("--witness", required=True)
    s.add_argument("--a0", required=True, help="a fixed non-member of A")
    upto(s)

    s = add("enumerate", cmd_enumerate, "enumeration by iteration")
    s.add_argument("--witness", required=True)
    s.add_argument("--count", type=int, default=10)

    s = add("cylinder", cmd_cylinder, "A ≡ A × Σ*")
    s.add_argument("--e-a", required=True)
    s.add_argument("--e-ac", required=True)
    upto(s, 5)

    s = add("choice", cmd_choice, "honest non-emptiness and brute-force choice")
    s.add_argument("--collection", required=True)
    upto(s, 4)

    s = add("transversal", cmd_transversal, "transversal of a disjoint collection")
    s.add_argument("--collection", required=True)
    s.add_argument("--horizon", type=int)
    upto(s, 4)

    s = add("uniformize", cmd_uniformize, "refine a multivalued map")
    s.add_argument("--relation", required=True)
    upto(s, 4)

    s = add("diag", cmd_diag, "run the stage construction")
    s.add_argument("--A", "--a", dest="a", required=True)
    s.add_argument("--B", "--b", dest="b", required=True)
    s.add_argument("--catalog", metavar="PATH")
    s.add_argument("--stages", type=int, default=30)
    s.add_argument("--horizon", type=int, default=8)
    s.add_argument("--trace", metavar="PATH")

    s = add("gallery", cmd_gallery, "list known names")
    s.add_argument(
        "--kind", choices=["languages", "maps", "expressions"], default="expressions"
    )

    for sub in all_subparsers:
        sub.add_argument("--json", metavar="PATH", help="write the report here")
        sub.add_argument("--fuel", type=int, help="per-call step limit")
        sub.add_argument(
            "--log",
            default="warning",
            choices=["error", "warning", "info", "debug"],
            help="logging level",
        )
        sub.add_argument(
            "--seed", type=int, default=0, help="unused; runs are deterministic"
        )
    return parser


@contextmanager
def _fuel(limit: int | None) -> Iterator[None]:
    if limit is None:
        yield
        return
    previous = os.environ.get("PCARD_FUEL_LIMIT")
    os.environ["PCARD_FUEL_LIMIT"] = str(limit)
    try:
        yield
    finally:
        if previous is None:
            del os.environ["PCARD_FUEL_LIMIT"]
        else:
            os.environ["PCARD_FUEL_LIMIT"] = previous


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    if args.command is None:
        parser.print_help(sys.stderr)
        return EXIT_USAGE

    logging.basicConfig(
        level=getattr(logging, args.log.upper()),
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        with _fuel(args.fuel):
            envelope = args.handler(args, logger)
    except PCardError as e:
        logger.error(f"{args.command}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    text = envelope.render()
    if args.json:
        Path(args.json).write_text(text + "\n")
    elif not (args.command == "census" and not args.csv):
        print(text)
    return EXIT_VIOLATIONS if envelope.violations else EXIT_CLEAN


if __name__ == "__main__":
    sys.exit(main())

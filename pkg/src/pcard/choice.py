"""Honest non-emptiness, choice functions, transversals and uniformization."""

import logging
from collections.abc import Iterator

from .exceptions import HorizonError, SliceEmptyError, WindowUnspecifiedError
from .languages import ensure_enumerable
from .models.collection import (
    Collection,
    DisjointnessReport,
    HonestyReport,
    MultiMap,
    RefinementReport,
    SliceVerdict,
)
from .models.language import Language
from .models.partial_map import PartialMap
from .models.polynomial import Polynomial, TimeBound
from .models.string import Str
from .strings import pair, strings_between, strings_upto, total_upto

logger = logging.getLogger(__name__)


def _slice(carrier: Language, x: Str, low: int, high: int) -> Iterator[Str]:
    """Members of L_x with length in [low, high], in length-lex order."""
    for y in strings_between(carrier.alphabet, low, high):
        if pair(x, y) in carrier:
            yield y


def slice_members(c: Collection, x: Str) -> list[Str]:
    low, high = c.window(x)
    ensure_enumerable(c.carrier.alphabet, high)
    return list(_slice(c.carrier, x, low, high))


def check_honestly_nonempty(
    c: Collection, nmax: int, logger: logging.Logger = logger
) -> HonestyReport:
    """For each x up to nmax, the least member of L_x inside its window, if any."""
    ensure_enumerable(c.carrier.alphabet, c.q_high(nmax))
    rows = []
    for x in strings_upto(c.carrier.alphabet, nmax):
        low, high = c.window(x)
        found = next(_slice(c.carrier, x, low, high), None)
        rows.append(SliceVerdict(x=x, witness=found))
    report = HonestyReport(collection=c.name, checked_up_to=nmax, rows=rows)
    if not report.passes:
        logger.info(f"{c.name}: empty window at {len(report.failures)} index(es)")
    return report


def choice_bruteforce(c: Collection, x: Str) -> Str:
    """The length-lex least member of L_x inside the honesty window."""
    low, high = c.window(x)
    ensure_enumerable(c.carrier.alphabet, high)
    y = next(_slice(c.carrier, x, low, high), None)
    if y is None:
        raise SliceEmptyError(
            f"slice empty: no y with {low} <= |y| <= {high} "
            f"pairs with {x} in {c.carrier.name}"
        )
    return y


def transversal_member(c: Collection, y: Str, horizon: int) -> bool:
    """
    Whether y is the least windowed member of the slice it belongs to.

    Only indices whose window can contain y are searched; their lengths lie
    between the inverse images of |y| under q_high and p_low.
    """
    upper = c.p_low.greatest_preimage(len(y))
    if upper is None:
        return False
    lower = c.q_high.least_preimage(len(y))
    if upper > horizon:
        raise HorizonError(
            f"index window up to length {upper} exceeds horizon {horizon} for {y}"
        )
    carrier = c.carrier
    ensure_enumerable(carrier.alphabet, max(upper, len(y)))
    for x in strings_between(carrier.alphabet, lower, upper):
        if pair(x, y) not in carrier:
            continue
        low, _ = c.window(x)
        if all(
            pair(x, smaller) not in carrier
            for smaller in strings_between(carrier.alphabet, low, len(y))
            if smaller < y
        ):
            return True
    return False


def audit_pairwise_disjoint(c: Collection, nmax: int) -> DisjointnessReport:
    """Look for a string in two slices L_x, L_x' with x ≠ x', for y up to q(nmax)."""
    horizon = c.q_high(nmax)
    ensure_enumerable(c.carrier.alphabet, horizon)
    owner: dict[Str, Str] = {}
    for x in strings_upto(c.carrier.alphabet, nmax):
        for y in _slice(c.carrier, x, 0, horizon):
            if y in owner:
                return DisjointnessReport(
                    collection=c.name,
                    checked_up_to=nmax,
                    disjoint=False,
                    offending=y,
                    indices=(owner[y], x),
                )
            owner[y] = x
    return DisjointnessReport(collection=c.name, checked_up_to=nmax, disjoint=True)


def _window(r: MultiMap) -> tuple[Polynomial, Polynomial]:
    if r.low is None or r.high is None:
        raise WindowUnspecifiedError(f"{r.name} declares no output-length window")
    return r.low, r.high


def _search_clock(r: MultiMap, nmax: int) -> TimeBound:
    """Least c with c·n^e + c covering a full window search up to length nmax."""
    low, high = _window(r)
    k = r.graph.alphabet.size
    e = high.degree
    c = 1
    for n in range(nmax + 1):
        window = total_upto(k, high(n)) - total_upto(k, low(n) - 1)
        cost = window + n + high(n) + 1
        c = max(c, -(-cost // (n**e + 1)))
    return TimeBound(c, e)


def refine_uniformize(r: MultiMap, nmax: int) -> PartialMap:
    """
    Select the length-lex least y of each slice; undefined on empty slices.

    The clock covers exhaustive search for inputs up to length nmax; longer
    inputs whose search runs past it clock out.
    """
    low, high = _window(r)
    graph = r.graph
    ensure_enumerable(graph.alphabet, high(nmax))

    def evaluate(x: Str) -> tuple[Str | None, int]:
        lookups = 0
        for y in strings_between(graph.alphabet, low(len(x)), high(len(x))):
            lookups += 1
            if pair(x, y) in graph:
                return y, lookups + len(x) + len(y) + 1
        return None, lookups + len(x) + 1

    return PartialMap(
        name=f"uniformize({r.name})",
        source=graph.alphabet,
        target=graph.alphabet,
        evaluator=evaluate,
        bound=_search_clock(r, nmax),
    )


def check_refinement(r: MultiMap, f: PartialMap, nmax: int) -> RefinementReport:
    """dom(f) = dom(R) and f(x) ∈ set-R(x) on every x up to nmax."""
    low, high = _window(r)
    graph = r.graph
    ensure_enumerable(graph.alphabet, high(nmax))
    mismatches: list[Str] = []
    escaped: list[Str] = []
    for x in strings_upto(graph.alphabet, nmax):
        in_domain = next(_slice(graph, x, low(len(x)), high(len(x))), None) is not None
        y = f(x)
        if (y is not None) != in_domain:
            mismatches.append(x)
        elif y is not None and pair(x, y) not in graph:
            escaped.append(x)
    return RefinementReport(
        relation=r.name,
        refinement=f.name,
        checked_up_to=nmax,
        domain_mismatches=mismatches,
        escaped_values=escaped,
    )

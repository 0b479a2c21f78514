"""Strong ranks, rank-based witnesses, induced orders and census comparisons."""

import logging
import math

from .exceptions import (
    InvariantBreachError,
    PreconditionError,
    RankNotFoundError,
)
from .languages import census, ensure_enumerable, sigma_star
from .models.equipollence import Equipollence
from .models.language import Language, RankForm
from .models.ordering import (
    DensityVerdict,
    Ordering,
    PolyRelationReport,
    PolyRelationRow,
)
from .models.partial_map import PartialMap
from .models.polynomial import Polynomial, TimeBound
from .models.string import Str
from .strings import band_start, rank, strings_upto, unrank
from .witnesses import witness

logger = logging.getLogger(__name__)


def strong_rank(lang: Language, x: Str) -> int:
    """|{y ∈ L : y <= x}| in length-lex order."""
    if lang.rank_closed_form is not None:
        return lang.rank_closed_form(x)
    ensure_enumerable(lang.alphabet, len(x))
    count = 0
    for y in strings_upto(lang.alphabet, len(x)):
        if y > x:
            break
        if y in lang:
            count += 1
    return count


def _first_reaching(
    lang: Language, form: RankForm, target: int, high: int
) -> tuple[int, int]:
    """Least Σ*-index ranked at least target (high if none), and the lookups spent."""
    low, hi, lookups = 0, high, 0
    while low < hi:
        mid = (low + hi) // 2
        lookups += 1
        if form(unrank(mid, lang.alphabet)) >= target:
            hi = mid
        else:
            low = mid + 1
    return low, lookups


def _locate(lang: Language, r: int, nmax: int) -> tuple[Str, int]:
    """The member of rank r and the number of lookups spent finding it."""
    if r < 1:
        raise PreconditionError(f"Ranks start at 1, got {r}")
    k = lang.alphabet.size
    high = band_start(k, nmax + 1)
    rank_form = lang.rank_closed_form
    if rank_form is not None:
        at, lookups = _first_reaching(lang, rank_form, r, high)
        if at < high:
            x = unrank(at, lang.alphabet)
            lookups += 1
            if rank_form(x) == r and x in lang:
                return x, lookups
        last_below = _first_reaching(lang, rank_form, r - 1, high)[0] if r > 1 else 0
        bracket = (min(last_below, at), at)
    else:
        ensure_enumerable(lang.alphabet, nmax)
        lookups, seen, last_below = 0, 0, 0
        for x in strings_upto(lang.alphabet, nmax):
            lookups += 1
            if x in lang:
                seen += 1
                if seen == r:
                    return x, lookups
                last_below = rank(x)
        bracket = (last_below, high)
    raise RankNotFoundError(
        f"No member of {lang.name} has rank {r} within length {nmax}", *bracket
    )


def rank_inverse(lang: Language, r: int, nmax: int) -> Str:
    """The member x of L with strong_rank(L, x) = r, searched up to length nmax."""
    return _locate(lang, r, nmax)[0]


def rank_witness(lang: Language) -> Equipollence:
    """L ≈ Σ*: the member of rank r goes to the string of index r - 1."""
    if census(lang, 8) <= census(lang, 4):
        raise PreconditionError(
            f"{lang.name} looks finite: no members between lengths 5 and 8"
        )
    alphabet = lang.alphabet
    bits = (alphabet.size - 1).bit_length()

    def forward(x: Str) -> Str | None:
        if x not in lang:
            return None
        return unrank(strong_rank(lang, x) - 1, alphabet)

    def backward(s: Str) -> tuple[Str | None, int]:
        try:
            x, lookups = _locate(lang, rank(s) + 1, 2 * len(s) + 4)
        except RankNotFoundError as e:
            return None, len(s) + e.high.bit_length() + 1
        return x, lookups + len(x) + len(s) + 1

    return witness(
        PartialMap.from_function(
            f"rank_of({lang.name})",
            alphabet,
            alphabet,
            forward,
            TimeBound(2, 1),
            domain=lang,
        ),
        PartialMap(
            name=f"member_at({lang.name})",
            source=alphabet,
            target=alphabet,
            evaluator=backward,
            bound=TimeBound(8 * bits + 8, 1),
        ),
        lang,
        sigma_star(alphabet),
        name=f"rank_witness({lang.name})",
    )


def induced_ordering(
    e: Equipollence, length_relation: Polynomial | None = None
) -> Ordering:
    """x ≺ y iff forward(x) comes before forward(y) in length-lex order."""

    def key(x: Str) -> int:
        y = e.forward(x)
        if y is None:
            raise InvariantBreachError(f"{e.forward.name} is undefined on member {x}")
        return rank(y)

    return Ordering(
        name=f"induced({e.name})",
        domain=e.a,
        key=key,
        length_relation=length_relation,
    )


def census_poly_related(
    a: Language,
    b: Language,
    p: Polynomial,
    q: Polynomial,
    nmax: int,
    logger: logging.Logger = logger,
) -> PolyRelationReport:
    """Check c_A(n) <= c_B(p(n)) and c_B(n) <= c_A(q(n)) for n <= nmax."""
    rows = [
        PolyRelationRow(
            n=n,
            a_count=census(a, n),
            b_at_p=census(b, p(n)),
            b_count=census(b, n),
            a_at_q=census(a, q(n)),
        )
        for n in range(nmax + 1)
    ]
    report = PolyRelationReport(a=a.name, b=b.name, p=str(p), q=str(q), rows=rows)
    if report.passes:
        logger.info(f"{a.name} and {b.name}: censuses related up to {nmax}")
    else:
        logger.info(f"{a.name} and {b.name}: relation fails at n = {report.failures}")
    return report


def exp_density_check(lang: Language, c_exp: float, nmax: int = 16) -> DensityVerdict:
    """
    Estimate the least a with c_L(n) >= 2^(a·n^c_exp) over n in [nmax/2, nmax].

    The estimate passes when it is positive and does not decay by more than a
    quarter across the window.
    """
    start = max(1, nmax // 2)
    estimates: dict[int, float] = {}
    for n in range(start, nmax + 1):
        count = census(lang, n)
        estimates[n] = math.log2(count) / n**c_exp if count > 1 else 0.0
    constant = min(estimates.values())
    passes = constant > 0 and estimates[nmax] > 0.75 * estimates[start]
    return DensityVerdict(
        language=lang.name,
        c_exp=c_exp,
        window=(start, nmax),
        constant=constant,
        passes=passes,
    )

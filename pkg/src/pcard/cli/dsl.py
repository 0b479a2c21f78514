"""
The expression language used on the command line.

    expr  := NAME "(" [arg ("," arg)*] ")" | list | STRING | INT
    arg   := [NAME "="] expr
    list  := "[" [expr ("," expr)*] "]"

Strings are written `"<size>:<digits>"`. Every object built here is named by
the canonical text of the expression that built it, so `show(parse(t))` is
also the object's name.
"""

import re
from collections.abc import Callable
from .._compat import StrEnum
from typing import Any

from pydantic import BaseModel, ConfigDict

from ..cantor_bernstein import cb_witness
from ..choice import refine_uniformize
from ..exceptions import DSLSyntaxError, DSLTypeError, InvalidStringError
from ..findiff import findiff_witness, transfer_countability
from ..iso_tools import (
    compress_extend,
    cylinder_witness,
    decider_from_reduction,
    ghk_iso,
    iso_from_complements,
    reduction_from_witness,
)
from ..languages import GALLERY
from ..maps import MAP_GALLERY, compose_maps, injection, restrict
from ..models.chain import Injection
from ..models.collection import Collection, MultiMap
from ..models.equipollence import Equipollence
from ..models.findiff import FiniteDiff
from ..models.language import Language
from ..models.partial_map import PartialMap
from ..models.polynomial import Polynomial
from ..models.string import Str
from ..ranking import rank_witness
from ..witnesses import (
    alphabet_witness,
    compose_witness,
    distributor,
    identity_witness,
    inverse,
    oplus_associator,
    oplus_commutator,
    oplus_empty_unit,
    oplus_witness,
    prepend_witness,
    shift_witness,
    sigma_self_product,
    sigma_self_sum,
    times_associator,
    times_commutator,
    times_unit,
    times_witness,
)

# Syntax


class Literal(BaseModel):
    model_config = ConfigDict(frozen=True)

    value: int | str
    position: int = 0


class ListExpr(BaseModel):
    model_config = ConfigDict(frozen=True)

    items: list["Expr"]
    position: int = 0


class Call(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    args: list["Expr"] = []
    kwargs: dict[str, "Expr"] = {}
    position: int = 0


Expr = Literal | ListExpr | Call
ListExpr.model_rebuild()
Call.model_rebuild()

_TOKEN = re.compile(
    r"""
    (?P<space>\s+)
    | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
    | (?P<int>-?\d+)
    | (?P<string>"[^"]*")
    | (?P<punct>[()\[\],=])
    """,
    re.VERBOSE,
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            raise DSLSyntaxError(f"unexpected character {text[pos]!r}", pos)
        kind = match.lastgroup
        assert kind is not None
        if kind != "space":
            tokens.append((kind, match.group(), pos))
        pos = match.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str) -> None:
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def take(
        self, value: str | None = None, kind: str | None = None
    ) -> tuple[str, str, int]:
        token = self.peek()
        wrong_value = value is not None and token[1] != value
        if wrong_value or (kind is not None and token[0] != kind):
            wanted = repr(value) if value is not None else kind
            found = repr(token[1]) if token[0] != "end" else "end of input"
            raise DSLSyntaxError(f"expected {wanted}, found {found}", token[2])
        self.i += 1
        return token

    def expr(self) -> Expr:
        kind, value, pos = self.peek()
        match kind:
            case "int":
                self.i += 1
                return Literal(value=int(value), position=pos)
            case "string":
                self.i += 1
                return Literal(value=value[1:-1], position=pos)
            case "punct" if value == "[":
                self.i += 1
                items = self.sequence("]")
                return ListExpr(items=[item for _, item in items], position=pos)
            case "name":
                self.i += 1
                self.take("(")
                args: list[Expr] = []
                kwargs: dict[str, Expr] = {}
                for key, item in self.sequence(")", keywords=True):
                    if key is None:
                        if kwargs:
                            raise DSLSyntaxError(
                                "positional argument after keyword argument",
                                item.position,
                            )
                        args.append(item)
                    else:
                        kwargs[key] = item
                return Call(name=value, args=args, kwargs=kwargs, position=pos)
        if value:
            raise DSLSyntaxError(f"expected an expression, found {value!r}", pos)
        raise DSLSyntaxError("unexpected end of input", pos)

    def sequence(
        self, close: str, keywords: bool = False
    ) -> list[tuple[str | None, Expr]]:
        items: list[tuple[str | None, Expr]] = []
        if self.peek()[1] == close:
            self.i += 1
            return items
        while True:
            key = None
            named = self.peek()[0] == "name" and self.tokens[self.i + 1][1] == "="
            if keywords and named:
                key = self.take(kind="name")[1]
                self.take("=")
            items.append((key, self.expr()))
            if self.peek()[1] == close:
                self.i += 1
                return items
            self.take(",")


def parse(text: str) -> Expr:
    parser = _Parser(text)
    tree = parser.expr()
    parser.take(kind="end")
    return tree


def show(expr: Expr) -> str:
    """Canonical text of an expression."""
    match expr:
        case Literal(value=str() as s):
            return f'"{s}"'
        case Literal(value=int() as n):
            return str(n)
        case ListExpr(items=items):
            return "[" + ", ".join(show(item) for item in items) + "]"
        case Call(name=name, args=args, kwargs=kwargs):
            parts = [show(arg) for arg in args]
            parts.extend(f"{key}={show(value)}" for key, value in kwargs.items())
            return f"{name}({', '.join(parts)})"
    raise TypeError(f"not an expression: {expr!r}")


# Kinds and the builder registry


class Kind(StrEnum):
    INT = "int"
    STRING = "string"
    LIST = "list"
    LANGUAGE = "language"
    DIFF = "diff"
    MAP = "map"
    INJECTION = "injection"
    WITNESS = "witness"
    COLLECTION = "collection"
    MULTIMAP = "multimap"


def kind_of(value: Any) -> Kind:
    match value:
        case bool():
            raise TypeError("booleans are not expression values")
        case int():
            return Kind.INT
        case Str():
            return Kind.STRING
        case list():
            return Kind.LIST
        case FiniteDiff():
            return Kind.DIFF
        case Language():
            return Kind.LANGUAGE
        case PartialMap():
            return Kind.MAP
        case Injection():
            return Kind.INJECTION
        case Equipollence():
            return Kind.WITNESS
        case Collection():
            return Kind.COLLECTION
        case MultiMap():
            return Kind.MULTIMAP
    raise TypeError(f"{type(value).__name__} is not an expression value")


class Builder(BaseModel):
    """How to build one named construction: parameter kinds and result kind."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    fn: Callable[..., Any]
    params: list[Kind]
    optional: int = 0
    keywords: dict[str, Kind] = {}
    result: Kind

    def check(
        self, name: str, args: list[Any], kwargs: dict[str, Any], position: int
    ) -> list[Any]:
        """Arity and kind checks; returns the positional arguments, coerced."""
        required = len(self.params) - self.optional
        if not required <= len(args) <= len(self.params):
            arity = str(required)
            if self.optional:
                arity = f"{required}..{len(self.params)}"
            raise DSLTypeError(
                f"wrong number of arguments to {name} at position {position}",
                f"{arity} argument(s)",
                str(len(args)),
            )
        for key, value in kwargs.items():
            if key not in self.keywords:
                raise DSLTypeError(
                    f"unknown keyword for {name} at position {position}",
                    ", ".join(sorted(self.keywords)) or "no keywords",
                    key,
                )
            _coerce(value, self.keywords[key], f"keyword {key} of {name}")
        return [
            _coerce(value, kind, f"argument {i + 1} of {name} at position {position}")
            for i, (value, kind) in enumerate(zip(args, self.params, strict=False))
        ]


def _coerce(value: Any, kind: Kind, context: str) -> Any:
    actual = kind_of(value)
    if actual == kind:
        return value
    if actual == Kind.DIFF and kind == Kind.LANGUAGE:
        return value.derived()
    raise DSLTypeError(context, kind.value, actual.value)


def _items(name: str, items: list[Any], kind: Kind) -> list[Any]:
    for item in items:
        _coerce(item, kind, f"list items of {name}")
    return items


def _polynomial(name: str, coefficients: list[Any] | None) -> Polynomial | None:
    if coefficients is None:
        return None
    return Polynomial(_items(name, coefficients, Kind.INT))


L, M, W, S, N = Kind.LANGUAGE, Kind.MAP, Kind.WITNESS, Kind.STRING, Kind.INT

BUILDERS: dict[str, Builder] = {
    # languages
    "sigma_star": Builder(fn=GALLERY["sigma_star"], params=[N], result=L),
    "empty": Builder(fn=GALLERY["empty"], params=[N], result=L),
    "finite": Builder(
        fn=lambda members, size=None: GALLERY["finite"](
            _items("finite", members, S), size
        ),
        params=[Kind.LIST, N],
        optional=1,
        result=L,
    ),
    "complement": Builder(fn=GALLERY["complement"], params=[L], result=L),
    "oplus": Builder(fn=GALLERY["oplus"], params=[L, L], result=L),
    "times": Builder(fn=GALLERY["times"], params=[L, L], result=L),
    "prefix": Builder(fn=GALLERY["prefix"], params=[S, L], optional=1, result=L),
    "shift_set": Builder(fn=GALLERY["shift_set"], params=[N, N], result=L),
    "tower_gap_A0": Builder(fn=GALLERY["tower_gap_A0"], params=[N], result=L),
    "tower_gap_A1": Builder(fn=GALLERY["tower_gap_A1"], params=[N], result=L),
    "dedekind": Builder(fn=GALLERY["dedekind"], params=[N], result=L),
    "suffix_graph": Builder(fn=GALLERY["suffix_graph"], params=[N], result=L),
    "diff": Builder(
        fn=lambda base, added, removed: FiniteDiff(
            base=base,
            added=_items("diff", added, S),
            removed=_items("diff", removed, S),
        ),
        params=[L, Kind.LIST, Kind.LIST],
        result=Kind.DIFF,
    ),
    "decide_via": Builder(fn=decider_from_reduction, params=[M, L], result=L),
    # maps
    "identity": Builder(
        fn=MAP_GALLERY["identity"], params=[N, L], optional=1, result=M
    ),
    "prepend": Builder(fn=MAP_GALLERY["prepend"], params=[S], result=M),
    "append": Builder(fn=MAP_GALLERY["append"], params=[S], result=M),
    "strip": Builder(fn=MAP_GALLERY["strip"], params=[S], result=M),
    "strip_suffix": Builder(fn=MAP_GALLERY["strip_suffix"], params=[S], result=M),
    "successor": Builder(fn=MAP_GALLERY["successor"], params=[N], result=M),
    "predecessor": Builder(fn=MAP_GALLERY["predecessor"], params=[N], result=M),
    "constant": Builder(fn=MAP_GALLERY["constant"], params=[S], result=M),
    "flip_at": Builder(fn=MAP_GALLERY["flip_at"], params=[N, N], result=M),
    "flip_head": Builder(fn=MAP_GALLERY["flip_head"], params=[N], result=M),
    "rehead": Builder(fn=MAP_GALLERY["rehead"], params=[S, S], result=M),
    "empty_map": Builder(fn=MAP_GALLERY["empty_map"], params=[N], result=M),
    "then": Builder(fn=compose_maps, params=[M, M], result=M),
    "restrict": Builder(fn=restrict, params=[M, L], result=M),
    "reduce": Builder(fn=reduction_from_witness, params=[W, S], result=M),
    "compress": Builder(fn=compress_extend, params=[W, L], result=M),
    "uniformize": Builder(fn=refine_uniformize, params=[Kind.MULTIMAP], result=M),
    "injection": Builder(fn=injection, params=[M, M], result=Kind.INJECTION),
    # witnesses
    "identity_w": Builder(fn=identity_witness, params=[L], result=W),
    "prepend_w": Builder(fn=prepend_witness, params=[S, L], optional=1, result=W),
    "sigma_self_sum": Builder(fn=sigma_self_sum, params=[N], result=W),
    "sigma_self_product": Builder(fn=sigma_self_product, params=[N], result=W),
    "shift": Builder(fn=shift_witness, params=[N, N], result=W),
    "alphabet_witness": Builder(fn=alphabet_witness, params=[N, N], result=W),
    "compose": Builder(fn=compose_witness, params=[W, W], result=W),
    "oplus_w": Builder(fn=oplus_witness, params=[W, W], result=W),
    "times_w": Builder(fn=times_witness, params=[W, W], result=W),
    "inverse": Builder(fn=inverse, params=[W], result=W),
    "oplus_commutator": Builder(fn=oplus_commutator, params=[L, L], result=W),
    "oplus_associator": Builder(fn=oplus_associator, params=[L, L, L], result=W),
    "oplus_empty_unit": Builder(fn=oplus_empty_unit, params=[L], result=W),
    "times_commutator": Builder(fn=times_commutator, params=[L, L], result=W),
    "times_unit": Builder(fn=times_unit, params=[L], result=W),
    "times_associator": Builder(fn=times_associator, params=[L, L, L], result=W),
    "distributor": Builder(fn=distributor, params=[L, L, L], result=W),
    "cb": Builder(
        fn=cb_witness, params=[Kind.INJECTION, Kind.INJECTION, L, L], result=W
    ),
    "rank_witness": Builder(fn=rank_witness, params=[L], result=W),
    "transfer": Builder(fn=transfer_countability, params=[W, Kind.DIFF], result=W),
    "findiff_w": Builder(
        fn=findiff_witness, params=[Kind.DIFF, Kind.DIFF], result=W
    ),
    # the deciders of these constructions are the witnesses' own domains
    "iso": Builder(
        fn=lambda e, ec: iso_from_complements(e, ec, e.a), params=[W, W], result=W
    ),
    "ghk": Builder(
        fn=lambda fa, fac, gb, gbc: ghk_iso(fa, fac, gb, gbc, fa.a, gb.a),
        params=[W, W, W, W],
        result=W,
    ),
    "cylinder": Builder(
        fn=lambda ea, eac: cylinder_witness(ea, eac, ea.a), params=[W, W], result=W
    ),
    # collections
    "collection": Builder(
        fn=lambda carrier, p, q: Collection(
            carrier=carrier,
            p_low=_polynomial("collection", p),
            q_high=_polynomial("collection", q),
        ),
        params=[L],
        keywords={"p": Kind.LIST, "q": Kind.LIST},
        result=Kind.COLLECTION,
    ),
    "multimap": Builder(
        fn=lambda graph, low=None, high=None: MultiMap(
            graph=graph,
            low=_polynomial("multimap", low),
            high=_polynomial("multimap", high),
        ),
        params=[L],
        keywords={"low": Kind.LIST, "high": Kind.LIST},
        result=Kind.MULTIMAP,
    ),
}


def evaluate(expr: Expr) -> Any:
    """Build the object an expression denotes."""
    match expr:
        case Literal(value=int() as n):
            return n
        case Literal(value=str() as text, position=pos):
            try:
                return Str.parse(text)
            except InvalidStringError as e:
                raise DSLSyntaxError(f"bad string literal {text!r}: {e}", pos) from e
        case ListExpr(items=items):
            return [evaluate(item) for item in items]
        case Call(name=name, args=args, kwargs=kwargs, position=pos):
            builder = BUILDERS.get(name)
            if builder is None:
                raise DSLSyntaxError(f"unknown name {name!r}", pos)
            values = [evaluate(arg) for arg in args]
            named = {key: evaluate(value) for key, value in kwargs.items()}
            return builder.fn(*builder.check(name, values, named, pos), **named)
    raise TypeError(f"not an expression: {expr!r}")


def build(text: str, expected: Kind | None = None) -> Any:
    """Parse and evaluate; with `expected`, also check the kind of the result."""
    value = evaluate(parse(text))
    if expected is None:
        return value
    return _coerce(value, expected, f"expression {text!r}")

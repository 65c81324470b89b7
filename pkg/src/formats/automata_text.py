"""
Line-oriented text format for acceptors and transducers.

One ``key: values`` item per line; a token starting with ``#`` starts a
comment that runs to the end of the line.

Acceptor::

    alphabet: a b c
    states: s0 s1
    initial: s0
    accepting: s0 s1
    trans: s0 a s1

Transducer::

    input: a b
    output: 0 1
    states: q0 q1
    initial: q0
    label: q0 1
    trans: q0 a q1

Transducers must be complete: exactly one ``trans`` line per state and
input symbol.
"""

import logging
from dataclasses import dataclass, field
from pathlib import Path

from pydantic import ValidationError

from src.core.errors import AutomatonInputError, ParseError
from src.models.automata import Alphabet, Nfa, Transducer

logger = logging.getLogger(__name__)

COMMENT = "#"

NFA_SINGLE_KEYS = ("alphabet", "states", "initial", "accepting")
TRANSDUCER_SINGLE_KEYS = ("input", "output", "states", "initial")


@dataclass
class _Item:
    key: str
    values: list[str]
    line_number: int


@dataclass
class _Document:
    single: dict[str, _Item] = field(default_factory=dict)
    repeated: dict[str, list[_Item]] = field(default_factory=dict)


def _tokenize(line: str) -> list[str]:
    tokens = line.split()
    for i, token in enumerate(tokens):
        if token.startswith(COMMENT):
            return tokens[:i]
    return tokens


def _read_items(text: str, source: str | None) -> list[_Item]:
    items = []
    for number, raw in enumerate(text.splitlines(), start=1):
        tokens = _tokenize(raw)
        if not tokens:
            continue
        head = tokens[0]
        if head.endswith(":"):
            key, rest = head[:-1], tokens[1:]
        elif ":" in head:
            key, first = head.split(":", 1)
            rest = [first, *tokens[1:]]
        else:
            raise ParseError(f"expected 'key: values', got {raw.strip()!r}", number, source)
        items.append(_Item(key.strip().lower(), rest, number))
    return items


def _collect(
    text: str, single_keys: tuple[str, ...], repeated_keys: tuple[str, ...], source: str | None
) -> _Document:
    doc = _Document(repeated={key: [] for key in repeated_keys})
    for item in _read_items(text, source):
        if item.key in single_keys:
            if item.key in doc.single:
                first = doc.single[item.key].line_number
                raise ParseError(
                    f"'{item.key}' already given on line {first}", item.line_number, source
                )
            doc.single[item.key] = item
        elif item.key in repeated_keys:
            doc.repeated[item.key].append(item)
        else:
            raise ParseError(f"unknown key '{item.key}'", item.line_number, source)
    for key in single_keys:
        if key not in doc.single:
            raise ParseError(f"missing '{key}' line", None, source)
    return doc


def _one(item: _Item, source: str | None) -> str:
    if len(item.values) != 1:
        raise ParseError(f"'{item.key}' takes exactly one value", item.line_number, source)
    return item.values[0]


def _alphabet(item: _Item, source: str | None) -> Alphabet:
    if not item.values:
        raise ParseError(f"'{item.key}' needs at least one symbol", item.line_number, source)
    try:
        return Alphabet(symbols=tuple(item.values))
    except (ValidationError, AutomatonInputError) as exc:
        raise ParseError(_reason(exc), item.line_number, source) from exc


def _reason(exc: Exception) -> str:
    if isinstance(exc, ValidationError):
        return "; ".join(str(error.get("msg", "")) for error in exc.errors())
    return str(exc)


def _check_names(
    values: list[str], known: set[str], what: str, item: _Item, source: str | None
) -> None:
    for value in values:
        if value not in known:
            raise ParseError(f"unknown {what} {value!r}", item.line_number, source)


def parse_nfa(text: str, source: str | None = None) -> Nfa:
    """
    Parse an acceptor.

    Raises:
        ParseError: With the offending line number where one applies
    """
    doc = _collect(text, NFA_SINGLE_KEYS, ("trans",), source)
    alphabet = _alphabet(doc.single["alphabet"], source)
    states_item = doc.single["states"]
    states = set(states_item.values)
    if not states:
        raise ParseError("'states' needs at least one state", states_item.line_number, source)
    initial_item = doc.single["initial"]
    initial = _one(initial_item, source)
    _check_names([initial], states, "state", initial_item, source)
    accepting_item = doc.single["accepting"]
    _check_names(accepting_item.values, states, "state", accepting_item, source)

    transitions = []
    for item in doc.repeated["trans"]:
        if len(item.values) != 3:
            raise ParseError("'trans' takes 'source symbol target'", item.line_number, source)
        src, symbol, target = item.values
        _check_names([src, target], states, "state", item, source)
        _check_names([symbol], set(alphabet.symbols), "symbol", item, source)
        transitions.append((src, symbol, target))
    try:
        nfa = Nfa(
            alphabet=alphabet,
            states=tuple(states_item.values),
            initial=initial,
            accepting=frozenset(accepting_item.values),
            transitions=tuple(transitions),
        )
    except (ValidationError, AutomatonInputError) as exc:
        raise ParseError(_reason(exc), None, source) from exc
    logger.debug(f"Parsed acceptor with {nfa.size} states from {source or 'text'}")
    return nfa


def parse_transducer(text: str, source: str | None = None) -> Transducer:
    """
    Parse a complete transducer.

    Raises:
        ParseError: On a syntax error, a duplicate or missing transition or label
    """
    doc = _collect(text, TRANSDUCER_SINGLE_KEYS, ("label", "trans"), source)
    sigma_i = _alphabet(doc.single["input"], source)
    sigma_o = _alphabet(doc.single["output"], source)
    states_item = doc.single["states"]
    order = states_item.values
    states = set(order)
    if not states:
        raise ParseError("'states' needs at least one state", states_item.line_number, source)
    initial_item = doc.single["initial"]
    initial = _one(initial_item, source)
    _check_names([initial], states, "state", initial_item, source)

    label: dict[str, str] = {}
    for item in doc.repeated["label"]:
        if len(item.values) != 2:
            raise ParseError("'label' takes 'state symbol'", item.line_number, source)
        state, symbol = item.values
        _check_names([state], states, "state", item, source)
        _check_names([symbol], set(sigma_o.symbols), "output symbol", item, source)
        if state in label:
            raise ParseError(f"second label for state {state!r}", item.line_number, source)
        label[state] = symbol

    delta: dict[str, dict[str, str]] = {state: {} for state in order}
    for item in doc.repeated["trans"]:
        if len(item.values) != 3:
            raise ParseError("'trans' takes 'source symbol target'", item.line_number, source)
        src, symbol, target = item.values
        _check_names([src, target], states, "state", item, source)
        _check_names([symbol], set(sigma_i.symbols), "input symbol", item, source)
        if symbol in delta[src]:
            raise ParseError(
                f"second transition from {src!r} on {symbol!r}; transducers are deterministic",
                item.line_number,
                source,
            )
        delta[src][symbol] = target

    for state in order:
        if state not in label:
            raise ParseError(f"state {state!r} has no label", None, source)
        for symbol in sigma_i.symbols:
            if symbol not in delta[state]:
                raise ParseError(
                    f"partial transducer: no transition from {state!r} on {symbol!r}", None, source
                )
    try:
        return Transducer(
            input_alphabet=sigma_i,
            output_alphabet=sigma_o,
            states=tuple(order),
            initial=initial,
            delta=delta,
            label=label,
        )
    except (ValidationError, AutomatonInputError) as exc:
        raise ParseError(_reason(exc), None, source) from exc


def dump_nfa(n: Nfa) -> str:
    lines = [
        f"alphabet: {' '.join(n.alphabet.symbols)}",
        f"states: {' '.join(n.states)}",
        f"initial: {n.initial}",
        f"accepting: {' '.join(s for s in n.states if s in n.accepting)}",
    ]
    lines.extend(f"trans: {src} {symbol} {target}" for src, symbol, target in n.transitions)
    return "\n".join(lines) + "\n"


def dump_transducer(t: Transducer) -> str:
    lines = [
        f"input: {' '.join(t.input_alphabet.symbols)}",
        f"output: {' '.join(t.output_alphabet.symbols)}",
        f"states: {' '.join(t.states)}",
        f"initial: {t.initial}",
    ]
    lines.extend(f"label: {state} {t.label[state]}" for state in t.states)
    lines.extend(
        f"trans: {state} {symbol} {t.delta[state][symbol]}"
        for state in t.states
        for symbol in t.input_alphabet.symbols
    )
    return "\n".join(lines) + "\n"


def _read(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read file: {exc.strerror or exc}", None, str(path)) from exc
    except UnicodeDecodeError as exc:
        raise ParseError(f"not UTF-8 text: {exc.reason}", None, str(path)) from exc


def load_nfa(path: str | Path) -> Nfa:
    path = Path(path)
    return parse_nfa(_read(path), str(path))


def load_transducer(path: str | Path) -> Transducer:
    path = Path(path)
    return parse_transducer(_read(path), str(path))

"""
Instance generators.

Factories for the standard benchmark transducers: the round-robin
scheduler, the prime-spoke family that forces long rounds, the reduction
from NFA universality, and a few small named fixtures.
"""

import logging
from math import ceil, log2, prod

from sympy import prime

from src.core.automata import universal_nfa
from src.core.errors import AutomatonInputError, BudgetExceeded
from src.core.oracles import oracle_nfa_universality
from src.models.automata import Alphabet, Nfa, Transducer, fresh_name
from src.models.instances import ExpectedVerdict, InstanceBundle, Provenance, Relation
from src.models.symmetry import ProcessAlphabet, parse_subset, subset_name

logger = logging.getLogger(__name__)

TOP = "top"
BOT = "bot"
PAD = "pad"

# First k at which the prime family's simulation holds, by exhaustive evaluation
PRIME_FAMILY_FIRST_K = {1: 1, 2: 4}


# =============================================================================
# Round robin
# =============================================================================


def gen_round_robin(m: int, start: int) -> Transducer:
    """
    Round-robin scheduler over process sets.

    State ``q{i}`` means process i was granted (label ``{i}``), ``q{i}'``
    means its turn passed without a request (label ``{}``). From either, the
    turn moves to ``i+1 mod m``, granted iff that process is in the input.
    The scheduler with ``start`` grants process ``start`` first.

    Raises:
        AutomatonInputError: If m < 2 or start is not a process
    """
    if m < 2:
        raise AutomatonInputError("round robin needs at least two processes")
    if not 0 <= start < m:
        raise AutomatonInputError(f"start process {start} is not in 0..{m - 1}")
    alphabet = ProcessAlphabet(m=m).alphabet
    granted = [f"q{i}" for i in range(m)]
    passed = [f"q{i}'" for i in range(m)]
    delta: dict[str, dict[str, str]] = {}
    for i in range(m):
        nxt = (i + 1) % m
        row = {
            sigma: granted[nxt] if nxt in parse_subset(sigma, m) else passed[nxt]
            for sigma in alphabet.symbols
        }
        delta[granted[i]] = row
        delta[passed[i]] = dict(row)
    label = {granted[i]: subset_name([i]) for i in range(m)}
    label.update({passed[i]: subset_name([]) for i in range(m)})
    return Transducer(
        input_alphabet=alphabet,
        output_alphabet=alphabet,
        states=(*granted, *passed),
        initial=granted[(start - 1) % m],
        delta=delta,
        label=label,
    )


def gen_round_robin_bundle(m: int, i: int, j: int) -> InstanceBundle:
    t1 = gen_round_robin(m, i)
    return InstanceBundle(
        name=f"round-robin-m{m}-{i}-{j}",
        t1=t1,
        t2=gen_round_robin(m, j),
        lambda_=universal_nfa(t1.input_alphabet),
        expected=(
            ExpectedVerdict(
                relation=Relation.EQUIVALENT,
                k=m,
                holds=True,
                provenance=Provenance.PUBLISHED,
                note="schedulers with different starting processes agree on m-rounds",
            ),
        ),
    )


# =============================================================================
# Small fixtures
# =============================================================================


def gen_constant_transducer(m: int) -> Transducer:
    """One state labelled ``{}`` over the process sets of m processes."""
    alphabet = ProcessAlphabet(m=m).alphabet
    return Transducer(
        input_alphabet=alphabet,
        output_alphabet=alphabet,
        states=("c",),
        initial="c",
        delta={"c": {sigma: "c" for sigma in alphabet.symbols}},
        label={"c": subset_name([])},
    )


def gen_single_process_watcher(m: int, process: int = 0) -> Transducer:
    """Outputs ``{process}`` exactly when the process is in the input, else ``{}``."""
    if not 0 <= process < m:
        raise AutomatonInputError(f"process {process} is not in 0..{m - 1}")
    alphabet = ProcessAlphabet(m=m).alphabet
    row = {
        sigma: "on" if process in parse_subset(sigma, m) else "off" for sigma in alphabet.symbols
    }
    return Transducer(
        input_alphabet=alphabet,
        output_alphabet=alphabet,
        states=("off", "on"),
        initial="off",
        delta={"off": row, "on": dict(row)},
        label={"off": subset_name([]), "on": subset_name([process])},
    )


def gen_example_asymmetric() -> InstanceBundle:
    """
    Two five-state transducers over {a, b} / {0, 1} where only one direction simulates.

    t1(ab) = t1(ba) = 01 and t2(ab) = 00, so t2 simulates t1 at k = 2 but not
    the other way round.
    """
    sigma_i = Alphabet.of("a", "b")
    sigma_o = Alphabet.of("0", "1")
    states = ("q0", "qa", "qb", "qbb", "sink")
    step = {
        ("q0", "a"): "qa",
        ("q0", "b"): "qb",
        ("qa", "a"): "sink",
        ("qa", "b"): "q0",
        ("qb", "a"): "q0",
        ("qb", "b"): "qbb",
        ("qbb", "a"): "sink",
        ("qbb", "b"): "sink",
        ("sink", "a"): "sink",
        ("sink", "b"): "sink",
    }
    label1 = {"q0": "1", "qa": "0", "qb": "0", "qbb": "1", "sink": "1"}
    label2 = {"q0": "0", "qa": "0", "qb": "1", "qbb": "0", "sink": "1"}
    t1 = Transducer.from_tables(sigma_i, sigma_o, states, "q0", step, label1)
    t2 = Transducer.from_tables(sigma_i, sigma_o, states, "q0", step, label2)
    return InstanceBundle(
        name="asymmetric-example",
        t1=t1,
        t2=t2,
        lambda_=universal_nfa(sigma_i),
        expected=(
            ExpectedVerdict(
                relation=Relation.SIMULATES, k=2, holds=True, provenance=Provenance.PUBLISHED
            ),
            ExpectedVerdict(
                relation=Relation.SIMULATES,
                k=1,
                holds=False,
                provenance=Provenance.DERIVED,
                note="single letters cannot be reordered",
            ),
            ExpectedVerdict(
                relation=Relation.EQUIVALENT,
                k=2,
                holds=False,
                provenance=Provenance.PUBLISHED,
                note="t2(ab) = 00 has no 2-round equivalent output of t1",
            ),
            ExpectedVerdict(
                relation=Relation.EXISTENTIAL, k=2, holds=True, provenance=Provenance.PUBLISHED
            ),
        ),
    )


# =============================================================================
# Prime family
# =============================================================================


def gen_prime_family(m: int, max_m: int = 4) -> InstanceBundle:
    """
    The m-cycle identity transducer against a hub with spokes of prime lengths.

    Processes are ``1..m``. t1 echoes inputs from ``({1}{2}...{m})*``; t2 reads
    a letter ``{i}`` at the hub or at the end of a spoke and then emits
    ``{i}`` for ``p_i`` steps, ``p_i`` the i-th prime. Undefined moves of
    either transducer go to a sink labelled ``{}``.

    Raises:
        AutomatonInputError: If m is not in 1..max_m
    """
    if not 1 <= m <= max_m:
        raise AutomatonInputError(f"prime family size {m} is not in 1..{max_m}")
    primes = [int(prime(i)) for i in range(1, m + 1)]
    letters = [subset_name([i]) for i in range(1, m + 1)]
    empty = subset_name([])
    sigma_i = Alphabet(symbols=tuple(letters))
    sigma_o = Alphabet(symbols=(empty, *letters))

    # t1: s1..sm, start at sm, expects the next process in cyclic order
    cycle = [f"s{i}" for i in range(1, m + 1)]
    sink1 = fresh_name("sink", cycle)
    step1: dict[tuple[str, str], str] = {}
    for i in range(1, m + 1):
        nxt = i % m + 1
        for letter in letters:
            step1[(cycle[i - 1], letter)] = cycle[nxt - 1] if letter == letters[nxt - 1] else sink1
    for letter in letters:
        step1[(sink1, letter)] = sink1
    label1 = {cycle[i - 1]: letters[i - 1] for i in range(1, m + 1)}
    label1[sink1] = empty
    t1 = Transducer.from_tables(sigma_i, sigma_o, [*cycle, sink1], cycle[-1], step1, label1)

    # t2: hub s0 and spoke states s{i}_{j}, j = 1..p_i
    spokes = {i: [f"s{i}_{j}" for j in range(1, primes[i - 1] + 1)] for i in range(1, m + 1)}
    states2 = ["s0", *(s for i in range(1, m + 1) for s in spokes[i])]
    sink2 = fresh_name("sink", states2)
    step2: dict[tuple[str, str], str] = {}
    label2 = {"s0": empty, sink2: empty}
    for i, letter in enumerate(letters, start=1):
        step2[("s0", letter)] = spokes[i][0]
        step2[(sink2, letter)] = sink2
    for i in range(1, m + 1):
        for j, state in enumerate(spokes[i]):
            label2[state] = letters[i - 1]
            for ell, target_letter in enumerate(letters, start=1):
                if j + 1 < len(spokes[i]):
                    step2[(state, target_letter)] = spokes[i][j + 1]
                else:
                    step2[(state, target_letter)] = spokes[ell][0]
    t2 = Transducer.from_tables(sigma_i, sigma_o, [*states2, sink2], "s0", step2, label2)

    # restriction ({1}{2}...{m})*
    phases = [f"l{i}" for i in range(m)]
    lam = Nfa(
        alphabet=sigma_i,
        states=tuple(phases),
        initial=phases[0],
        accepting=frozenset({phases[0]}),
        transitions=tuple((phases[i], letters[i], phases[(i + 1) % m]) for i in range(m)),
    )

    witness = m * prod(primes)
    expected = [
        ExpectedVerdict(
            relation=Relation.SIMULATES,
            k=witness,
            holds=True,
            provenance=Provenance.PUBLISHED,
            note="m times the product of the first m primes",
        )
    ]
    if m in PRIME_FAMILY_FIRST_K:
        expected.append(
            ExpectedVerdict(
                relation=Relation.EXISTENTIAL,
                k=PRIME_FAMILY_FIRST_K[m],
                holds=True,
                provenance=Provenance.DERIVED,
                note="spoke blocks may straddle round boundaries",
            )
        )
    logger.info(f"Prime family m={m}: primes {primes}, |t2| = {t2.size}, witness k = {witness}")
    return InstanceBundle(
        name=f"primes-m{m}", t1=t1, t2=t2, lambda_=lam, expected=tuple(expected)
    )


# =============================================================================
# Universality reduction
# =============================================================================


def _targets(n: Nfa, state: str, letter: str) -> list[str]:
    row = n.successors(n.alphabet.index_of(letter), n.state_index(state))
    return [n.states[t] for t in range(n.size) if row >> t & 1]


def _check_binary(n: Nfa) -> None:
    if set(n.alphabet.symbols) != {"0", "1"}:
        raise AutomatonInputError(f"expected an acceptor over {{0, 1}}, got {n.alphabet.symbols}")
    if n.accepting != frozenset(n.states):
        raise AutomatonInputError("every state of the acceptor must be accepting")


def normalize_degree(n: Nfa) -> Nfa:
    """
    Universality-preserving rewrite of an all-accepting binary acceptor to degree at most 2.

    Each transition ``q --σ--> {t1..tc}`` becomes ``σ`` into the root of a
    binary tree of ``$`` edges of uniform depth whose leaves are the targets.
    Words that are not encodings fall into an accepting universal sink. The
    alphabet ``{0, 1, $}`` is then re-encoded as ``0 -> 00``, ``1 -> 01``,
    ``$ -> 10``, with ``11`` leading to the sink.

    Returns:
        n itself if its degree is already at most 2

    Raises:
        AutomatonInputError: If n is not over {0, 1} or has a rejecting state
    """
    _check_binary(n)
    if n.degree <= 2:
        return n
    depth = ceil(log2(n.degree))
    sink = fresh_name("U", n.states)

    # Intermediate automaton over {0, 1, $}: moves[state][letter] = list of targets
    moves: dict[str, dict[str, list[str]]] = {q: {"$": [sink]} for q in n.states}
    moves[sink] = {"0": [sink], "1": [sink], "$": [sink]}
    for q in n.states:
        for letter in ("0", "1"):
            targets = _targets(n, q, letter)
            if not targets:
                moves[q][letter] = []
                continue
            root = f"{q}.{letter}."
            moves[q][letter] = [root]
            for level in range(depth):
                for node in range(1 << level):
                    name = f"{q}.{letter}.{format(node, f'0{level}b') if level else ''}"
                    children = []
                    for bit in (0, 1):
                        leaf = (node << 1) | bit
                        if level + 1 == depth:
                            children.append(targets[min(leaf, len(targets) - 1)])
                        else:
                            children.append(f"{q}.{letter}.{format(leaf, f'0{level + 1}b')}")
                    moves[name] = {"0": [sink], "1": [sink], "$": sorted(set(children))}

    # Re-encode every letter as two bits through mid states
    binary = Alphabet.of("0", "1")
    transitions: list[tuple[str, str, str]] = []
    states = list(moves)
    for state in list(moves):
        if state == sink:
            continue
        low, high = f"{state}/0", f"{state}/1"
        states.extend([low, high])
        transitions.append((state, "0", low))
        transitions.append((state, "1", high))
        for target in moves[state].get("0", []):
            transitions.append((low, "0", target))
        for target in moves[state].get("1", []):
            transitions.append((low, "1", target))
        for target in moves[state]["$"]:
            transitions.append((high, "0", target))
        transitions.append((high, "1", sink))
    transitions.append((sink, "0", sink))
    transitions.append((sink, "1", sink))
    normalized = Nfa(
        alphabet=binary,
        states=tuple(states),
        initial=n.initial,
        accepting=frozenset(states),
        transitions=tuple(transitions),
    )
    logger.debug(f"Degree {n.degree} -> {normalized.degree}, {n.size} -> {normalized.size} states")
    return normalized


def _reduction_expectation(
    n: Nfa, padded: bool, cutoff: int | None
) -> tuple[ExpectedVerdict, ...]:
    if cutoff is None:
        return ()
    try:
        universal = oracle_nfa_universality(n, cutoff)
    except BudgetExceeded as exc:
        logger.warning(f"No expected verdict for the reduction: {exc}")
        return ()
    return (
        ExpectedVerdict(
            relation=Relation.EXISTENTIAL_EQUIVALENT if padded else Relation.EQUIVALENT,
            k=None if padded else 2,
            holds=universal,
            provenance=Provenance.DERIVED,
            note="universality of the acceptor by subset construction",
        ),
    )


def _reduction_lambda(padded: bool) -> Nfa:
    symbols = ("a", "b", "c", "d", PAD) if padded else ("a", "b", "c", "d")
    alphabet = Alphabet(symbols=symbols)
    states = ["l0", "la", "lc", "dead"]
    step = {("l0", "a"): "la", ("la", "b"): "l0", ("l0", "c"): "lc", ("lc", "d"): "l0"}
    if padded:
        states.insert(3, "lpad")
        step[("l0", PAD)] = "lpad"
        step[("lpad", PAD)] = "l0"
    transitions = tuple(
        (state, symbol, step.get((state, symbol), "dead")) for state in states for symbol in symbols
    )
    return Nfa(
        alphabet=alphabet,
        states=tuple(states),
        initial="l0",
        accepting=frozenset({"l0"}),
        transitions=transitions,
    )


def gen_universality_reduction(
    n: Nfa, padded: bool = False, cutoff: int | None = 4096
) -> InstanceBundle:
    """
    Transducers that are round equivalent on ``(ab + cd)*`` iff n is universal.

    t1 outputs ``top`` as long as the input follows the restriction and
    ``bot`` forever after. t2 simulates n: a 0-move of n is read as ``ab``
    (first successor) or ``ba`` (second successor), a 1-move as ``cd`` or
    ``dc``; a missing move or any other letter sends it to a ``bot`` sink.
    With ``padded`` both transducers also accept ``pad pad`` blocks, and
    equivalence for some k corresponds to universality.

    With a ``cutoff`` the acceptor's universality is decided by subset
    construction and recorded as the expected equivalence verdict; past the
    cutoff the bundle carries no expectation.

    Raises:
        AutomatonInputError: If n is not an all-accepting acceptor over {0, 1}
    """
    _check_binary(n)
    expected = _reduction_expectation(n, padded, cutoff)
    n = normalize_degree(n)
    lam = _reduction_lambda(padded)
    sigma_i = lam.alphabet
    sigma_o = Alphabet.of(TOP, BOT)
    inputs = sigma_i.symbols

    # t1: follows (ab + cd + pad pad)* and falls into bot otherwise
    states1 = ["q0", "q1", "q2", "q3"] + (["qpad"] if padded else [])
    good1 = {("q0", "a"): "q1", ("q1", "b"): "q0", ("q0", "c"): "q2", ("q2", "d"): "q0"}
    if padded:
        good1[("q0", PAD)] = "qpad"
        good1[("qpad", PAD)] = "q0"
    step1 = {(q, s): good1.get((q, s), "q3") for q in states1 for s in inputs}
    label1 = {q: TOP for q in states1}
    label1["q3"] = BOT
    t1 = Transducer.from_tables(sigma_i, sigma_o, states1, "q0", step1, label1)

    # t2: one hub per state of n plus four half-way states (and a pad state)
    halves = ("a", "b", "c", "d") + ((PAD,) if padded else ())
    names = {q: f"n_{q}" for q in n.states}
    taken = set(names.values()) | {f"n_{q}_{h}" for q in n.states for h in halves}
    bot = fresh_name("bot", taken)
    states2 = [bot]
    step2: dict[tuple[str, str], str] = {}
    label2 = {bot: BOT}
    for q in n.states:
        hub = names[q]
        states2.append(hub)
        label2[hub] = TOP
        for h in halves:
            states2.append(f"{hub}_{h}")
            label2[f"{hub}_{h}"] = TOP
        good: dict[tuple[str, str], str] = {}
        for letter, (first, second) in (("0", ("a", "b")), ("1", ("c", "d"))):
            targets = _targets(n, q, letter)
            if not targets:
                continue
            one = names[targets[0]]
            other = names[targets[1] if len(targets) > 1 else targets[0]]
            good[(hub, first)] = f"{hub}_{first}"
            good[(f"{hub}_{first}", second)] = one
            good[(hub, second)] = f"{hub}_{second}"
            good[(f"{hub}_{second}", first)] = other
        if padded:
            good[(hub, PAD)] = f"{hub}_{PAD}"
            good[(f"{hub}_{PAD}", PAD)] = hub
        for state in [hub, *(f"{hub}_{h}" for h in halves)]:
            for s in inputs:
                step2[(state, s)] = good.get((state, s), bot)
    for s in inputs:
        step2[(bot, s)] = bot
    t2 = Transducer.from_tables(sigma_i, sigma_o, states2, names[n.initial], step2, label2)

    suffix = "-padded" if padded else ""
    return InstanceBundle(
        name=f"universality{suffix}", t1=t1, t2=t2, lambda_=lam, expected=expected
    )

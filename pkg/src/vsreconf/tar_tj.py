"""Equivalence machinery between the TAR and TJ rules.

Canonical alternating normalization of TAR sequences, interleaving /
subsampling conversions between TJ and TAR certificates, detection of
trivially negative TAR instances, and instance-level conversion in both
directions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ContractViolationError, InvalidInstanceError
from .graph import Graph
from .instance import ReconfigInstance, ReconfigSequence, Rule, states_adjacent
from .separators import (
    State,
    check_state,
    is_minimal_separator,
    is_separator,
    shrink_to_minimal,
)


def _check_tar_sequence(g: Graph, s: int, t: int, seq: ReconfigSequence, k: int) -> None:
    if not seq:
        raise ContractViolationError("empty sequence")
    for st in seq:
        check_state(g, s, t, st)
        if not is_separator(g, s, t, st):
            raise ContractViolationError("sequence state is not a separator")
        if len(st) > k:
            raise ContractViolationError(f"state exceeds TAR bound {k}")
    for i in range(len(seq) - 1):
        if not states_adjacent(Rule.TAR, seq[i], seq[i + 1], g, k):
            raise ContractViolationError(f"states {i},{i + 1} not TAR-adjacent")


def normalize_tar_sequence(
    g: Graph, s: int, t: int, seq: ReconfigSequence, k: int
) -> ReconfigSequence:
    """Rewrite a valid (k+1)-TAR sequence between two size-k separators so
    sizes alternate k, k+1, k, ...

    Repeatedly picks the first state of minimum size below k, with
    predecessor-difference {a} and successor-difference {b}, and replaces
    it by its union with {a,b}; backtracking steps (a == b) are excised.
    """
    _check_tar_sequence(g, s, t, seq, k + 1)
    if len(seq[0]) != k or len(seq[-1]) != k:
        raise ContractViolationError("endpoint states must have size k")

    seq = list(seq)
    # drop immediate repetitions up front; TAR adjacency forbids them in a
    # valid sequence, but callers may concatenate segments
    out = [seq[0]]
    for st in seq[1:]:
        if st != out[-1]:
            out.append(st)
    seq = out

    while True:
        small = [i for i, st in enumerate(seq) if len(st) < k]
        if not small:
            break
        lo = min(len(seq[i]) for i in small)
        j = next(i for i in small if len(seq[i]) == lo)
        if j in (0, len(seq) - 1):
            raise ContractViolationError("endpoint state below size k")
        (a,) = seq[j - 1] - seq[j]
        (b,) = seq[j + 1] - seq[j]
        if a == b:
            # the sequence backtracked through j; excise the detour
            del seq[j:j + 2]
            continue
        seq[j] = seq[j] | {a, b}

    sizes = [len(st) for st in seq]
    want = [k if i % 2 == 0 else k + 1 for i in range(len(seq))]
    if sizes != want:
        raise ContractViolationError("alternation unreachable for this sequence")
    _check_tar_sequence(g, s, t, seq, k + 1)
    return seq


def tj_to_tar_sequence(seq: ReconfigSequence) -> ReconfigSequence:
    """Interleave a TJ sequence with the unions of consecutive states,
    yielding a (k+1)-TAR sequence of length 2*len-1."""
    if not seq:
        raise ContractViolationError("empty sequence")
    sizes = {len(st) for st in seq}
    if len(sizes) != 1:
        raise ContractViolationError("TJ sequence states must share one size")
    out: ReconfigSequence = [seq[0]]
    for prev, nxt in zip(seq, seq[1:]):
        if len(prev - nxt) != 1 or len(nxt - prev) != 1:
            raise ContractViolationError("consecutive states are not single jumps")
        out.append(prev | nxt)
        out.append(nxt)
    return out


def tar_to_tj_sequence(
    g: Graph, s: int, t: int, seq: ReconfigSequence, k: int
) -> ReconfigSequence:
    """Inverse of :func:`tj_to_tar_sequence`: keep the odd positions of a
    normalized alternating TAR sequence."""
    _check_tar_sequence(g, s, t, seq, k + 1)
    sizes = [len(st) for st in seq]
    want = [k if i % 2 == 0 else k + 1 for i in range(len(seq))]
    if sizes != want:
        raise ContractViolationError(
            "input is not normalized (sizes must alternate k, k+1, ...)"
        )
    out = seq[::2]
    for prev, nxt in zip(out, out[1:]):
        if len(prev - nxt) != 1:
            raise ContractViolationError("subsampled states are not single jumps")
    return out


def is_trivially_negative_tar(instance: ReconfigInstance) -> bool:
    """Observation-style pruning: distinct endpoints with one of them a
    minimal separator of exactly k vertices can never move."""
    if instance.rule is not Rule.TAR:
        raise InvalidInstanceError("expects a TAR instance")
    if instance.source == instance.target:
        return False
    g, s, t, k = instance.graph, instance.s, instance.t, instance.k
    for st in (instance.source, instance.target):
        if len(st) == k and is_minimal_separator(g, s, t, st):
            return True
    return False


def tj_to_tar_instance(instance: ReconfigInstance) -> ReconfigInstance:
    """A TJ instance with size-k states is equivalent to the same instance
    under TAR with bound k+1."""
    if instance.rule is not Rule.TJ:
        raise InvalidInstanceError("expects a TJ instance")
    k = len(instance.source)
    return ReconfigInstance(
        instance.graph, instance.s, instance.t, Rule.TAR,
        instance.source, instance.target, k + 1,
    )


@dataclass(frozen=True)
class TarToTjConversion:
    """Equivalent TJ instance plus the two short TAR bridges that carry the
    original endpoint states onto the primed ones."""

    tj_instance: ReconfigInstance
    source_bridge: ReconfigSequence  # TAR(k): source  -> primed source
    target_bridge: ReconfigSequence  # TAR(k): target  -> primed target


def _monotone_bridge(start: State, core: State, goal: State) -> ReconfigSequence:
    """TAR path start -> core -> goal where core = start & goal contains a
    separator; removals then additions, ascending ids."""
    seq = [start]
    cur = start
    for v in sorted(start - core):
        cur = cur - {v}
        seq.append(cur)
    for v in sorted(goal - core):
        cur = cur | {v}
        seq.append(cur)
    assert cur == goal
    return seq


def tar_to_tj_instance(instance: ReconfigInstance) -> TarToTjConversion:
    """Build the equivalent TJ instance of a non-trivially-negative TAR
    instance: shrink each endpoint to a minimal separator and pad it up to
    k-1 tokens with the smallest available vertex ids."""
    if instance.rule is not Rule.TAR:
        raise InvalidInstanceError("expects a TAR instance")
    if is_trivially_negative_tar(instance):
        raise InvalidInstanceError(
            "trivially negative TAR instance (see is_trivially_negative_tar);"
            " the answer is NO and no equivalent TJ instance exists"
        )
    g, s, t, k = instance.graph, instance.s, instance.t, instance.k
    assert k is not None
    if k - 1 > g.n - 2:
        raise InvalidInstanceError("cannot pad states: k-1 exceeds n-2")

    def primed(st: State) -> tuple[State, State]:
        core = shrink_to_minimal(g, s, t, st)
        if len(core) > k - 1:
            # only reachable when source == target is a minimal separator
            # of size k; equivalence is vacuous there
            raise InvalidInstanceError(
                "endpoint shrinks to a minimal separator of size k;"
                " no size-(k-1) primed state exists"
            )
        padded = set(core)
        for v in g.vertices():
            if len(padded) == k - 1:
                break
            if v not in padded and v not in (s, t):
                padded.add(v)
        return core, frozenset(padded)

    core_a, sa = primed(instance.source)
    core_b, sb = primed(instance.target)
    tj = ReconfigInstance(g, s, t, Rule.TJ, sa, sb)
    return TarToTjConversion(
        tj,
        _monotone_bridge(instance.source, core_a, sa),
        _monotone_bridge(instance.target, core_b, sb),
    )

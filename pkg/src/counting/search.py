#!/usr/bin/env python3
"""
Certified counting of q-expansions by exploring the digit tree of the orbit.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from ..algebraic import FieldElement, Polynomial, format_polynomial, format_rational
from ..config.env import get_settings
from ..expansions import BaseContext, DigitSeq, format_digits, format_word
from ..utils.logger import get_logger
from .models import (
    BranchEvent,
    CountKind,
    CountResult,
    LeafCertificate,
    LeafEvent,
    UniquenessResult,
    UniquenessStatus,
)
from .switch import allowed_digits, check_in_interval

logger = get_logger(__name__)
settings = get_settings()


def certify_unique(x: Any, ctx: BaseContext, depth_cap: Optional[int] = None) -> UniquenessResult:
    """Follow the orbit of x while it has a single admissible digit."""
    depth_cap = depth_cap or settings.MULTIBASE_DEPTH_CAP
    state = ctx.element(x)
    check_in_interval(state, ctx)
    seen: Dict[FieldElement, int] = {state: 0}
    digits: List[int] = []

    for step in range(depth_cap):
        options = allowed_digits(state, ctx)
        if len(options) > 1:
            return UniquenessResult(status=UniquenessStatus.NOT_UNIQUE, depth=step)
        digits.append(options[0])
        state = ctx.base * state - options[0]
        if state in seen:
            start = seen[state]
            seq = DigitSeq(tuple(digits[:start]), tuple(digits[start:]))
            return UniquenessResult(
                status=UniquenessStatus.UNIQUE,
                depth=step + 1,
                expansion=format_digits(seq, ctx.M),
                sequence=seq,
            )
        seen[state] = step + 1

    return UniquenessResult(status=UniquenessStatus.UNKNOWN, depth=depth_cap)


@dataclass
class _Leaf:
    """Leaf relative to the node it was found under."""
    digits: Tuple[int, ...]
    cycle_start: Optional[int]  # None for truncated rays


@dataclass
class _Subtree:
    leaves: List[_Leaf] = field(default_factory=list)
    branches: List[Tuple[Tuple[int, ...], Tuple[int, ...]]] = field(default_factory=list)
    exact: bool = True
    height: int = 0


class _TreeSearch:
    """Depth-first search over admissible digits with memoized branching states.

    Only branching states with finite, fully certified subtrees are memoized;
    such subtrees cannot contain a state from the path above them.
    """

    def __init__(self, ctx: BaseContext, depth_cap: int, branch_cap: int):
        self.ctx = ctx
        self.depth_cap = depth_cap
        self.branch_cap = branch_cap
        self.memo: Dict[FieldElement, _Subtree] = {}
        self.path: List[FieldElement] = []
        self.path_branching: List[bool] = []
        self.path_index: Dict[FieldElement, List[int]] = {}
        self.branch_count = 0
        self.infinite = False
        self.branch_capped = False
        self.ray_exhausted = False
        self.deepest = 0

    def _push(self, state: FieldElement, branching: bool) -> None:
        self.path_index.setdefault(state, []).append(len(self.path))
        self.path.append(state)
        self.path_branching.append(branching)

    def _pop(self, count: int) -> None:
        for _ in range(count):
            state = self.path.pop()
            self.path_branching.pop()
            indices = self.path_index[state]
            indices.pop()
            if not indices:
                del self.path_index[state]

    def explore(self, state: FieldElement) -> _Subtree:
        """Subtree below ``state``, whose depth is the current path length."""
        start = len(self.path)
        walked: List[int] = []
        try:
            while True:
                depth = len(self.path)
                self.deepest = max(self.deepest, depth)
                if depth >= self.depth_cap:
                    if not self.infinite:
                        self.ray_exhausted = True
                    return _Subtree([_Leaf(tuple(walked), None)], exact=False, height=len(walked))

                options = allowed_digits(state, self.ctx)
                if state in self.path_index:
                    last = self.path_index[state][-1]
                    if len(options) == 1 and not any(self.path_branching[last:]):
                        cycle_start = last - start
                        return _Subtree([_Leaf(tuple(walked), cycle_start)], height=len(walked))
                    # Cycle through a branching state: infinitely many expansions
                    self.infinite = True

                if len(options) == 1:
                    self._push(state, False)
                    walked.append(options[0])
                    state = self.ctx.base * state - options[0]
                    continue

                subtree = self._branch(state, options, depth)
                head = tuple(walked)
                return _Subtree(
                    [_Leaf(head + leaf.digits, _offset(leaf.cycle_start, len(head))) for leaf in subtree.leaves],
                    [(head + prefix, opts) for prefix, opts in subtree.branches],
                    subtree.exact,
                    subtree.height + len(walked),
                )
        finally:
            self._pop(len(self.path) - start)

    def _branch(self, state: FieldElement, options: Tuple[int, ...], depth: int) -> _Subtree:
        cached = self.memo.get(state)
        if cached is not None and depth + cached.height < self.depth_cap:
            self.branch_count += len(cached.branches)
            return cached

        self.branch_count += 1
        if self.branch_count > self.branch_cap:
            self.branch_capped = True
            return _Subtree([_Leaf((), None)], exact=False)

        result = _Subtree(branches=[((), options)])
        self._push(state, True)
        try:
            for digit in options:
                child = self.explore(self.ctx.base * state - digit)
                result.leaves += [
                    _Leaf((digit,) + leaf.digits, _offset(leaf.cycle_start, 1)) for leaf in child.leaves
                ]
                result.branches += [((digit,) + prefix, opts) for prefix, opts in child.branches]
                result.exact = result.exact and child.exact
                result.height = max(result.height, child.height + 1)
        finally:
            self._pop(1)

        if result.exact:
            self.memo[state] = result
        return result


def _offset(cycle_start: Optional[int], shift: int) -> Optional[int]:
    return None if cycle_start is None else cycle_start + shift


def count_expansions(
    x: Any,
    ctx: BaseContext,
    depth_cap: Optional[int] = None,
    branch_cap: Optional[int] = None,
) -> CountResult:
    """Count the q-expansions of x.

    Exactly(k) when the tree is finite and every ray closes in a single-digit
    cycle; AtLeast(k) when a cycle passes through a branching state or the
    branch cap is hit; Undecided when a single ray runs into the depth cap.
    """
    depth_cap = depth_cap or settings.MULTIBASE_DEPTH_CAP
    branch_cap = branch_cap or settings.MULTIBASE_BRANCH_CAP
    state = ctx.element(x)
    check_in_interval(state, ctx)

    search = _TreeSearch(ctx, depth_cap, branch_cap)
    tree = search.explore(state)

    M = ctx.M
    leaves: List[LeafEvent] = []
    expansions: List[DigitSeq] = []
    for leaf in tree.leaves:
        prefix = format_word(leaf.digits, M)
        if leaf.cycle_start is None:
            leaves.append(LeafEvent(prefix=prefix, certificate=LeafCertificate.TRUNCATED))
            continue
        seq = DigitSeq(leaf.digits[: leaf.cycle_start], leaf.digits[leaf.cycle_start :])
        expansions.append(seq)
        leaves.append(
            LeafEvent(prefix=prefix, tail=format_digits(seq, M), certificate=LeafCertificate.UNIQUE_CYCLE)
        )

    branches = [
        BranchEvent(
            prefix=format_word(prefix, M),
            digit_options=list(options),
        )
        for prefix, options in sorted(tree.branches)
    ]

    if search.infinite or search.branch_capped:
        kind = CountKind.AT_LEAST
    elif search.ray_exhausted:
        kind = CountKind.UNDECIDED
    else:
        kind = CountKind.EXACTLY

    result = CountResult(
        kind=kind,
        count=len(tree.leaves),
        depth_used=search.deepest,
        branches=branches,
        leaves=leaves,
        expansions=expansions,
    )
    if kind != CountKind.EXACTLY:
        logger.warning(f"count for {ctx!r} degraded to {result.summary()}")
    else:
        logger.debug(f"count for {ctx!r}: {result.summary()}")
    return result


def count_prefixes(x: Any, ctx: BaseContext, depth: int) -> int:
    """Number of length-``depth`` digit words that begin some q-expansion of x."""
    state = ctx.element(x)
    check_in_interval(state, ctx)
    memo: Dict[Tuple[FieldElement, int], int] = {}

    def walk(point: FieldElement, remaining: int) -> int:
        if remaining == 0:
            return 1
        key = (point, remaining)
        if key not in memo:
            memo[key] = sum(
                walk(ctx.base * point - d, remaining - 1) for d in allowed_digits(point, ctx)
            )
        return memo[key]

    return walk(state, depth)


def count_certificate(
    result: CountResult, x: Any, ctx: BaseContext, label: Optional[str] = None
) -> Dict[str, Any]:
    """JSON-ready certificate of a counting result."""
    value = ctx.element(x)
    q = ctx.q
    return {
        "input": label or format_polynomial(Polynomial(value.coeffs)),
        "base": {
            "poly": ",".join(str(c) for c in q.defining_poly),
            "interval": [format_rational(q.lo), format_rational(q.hi)],
        },
        "result": {"kind": result.kind.value, "count": result.count, "depth": result.depth_used},
        "branches": [b.model_dump() for b in result.branches],
        "leaves": [leaf.model_dump(mode="json", exclude_none=True) for leaf in result.leaves],
    }

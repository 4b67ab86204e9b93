"""
Partition refinement against a family of self-maps.

Shared by the largest-congruence computation and DFA minimization.
"""

from collections import deque
from collections.abc import Sequence

from synalg.congruence.partition import canonicalize
from synalg.utils.logger import get_logger

logger = get_logger("synalg.congruence")


def refine(labels: Sequence[int], maps: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Coarsest refinement of ``labels`` that every map in ``maps`` respects.

    Worklist over (class, map) pairs processed in class-index then map-index order.
    A class is split by the class ids of its images; after a split every pair is
    queued again, since any class mapping into the split class may now break.
    """
    class_of = list(canonicalize(labels))
    n = len(class_of)
    if n == 0:
        return ()
    members: dict[int, list[int]] = {}
    for a, c in enumerate(class_of):
        members.setdefault(c, []).append(a)

    pending: deque[tuple[int, int]] = deque((c, m) for c in sorted(members) for m in range(len(maps)))
    queued = set(pending)
    splits = 0
    while pending:
        pair = pending.popleft()
        queued.discard(pair)
        c, m = pair
        f = maps[m]
        groups: dict[int, list[int]] = {}
        for a in members[c]:
            groups.setdefault(class_of[f[a]], []).append(a)
        if len(groups) < 2:
            continue
        splits += 1
        parts = list(groups.values())
        members[c] = parts[0]
        for part in parts[1:]:
            fresh = len(members)
            members[fresh] = part
            for a in part:
                class_of[a] = fresh
        for d in sorted(members):
            for k in range(len(maps)):
                if (d, k) not in queued:
                    pending.append((d, k))
                    queued.add((d, k))

    logger.debug("refinement of %d elements by %d maps: %d splits", n, len(maps), splits)
    return canonicalize(class_of)

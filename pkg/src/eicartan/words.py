"""Normal-form words eta^a alpha_n eta^{b_n} ... alpha_1 eta^{b_1} along paths of Q°.

The same word shape indexes the morphisms of the free EI category of
Cartan type and the monomial basis of H(C, D, Omega).  Slot ``b_m`` sits to
the right of ``alpha_m`` and is bounded by c_{s(alpha_m)} / gcd; overflow is
traded for c_{t(alpha_m)} / gcd at the next slot to the left.  The two
algebras differ only at the head: modular for the group X(t), nilpotent for
k[eps]/(eps^c).
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class PathWord:
    source: object
    target: object
    path: tuple  # arrows, leftmost (closest to the target) first
    head: int
    slots: tuple

    @property
    def length(self):
        return len(self.path)

    symbol = "x"

    def __str__(self):
        s = self.symbol
        if not self.path:
            return f"{s}{_v(self.target)}^{self.head}"
        parts = [f"{s}{_v(self.target)}^{self.head}"]
        for arrow, b in zip(self.path, self.slots):
            parts.append(str(arrow))
            parts.append(f"{s}{_v(arrow.source)}^{b}")
        return "·".join(parts)


def _v(v):
    return "".join(map(str, v)) if isinstance(v, tuple) else str(v)


def arrow_gcd(order, arrow):
    return math.gcd(order[arrow.target], order[arrow.source])


def slot_bound(order, arrow):
    return order[arrow.source] // arrow_gcd(order, arrow)


def carry_unit(order, arrow):
    return order[arrow.target] // arrow_gcd(order, arrow)


def normalize(order, path, head, slots, start, nilpotent):
    """Propagate overflow leftwards starting at slot index ``start``.

    Returns ``(head, slots)`` or ``None`` when the nilpotent head dies.
    ``start = -1`` means only the head needs reducing.
    """
    slots = list(slots)
    k = start
    while k >= 0:
        arrow = path[k]
        bound = slot_bound(order, arrow)
        if slots[k] < bound:
            break
        q, slots[k] = divmod(slots[k], bound)
        carry = q * carry_unit(order, arrow)
        if k == 0:
            head += carry
        else:
            slots[k - 1] += carry
        k -= 1
    c = order[path[0].target] if path else None
    return _reduce_head(head, c, slots, nilpotent)


def _reduce_head(head, c, slots, nilpotent):
    if c is None:
        return head, tuple(slots)
    if nilpotent:
        if head >= c:
            return None
        return head, tuple(slots)
    return head % c, tuple(slots)


def concatenate(order, left, right, nilpotent):
    """Product left * right of two words with left.source == right.target.

    Returns ``(path, head, slots)`` or ``None`` for zero.
    """
    path = left.path + right.path
    if not left.path:
        c = order[left.target]
        head = left.head + right.head
        if nilpotent:
            if head >= c:
                return None
        else:
            head %= c
        return path, head, right.slots
    slots = list(left.slots)
    slots[-1] += right.head
    res = normalize(order, left.path, left.head, slots, len(slots) - 1, nilpotent)
    if res is None:
        return None
    head, slots = res
    return path, head, slots + right.slots


def enumerate_words(quiver, order):
    """Yield ``(source, target, path, head, slots)`` for every normal-form word.

    Order: empty paths by vertex, then paths by length.
    """
    for v in quiver.vertices:
        for a in range(order[v]):
            yield v, v, (), a, ()
    for path in quiver.paths():
        bounds = [slot_bound(order, arrow) for arrow in path]
        target, source = path[0].target, path[-1].source
        for head in range(order[target]):
            for slots in _product_ranges(bounds):
                yield source, target, path, head, slots


def _product_ranges(bounds):
    if not bounds:
        yield ()
        return
    for first in range(bounds[0]):
        for rest in _product_ranges(bounds[1:]):
            yield (first,) + rest


def word_count(quiver, order):
    """sum_v c_v + sum_{paths} c_{t(p)} prod_m c_{s(alpha_m)}/g_m."""
    total = sum(order[v] for v in quiver.vertices)
    for path in quiver.paths():
        n = order[path[0].target]
        for arrow in path:
            n *= slot_bound(order, arrow)
        total += n
    return total

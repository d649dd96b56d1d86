"""Two-part event priority queue for the sweep.

Input-point events are known up front, so they live in a static array
sorted by priority with a moving cursor.  Intersection and deletion
events come and go during the sweep and live in a small addressable
binary heap whose handles support removal.  Popping compares the array
front with the heap minimum and takes the smaller, so the expensive
sift operations only ever touch the small dynamic part.
"""

from __future__ import annotations

import numpy as np

from .kernel import NumericalFailure

# Tie rank for events at equal priority: intersections run before inputs
# so that a site landing exactly on a crossing sees the merged structure;
# deletions run last because they change no regions.
INTERSECTION, INPUT, DELETION = 0, 1, 2


class DynEvent:
    """An intersection or deletion event; also its own heap handle."""

    __slots__ = ("prio", "kind", "x", "y", "node_l", "node_r", "pos")

    def __init__(self, prio, kind, x, y, node_l, node_r):
        self.prio = prio
        self.kind = kind
        self.x = x
        self.y = y
        self.node_l = node_l
        self.node_r = node_r
        self.pos = -1  # index in the heap array; -1 once removed or popped

    def key(self):
        return (self.prio, self.kind, self.x, self.y)

    def __repr__(self):
        kind = {INTERSECTION: "isect", DELETION: "del"}[self.kind]
        return f"DynEvent({kind} prio={self.prio:.6g} at ({self.x:.6g},{self.y:.6g}))"


class AddressableHeap:
    """Array binary heap with handle-based removal."""

    __slots__ = ("_a",)

    def __init__(self):
        self._a = []

    def __len__(self):
        return len(self._a)

    def push(self, ev):
        a = self._a
        ev.pos = len(a)
        a.append(ev)
        self._sift_up(ev.pos)
        return ev

    def peek(self):
        return self._a[0] if self._a else None

    def pop(self):
        a = self._a
        top = a[0]
        last = a.pop()
        if a:
            a[0] = last
            last.pos = 0
            self._sift_down(0)
        top.pos = -1
        return top

    def remove(self, ev):
        a = self._a
        i = ev.pos
        if i < 0 or i >= len(a) or a[i] is not ev:
            raise ValueError("removal of an invalidated event handle")
        last = a.pop()
        ev.pos = -1
        if i < len(a):
            a[i] = last
            last.pos = i
            self._sift_down(i)
            self._sift_up(last.pos)

    def _sift_up(self, i):
        a = self._a
        ev = a[i]
        k = ev.key()
        while i > 0:
            parent = (i - 1) >> 1
            p = a[parent]
            if k < p.key():
                a[i] = p
                p.pos = i
                i = parent
            else:
                break
        a[i] = ev
        ev.pos = i

    def _sift_down(self, i):
        a = self._a
        n = len(a)
        ev = a[i]
        k = ev.key()
        while True:
            child = 2 * i + 1
            if child >= n:
                break
            right = child + 1
            if right < n and a[right].key() < a[child].key():
                child = right
            c = a[child]
            if c.key() < k:
                a[i] = c
                c.pos = i
                i = child
            else:
                break
        a[i] = ev
        ev.pos = i


class EventQueue:
    """Static sorted input events plus a dynamic addressable heap."""

    def __init__(self, xs, ys, prjs, order=None, tol=0.0):
        """``xs``/``ys``/``prjs`` are parallel arrays over point ids.

        ``order`` is the id permutation sorted by (priority, x, y); when
        omitted it is computed here.  ``tol`` bounds how far behind the
        sweep front a dynamically inserted event may lag before it is
        reported as a robustness failure.
        """
        xs = np.asarray(xs, dtype=np.float64)
        ys = np.asarray(ys, dtype=np.float64)
        prjs = np.asarray(prjs, dtype=np.float64)
        if order is None:
            order = np.lexsort((ys, xs, prjs))
        self._order = order
        self._xs = xs
        self._ys = ys
        self._prjs = prjs
        self._cursor = 0
        self._n = len(order)
        self._heap = AddressableHeap()
        self.tol = tol
        self.last_prio = -np.inf
        self.popped_input = 0
        self.popped_intersection = 0
        self.popped_deletion = 0
        self.max_dynamic = 0

    # ------------------------------------------------------------------

    def _static_key(self):
        i = self._order[self._cursor]
        return (self._prjs[i], INPUT, self._xs[i], self._ys[i])

    def pop(self):
        """Pop the least event: ('input', point_id) or a DynEvent, else None."""
        heap = self._heap
        has_static = self._cursor < self._n
        top = heap.peek()
        if has_static:
            skey = self._static_key()
            if top is None or skey < top.key():
                i = int(self._order[self._cursor])
                self._cursor += 1
                self._check_monotone(skey[0])
                self.popped_input += 1
                return ("input", i)
        if top is None:
            return None
        ev = heap.pop()
        self._check_monotone(ev.prio)
        if ev.kind == INTERSECTION:
            self.popped_intersection += 1
        else:
            self.popped_deletion += 1
        return ev

    def _check_monotone(self, prio):
        if prio < self.last_prio - self.tol:
            raise NumericalFailure(
                f"event priority regressed: {prio!r} after {self.last_prio!r}")
        if prio > self.last_prio:
            self.last_prio = prio

    # ------------------------------------------------------------------

    def push_intersection(self, prio, x, y, node_l, node_r):
        return self._push(DynEvent(prio, INTERSECTION, x, y, node_l, node_r))

    def push_deletion(self, prio, x, y, node):
        return self._push(DynEvent(prio, DELETION, x, y, node, None))

    def _push(self, ev):
        if ev.prio < self.last_prio - self.tol:
            raise NumericalFailure(
                f"stale-event: priority {ev.prio!r} behind front {self.last_prio!r}")
        self._heap.push(ev)
        if len(self._heap) > self.max_dynamic:
            self.max_dynamic = len(self._heap)
        return ev

    def remove(self, ev):
        self._heap.remove(ev)

    # ------------------------------------------------------------------

    def dynamic_size(self):
        return len(self._heap)

    def total_popped(self):
        return {
            "input": self.popped_input,
            "intersection": self.popped_intersection,
            "deletion": self.popped_deletion,
        }

    def empty(self):
        return self._cursor >= self._n and not self._heap

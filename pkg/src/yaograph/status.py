"""Ordered structure of the boundary rays currently crossing the sweep front.

A doubly linked list of boundaries carries the order; a leaf-oriented AVL
tree on top provides logarithmic region search.  Leaves hold the
boundaries, internal nodes hold only routing metadata plus a link to the
rightmost leaf of their subtree.  Because the algorithm always knows the
position of an insertion or removal, both are performed without a search
phase: a pair of adjacent boundaries is inserted with a single rebalance
walk, and replacing a pair reuses the left leaf in place and deletes the
right one with a single walk.
"""

from __future__ import annotations

import math

from .kernel import InvariantError, ON, RIGHT

INFINITE = None  # region apex label for the plane outside every cone

_uid_counter = 0


class Boundary:
    """A directed ray separating two regions on the sweep front.

    ``kind`` is 'L' for a cone-left ray (angle theta_L + pi), 'R' for a
    cone-right ray (theta_R + pi) and 'B' for a bisector ray.  A composite
    boundary carries a bounded extent ``t_max`` and a ``pending`` geometry
    (swap point plus post-swap direction) that a deletion event applies.

    ``(ax, ay)`` anchors the supporting line for side tests: for rays
    lying on a cone-edge line through an input point this is that exact
    input coordinate (propagated when a merge extends the same line), so
    on-boundary queries are decided on input data rather than on noisy
    constructed intersection points.
    """

    __slots__ = ("ox", "oy", "dx", "dy", "angle", "kind",
                 "left_apex", "right_apex", "t_max", "pending", "ax", "ay")

    def __init__(self, ox, oy, dx, dy, angle, kind, left_apex, right_apex,
                 t_max=math.inf, pending=None, anchor=None):
        self.ox = ox
        self.oy = oy
        self.dx = dx
        self.dy = dy
        self.angle = angle
        self.kind = kind
        self.left_apex = left_apex
        self.right_apex = right_apex
        self.t_max = t_max
        self.pending = pending  # (wx, wy, dx, dy, angle) or None
        if anchor is None:
            self.ax = ox
            self.ay = oy
        else:
            self.ax, self.ay = anchor

    def __repr__(self):
        fmt = lambda a: "INF" if a is INFINITE else a
        tag = "+seg" if self.pending is not None else ""
        return (f"Boundary({self.kind}{tag} @({self.ox:.4g},{self.oy:.4g}) "
                f"ang={self.angle:.4g} [{fmt(self.left_apex)}|{fmt(self.right_apex)}])")


class _Leaf:
    __slots__ = ("boundary", "prev", "nxt", "parent", "uid",
                 "pair_event", "deletion_event")

    is_leaf = True

    def __init__(self, boundary):
        global _uid_counter
        _uid_counter += 1
        self.uid = _uid_counter
        self.boundary = boundary
        self.prev = None
        self.nxt = None
        self.parent = None
        self.pair_event = None      # event between self and self.nxt
        self.deletion_event = None  # pending geometry-swap event

    def __repr__(self):
        return f"Leaf#{self.uid}({self.boundary!r})"


class _Internal:
    __slots__ = ("left", "right", "parent", "height", "rightmost")

    is_leaf = False

    def __init__(self, left, right):
        self.left = left
        self.right = right
        self.parent = None
        left.parent = self
        right.parent = self
        self.height = 1 + max(_height(left), _height(right))
        self.rightmost = right if right.is_leaf else right.rightmost


def _height(n):
    return 0 if n.is_leaf else n.height


def _rightmost(n):
    return n if n.is_leaf else n.rightmost


def default_side_of(kernel, xs=None, ys=None):
    """Side test of a query point against a boundary.

    Cone-type rays are tested against their anchored supporting line.
    Bisector boundaries are tested by comparing distances to their two
    region apexes (when coordinate arrays are supplied), which needs no
    constructed geometry at all.  A point exactly on a line but behind
    the ray origin is only possible for sweep-parallel rays (cone width
    pi, k = 2); it resolves to the side that keeps region scans
    consistent for the ray's kind.
    """

    kside = kernel.side
    cmp_dist = kernel.cmp_dist

    def side_of(b, qx, qy):
        if b.kind == "B" and xs is not None:
            la, ra = b.left_apex, b.right_apex
            return cmp_dist(qx, qy, xs[la], ys[la], xs[ra], ys[ra])
        s = kside(b.ax, b.ay, b.dx, b.dy, qx, qy)
        if s == ON:
            dot = b.dx * (qx - b.ax) + b.dy * (qy - b.ay)
            if dot < 0.0:
                if b.kind == "R":
                    return RIGHT
        return s

    return side_of


class SweepStatus:
    """Boundaries on the sweep front, ordered left to right."""

    def __init__(self):
        self.root = None
        self.head = None
        self.tail = None
        self.size = 0
        self.max_size = 0
        self.rotations = 0

    # ------------------------------------------------------------------
    # read access

    def leaves(self):
        n = self.head
        while n is not None:
            yield n
            n = n.nxt

    def boundaries(self):
        return [n.boundary for n in self.leaves()]

    def find_region(self, qx, qy, side_of):
        """Locate the pair (B_L, B_R) of boundaries enclosing the query.

        B_R is the first boundary in list order with the query strictly to
        its right; B_L is its predecessor and has the query to its left or
        on it.  Either side is None when the query falls before the first
        or after the last boundary (the enclosing region is then INFINITE,
        matching the unbounded plane).
        """
        n = self.root
        if n is None:
            return None, None
        while not n.is_leaf:
            rm = _rightmost(n.left)
            if side_of(rm.boundary, qx, qy) == RIGHT:
                n = n.left
            else:
                n = n.right
        if side_of(n.boundary, qx, qy) == RIGHT:
            right = n
        else:
            right = n.nxt
        left = right.prev if right is not None else self.tail
        return left, right

    # ------------------------------------------------------------------
    # mutation

    def insert_pair_after(self, anchor, b_left, b_right):
        """Insert two adjacent boundaries immediately after ``anchor``.

        ``anchor`` is a live leaf, or None to insert at the front.  The
        position is the caller's knowledge; no search happens here, and a
        single rebalance walk restores the AVL invariant for both leaves.
        """
        a = _Leaf(b_left)
        b = _Leaf(b_right)
        a.nxt = b
        b.prev = a

        if self.root is None:
            self.root = _Internal(a, b)
            self.head = a
            self.tail = b
        elif anchor is None:
            old = self.head
            parent = old.parent
            top = _Internal(_Internal(a, b), old)
            self._attach(parent, old, top)
            b.nxt = old
            old.prev = b
            self.head = a
            self._retrace(parent)
        else:
            nxt = anchor.nxt
            parent = anchor.parent
            top = _Internal(anchor, _Internal(a, b))
            self._attach(parent, anchor, top)
            anchor.nxt = a
            a.prev = anchor
            b.nxt = nxt
            if nxt is not None:
                nxt.prev = b
            else:
                self.tail = b
            self._retrace(parent)
        self.size += 2
        if self.size > self.max_size:
            self.max_size = self.size
        return a, b

    def insert_single_after(self, anchor, boundary):
        """Insert one boundary immediately after ``anchor`` (None = front).

        Only width-pi cones need single inserts; pairs are the normal case.
        """
        leaf = _Leaf(boundary)
        if self.root is None:
            self.root = leaf
            self.head = leaf
            self.tail = leaf
        elif anchor is None:
            old = self.head
            parent = old.parent
            top = _Internal(leaf, old)
            self._attach(parent, old, top)
            leaf.nxt = old
            old.prev = leaf
            self.head = leaf
            self._retrace(parent)
        else:
            nxt = anchor.nxt
            parent = anchor.parent
            top = _Internal(anchor, leaf)
            self._attach(parent, anchor, top)
            anchor.nxt = leaf
            leaf.prev = anchor
            leaf.nxt = nxt
            if nxt is not None:
                nxt.prev = leaf
            else:
                self.tail = leaf
            self._retrace(parent)
        self.size += 1
        if self.size > self.max_size:
            self.max_size = self.size
        return leaf

    def replace_pair(self, left, right, boundary):
        """Replace the adjacent pair (left, right) with one boundary.

        The replacement reuses the left leaf's structural position; only
        the right leaf is removed, costing one rebalance walk.
        """
        if left.nxt is not right:
            raise InvariantError("replace_pair on non-adjacent leaves")
        left.boundary = boundary
        left.pair_event = None
        left.deletion_event = None
        self._delete_leaf(right)
        return left

    def remove_single(self, leaf):
        """Remove one boundary whose position is already known."""
        self._delete_leaf(leaf)

    def swap_geometry(self, leaf):
        """Apply a composite boundary's pending geometry in place.

        The sweep order of boundaries is unchanged; only the stored ray is
        replaced by the post-swap ray, so no tree work is needed.
        """
        b = leaf.boundary
        if b.pending is None:
            raise InvariantError("swap_geometry without pending geometry")
        b.ox, b.oy, b.dx, b.dy, b.angle = b.pending
        b.kind = "B"
        b.t_max = math.inf
        b.pending = None

    # ------------------------------------------------------------------
    # internals

    def _attach(self, parent, old_child, new_child):
        new_child.parent = parent
        if parent is None:
            self.root = new_child
        elif parent.left is old_child:
            parent.left = new_child
        else:
            parent.right = new_child

    def _delete_leaf(self, leaf):
        p, n = leaf.prev, leaf.nxt
        if p is not None:
            p.nxt = n
        else:
            self.head = n
        if n is not None:
            n.prev = p
        else:
            self.tail = p
        parent = leaf.parent
        if parent is None:
            self.root = None
        else:
            sib = parent.right if parent.left is leaf else parent.left
            g = parent.parent
            self._attach(g, parent, sib)
            self._retrace(g)
        leaf.parent = None
        self.size -= 1

    def _retrace(self, n):
        while n is not None:
            self._fix(n)
            bf = _height(n.left) - _height(n.right)
            if bf > 1:
                if _height(n.left.left) < _height(n.left.right):
                    self._rotate_left(n.left)
                n = self._rotate_right(n)
            elif bf < -1:
                if _height(n.right.right) < _height(n.right.left):
                    self._rotate_right(n.right)
                n = self._rotate_left(n)
            n = n.parent

    def _fix(self, n):
        n.height = 1 + max(_height(n.left), _height(n.right))
        n.rightmost = _rightmost(n.right)

    def _rotate_left(self, z):
        y = z.right
        self._attach(z.parent, z, y)
        z.right = y.left
        z.right.parent = z
        y.left = z
        z.parent = y
        self._fix(z)
        self._fix(y)
        self.rotations += 1
        return y

    def _rotate_right(self, z):
        y = z.left
        self._attach(z.parent, z, y)
        z.left = y.right
        z.left.parent = z
        y.right = z
        z.parent = y
        self._fix(z)
        self._fix(y)
        self.rotations += 1
        return y

    # ------------------------------------------------------------------
    # diagnostics

    def validate(self):
        """Check every structural invariant; returns a list of violations."""
        problems = []
        leaves_list = list(self.leaves())
        if len(leaves_list) != self.size:
            problems.append(f"size {self.size} != list length {len(leaves_list)}")
        for i, leaf in enumerate(leaves_list):
            if leaf.nxt is not None and leaf.nxt.prev is not leaf:
                problems.append(f"broken list link at position {i}")
        if self.root is None:
            if self.size != 0 or self.head is not None or self.tail is not None:
                problems.append("empty tree with non-empty list")
            return problems
        if self.root.parent is not None:
            problems.append("root has a parent")

        in_order = []

        def walk(n):
            if n.is_leaf:
                in_order.append(n)
                return 0
            if n.left.parent is not n or n.right.parent is not n:
                problems.append("bad parent pointer below an internal node")
            hl = walk(n.left)
            hr = walk(n.right)
            h = 1 + max(hl, hr)
            if n.height != h:
                problems.append(f"stale height: stored {n.height}, actual {h}")
            if abs(hl - hr) > 1:
                problems.append(f"AVL balance violated: |{hl}-{hr}| > 1")
            r = n.right
            while not r.is_leaf:
                r = r.right
            if n.rightmost is not r:
                problems.append("rightmost link does not reach the maximum leaf")
            return h

        walk(self.root)
        if [l.uid for l in in_order] != [l.uid for l in leaves_list]:
            problems.append("in-order traversal differs from linked-list order")
        return problems

    def height(self):
        return _height(self.root) if self.root is not None else 0

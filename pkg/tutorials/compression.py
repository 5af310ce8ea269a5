r"""
Compressing a ZDD
=================
This tutorial shows how a family of sets is built as a ZDD with
:py:class:`topzdd.ZddStore`, compressed with :py:func:`topzdd.compress_zdd` and
navigated on the compressed form with :py:class:`topzdd.TopZdd`.

The compressed form keeps the depth-first preorder names of the nodes, so
node ``x`` of the compressed ZDD is the ``x``-th node visited by a depth-first
search of the original diagram that takes the 0-edge first.
"""

import numpy as np

import topzdd
from topzdd import FamilySpec, ZddStore, compress_zdd, naive_bytes

###############################################################################
# Let's start with a small family given explicitly by its sets. The store
# applies the two ZDD reduction rules while the family is built, so the
# diagram below is already reduced.
store = ZddStore(3)
root = store.from_sets([(1, 2), (2, 3), (3,)])
print(store.enumerate(root))
for x, edge in enumerate(store.preorder_edges(root), start=1):
    print(x, edge)

###############################################################################
# Compressing the diagram returns a :py:class:`topzdd.TopZdd` and the statistics
# of the build. Queries name nodes by preorder and return either a preorder or
# a terminal.
tz, info = compress_zdd(store, root)
print(tz)
print("label(1) =", tz.label(1), " zero(1) =", tz.zero(1), " one(1) =", tz.one(1))
print("{2, 3} in family:", tz.member([2, 3]))
print("{1, 3} in family:", tz.member([1, 3]))

###############################################################################
# Every query walks one root-to-leaf path of the balanced-parentheses tree
# :math:`T'`; passing ``return_depth=True`` returns the length of that path.
print(tz.one(2, return_depth=True))

###############################################################################
# The compressed form pays off on repetitive families. The power set of
# :math:`\{1, \dots, A\}` is a chain of :math:`A` nodes: its top tree is a
# balanced binary tree whose equal subtrees are all shared, so the number of
# vertices of :math:`T'` grows by a constant each time :math:`A` doubles.
As = 2 ** np.arange(5, 13)
vertices, sizes, naive = [], [], []
for A in As:
    store = ZddStore(int(A))
    tz, _ = compress_zdd(store, store.power_set(int(A)))
    vertices.append(tz.n_vertices)
    sizes.append(tz.size_in_bytes())
    naive.append(naive_bytes(tz.n, tz.c))

print(f"{'A':>6} {'vertices':>9} {'topzdd':>8} {'naive':>8}")
for A, v, s, m in zip(As, vertices, sizes, naive):
    print(f"{A:>6} {v:>9} {s:>8} {m:>8}")

###############################################################################
# Families are more conveniently described in ``kind:key=value`` form, the
# same form used by the command line. A compressed family can be written to
# disk and read back.
spec = FamilySpec.parse("nqueens:n=6")
store, root = spec.build()
tz, info = compress_zdd(store, root, family=str(spec))
print(info.as_dict())
assert topzdd.utils.zddtest(tz, store, root)
tz2 = topzdd.TopZdd.from_bytes(tz.to_bytes())
print(tz2.family, tz2.n, tz2.size_in_bytes())

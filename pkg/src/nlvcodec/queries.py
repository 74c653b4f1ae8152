"""Answering PSV/NSV from the colored min heap and PLV/NLV from the
colored max heap, without the source array.

Previous-value queries are parent lookups.  Next-value queries walk right
along equal-valued (blue) siblings until a red node, then climb to the
nearest ancestor that still has a right sibling.
"""

from .trees import node_index_check


def psv_from_tree(cmin, i):
    """PSV(i) = parent of i in the min heap."""
    node_index_check(cmin.tree, i)
    return cmin.tree.parent[i]


def plv_from_tree(cmax, i):
    """PLV(i) = parent of i in the max heap."""
    node_index_check(cmax.tree, i)
    return cmax.tree.parent[i]


def _next_value_walk(ct, i):
    tree = ct.tree
    node_index_check(tree, i)
    j = i
    while True:
        s = tree.right_sibling(j)
        if s == 0:
            break
        if ct.is_red[j]:
            return s
        j = s
    # climb: any right sibling of a strict ancestor (root excluded) works,
    # since ancestor values are strictly closer to the extreme
    j = tree.parent[j]
    while j != 0:
        s = tree.right_sibling(j)
        if s != 0:
            return s
        j = tree.parent[j]
    return tree.n + 1


def nsv_from_tree(cmin, i):
    """NSV(i) from the colored min heap alone."""
    return _next_value_walk(cmin, i)


def nlv_from_tree(cmax, i):
    """NLV(i) from the colored max heap alone."""
    return _next_value_walk(cmax, i)


TREE_QUERIES = {
    "psv": psv_from_tree,
    "plv": plv_from_tree,
    "nsv": nsv_from_tree,
    "nlv": nlv_from_tree,
}

"""The downsampling engine.

A single post-order pass applies one rule per node, chosen by node kind
and, for elements, by ground-truth class:

* attributes are dropped when their relevance score falls below ``m``,
* text is pruned sentence-wise to the ratio ``l``,
* content elements are rewritten as Markdown text,
* interactive elements pass through untouched,
* unrated wrappers dissolve into their children (a small set of pure
  noise tags loses the whole subtree),
* containers merge upward according to ``k``.

Merging works on frozen depths: before the pass, every element records
its original element depth.  With merge unit ``u`` (derived from ``k``
and the tree height) only depths divisible by ``u`` keep their level;
every other container folds into its parent.  Whichever side scores
higher survives as the merged node's identity, ties keep the parent.

The input tree is never modified; the returned snapshot is built on a
deep clone.
"""

from __future__ import annotations

import math

from .dom import (
    DomNode,
    NodeKind,
    coalesce_text,
    deep_clone,
    height,
    normalize_whitespace,
)
from .errors import ContractViolation
from .ground_truth import (
    ElementClass,
    NOISE_ELEMENTS,
    attribute_score,
    element_class,
    element_score,
)
from .markdown import translate
from .textrank import prune_text

__all__ = ["d2snap", "merge_unit", "annotate_uids", "UID_ATTRIBUTE"]

UID_ATTRIBUTE = "data-uid"


class _Context:
    __slots__ = ("merge_unit", "l", "m", "linearize", "split_colon",
                 "rounding", "depths")

    def __init__(self, merge_unit, l, m, linearize, split_colon, rounding,
                 depths):
        self.merge_unit = merge_unit
        self.l = l
        self.m = m
        self.linearize = linearize
        self.split_colon = split_colon
        self.rounding = rounding
        self.depths = depths


def merge_unit(k: float, tree_height: int) -> int | None:
    """Depth modulus for container merging; ``None`` disables merging.

    The unit is the rounded-up share of the tree height, so any k > 0 on
    a non-trivial tree merges something: u == 1 keeps every level (all
    depths divide 1) which makes k near zero a graceful no-op.
    """
    if k == 0 or tree_height == 0:
        return None
    # round() guards artifacts like 0.7 * 10 == 6.999...; the max() guard
    # covers k so tiny the rounding underflows to zero
    return max(math.ceil(round(k * tree_height, 12)), 1)


def _freeze_depths(root: DomNode) -> dict[int, int]:
    depths: dict[int, int] = {}

    def walk(node: DomNode, depth: int) -> None:
        for child in node.children:
            if child.kind is NodeKind.ELEMENT:
                depths[id(child)] = depth
                walk(child, depth + 1)

    start = 1 if root.kind is NodeKind.ELEMENT else 0
    if root.kind is NodeKind.ELEMENT:
        depths[id(root)] = 0
    walk(root, start)
    return depths


def annotate_uids(root: DomNode) -> int:
    """Give every interactive element a unique ``data-uid``.

    Numbering follows document order and continues above the largest
    value already present, so re-annotating is a no-op for elements that
    were tagged before.  Returns the number of attributes added.
    """
    existing: list[int] = []
    pending: list[DomNode] = []

    def walk(node: DomNode) -> None:
        if (node.kind is NodeKind.ELEMENT
                and element_class(node.name) is ElementClass.INTERACTIVE):
            value = node.get_attr(UID_ATTRIBUTE)
            if value is None:
                pending.append(node)
            else:
                try:
                    existing.append(int(value))
                except ValueError:
                    pass
        for child in node.children:
            walk(child)

    walk(root)
    counter = max(existing) + 1 if existing else 0
    for node in pending:
        node.set_attr(UID_ATTRIBUTE, str(counter))
        counter += 1
    return len(pending)


def d2snap(root: DomNode, k: float = 0.0, l: float = 0.0, m: float = 0.0,
           *, linearize: bool = False, split_colon: bool = False,
           rounding: str = "floor", annotate: bool = False) -> DomNode:
    """Downsample a DOM tree and return the snapshot as a new tree.

    ``k``, ``l`` and ``m`` are the container-merge, text-prune and
    attribute-threshold parameters, each in [0, 1].  ``linearize``
    dissolves every container regardless of ``k``, leaving a flat
    sequence of Markdown text and interactive elements.  ``rounding``
    ("floor" or "ceiling") picks how fractional sentence-removal counts
    resolve.  With ``annotate`` interactive elements get ``data-uid``
    markers before downsampling.
    """
    for name, value in (("k", k), ("l", l), ("m", m)):
        if not 0.0 <= value <= 1.0:
            raise ContractViolation(f"parameter {name} out of range: {value}")
    if rounding not in ("floor", "ceiling"):
        raise ContractViolation(f"unknown rounding mode: {rounding!r}")

    snapshot = deep_clone(root)
    if annotate:
        annotate_uids(snapshot)
    normalize_whitespace(snapshot)
    unit = None if linearize else merge_unit(k, height(snapshot))
    ctx = _Context(unit, l, m, linearize, split_colon, rounding,
                   _freeze_depths(snapshot))
    _process_subtree(snapshot, ctx, in_pre=False)
    coalesce_text(snapshot, "\n")
    _fix_parents(snapshot)
    return snapshot


def _fix_parents(node: DomNode) -> None:
    for child in node.children:
        child.parent = node
        _fix_parents(child)


def _process_subtree(node: DomNode, ctx: _Context, in_pre: bool) -> DomNode:
    """Process all children of *node*, then return whichever element ends
    up occupying *node*'s slot.

    Normally that is *node* itself.  When a child container outranks its
    parent during a merge, the child absorbs the parent and is returned
    instead; its own rule counts as consumed, the caller just moves on.
    """
    if node.kind is NodeKind.ELEMENT and node.name == "pre":
        in_pre = True
    cur = node
    i = 0
    while i < len(cur.children):
        child = cur.children[i]
        if child.kind is NodeKind.ATTRIBUTE:
            if (child.name != UID_ATTRIBUTE
                    and attribute_score(child.name) < ctx.m):
                child.parent = None
                del cur.children[i]
            else:
                i += 1
            continue
        if child.kind is NodeKind.TEXT:
            if in_pre:
                i += 1
                continue
            kept = prune_text(child.value, ctx.l, rounding=ctx.rounding,
                              split_colon=ctx.split_colon)
            if kept:
                child.value = kept
                i += 1
            else:
                child.parent = None
                del cur.children[i]
            continue
        if child.kind is NodeKind.OTHER:
            # comments, doctype, processing instructions
            child.parent = None
            del cur.children[i]
            continue
        if child.name in NOISE_ELEMENTS:
            child.parent = None
            del cur.children[i]
            continue
        survivor = _process_subtree(child, ctx, in_pre)
        if survivor is not child:
            survivor.parent = cur
            cur.children[i] = survivor
            i += 1
            continue
        cur, i = _apply_element(cur, i, child, ctx)
    return cur


def _apply_element(cur: DomNode, i: int, child: DomNode,
                   ctx: _Context) -> tuple[DomNode, int]:
    cls = element_class(child.name)
    if cls is ElementClass.INTERACTIVE:
        return cur, i + 1
    if cls is ElementClass.CONTENT:
        replacement = translate(child, cur)
        if replacement is None:
            return cur, i + 1
        return cur, _splice(cur, i, replacement)
    if cls is ElementClass.OTHER:
        # unrated wrapper: keep the children, lose the tag
        return cur, _splice(cur, i, child.content_children())
    if ctx.linearize:
        return cur, _splice(cur, i, child.content_children())
    if (cur.kind is NodeKind.ELEMENT
            and element_class(cur.name) is ElementClass.CONTAINER
            and ctx.merge_unit is not None
            and ctx.depths.get(id(child), 0) % ctx.merge_unit != 0):
        if element_score(child.name) > element_score(cur.name):
            return _absorb_parent(cur, i, child)
        return _merge_into_parent(cur, i, child)
    return cur, i + 1


def _splice(parent: DomNode, i: int, nodes: list[DomNode]) -> int:
    """Replace ``parent.children[i]`` with *nodes*; return the index just
    past the spliced-in run (its members are already processed)."""
    parent.children[i].parent = None
    parent.children[i:i + 1] = nodes
    for node in nodes:
        node.parent = parent
    return i + len(nodes)


def _merge_into_parent(cur: DomNode, i: int,
                       child: DomNode) -> tuple[DomNode, int]:
    """Fold *child* into *cur*: the parent keeps its identity, gains the
    child's attributes it does not already have, and the child's content
    takes the child's place."""
    child.parent = None
    del cur.children[i]
    taken = {a.name for a in cur.attribute_nodes()}
    insert_at = cur.attr_end()
    for attr in child.attribute_nodes():
        if attr.name in taken:
            continue
        attr.parent = cur
        cur.children.insert(insert_at, attr)
        insert_at += 1
        taken.add(attr.name)
        i += 1
    content = child.content_children()
    cur.children[i:i] = content
    for node in content:
        node.parent = cur
    return cur, i + len(content)


def _absorb_parent(cur: DomNode, i: int,
                   child: DomNode) -> tuple[DomNode, int]:
    """Fold *cur* into *child* when the child outranks it.  The child
    takes over the parent's slot; earlier siblings land before the
    child's own content, later (still unprocessed) siblings land after
    it and processing resumes there."""
    child.parent = None
    del cur.children[i]
    attrs = cur.attribute_nodes()
    pre = cur.children[cur.attr_end():i]
    post = cur.children[i:]
    cur.children = []

    taken = {a.name for a in child.attribute_nodes()}
    insert_at = child.attr_end()
    for attr in attrs:
        if attr.name in taken:
            continue
        attr.parent = child
        child.children.insert(insert_at, attr)
        insert_at += 1
        taken.add(attr.name)

    content_start = child.attr_end()
    child.children[content_start:content_start] = pre
    child.children.extend(post)
    for node in pre:
        node.parent = child
    for node in post:
        node.parent = child
    return child, len(child.children) - len(post)

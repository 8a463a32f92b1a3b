"""Minimal DOM: node model, HTML parsing, serialization, tree utilities.

The tree is a plain hierarchy of :class:`DomNode` objects.  Four node kinds
exist.  Attributes are modelled as leaf children that form a contiguous
leading block inside their owner element's child list, which lets the
downsampling rules treat them uniformly with other nodes.  A synthetic
document node (kind OTHER, name ``#document``) roots every parsed tree so
fragments without a single top element still have one handle.

Parsing builds on :class:`html.parser.HTMLParser` from the stdlib.  No
``html``/``head``/``body`` elements are synthesised: what was in the input
is what ends up in the tree.
"""

from __future__ import annotations

import enum
from html.parser import HTMLParser

from .errors import ParseError, StructureError

__all__ = [
    "NodeKind",
    "DomNode",
    "DOCUMENT_NAME",
    "VOID_ELEMENTS",
    "parse_html",
    "serialize",
    "serialize_pretty",
    "element",
    "text",
    "deep_clone",
    "height",
    "element_depth",
    "normalize_whitespace",
    "coalesce_text",
    "structurally_equal",
]

DOCUMENT_NAME = "#document"

# Elements that never take content and serialize self-closing.
VOID_ELEMENTS = frozenset({
    "area", "base", "br", "col", "embed", "hr", "img", "input",
    "link", "meta", "param", "source", "track", "wbr",
})


class NodeKind(enum.Enum):
    ELEMENT = "element"
    TEXT = "text"
    ATTRIBUTE = "attribute"
    OTHER = "other"


class DomNode:
    """A single DOM node.

    ``name`` holds the tag name for elements, the attribute name for
    attributes, and a ``#``-prefixed marker for text/other nodes.
    ``value`` holds text content or the attribute value.
    """

    __slots__ = ("kind", "name", "value", "children", "parent")

    def __init__(self, kind: NodeKind, name: str, value: str = "",
                 children: list["DomNode"] | None = None):
        self.kind = kind
        self.name = name
        self.value = value
        self.children: list[DomNode] = children if children is not None else []
        self.parent: DomNode | None = None
        for child in self.children:
            child.parent = self

    # -- child/attribute access -------------------------------------------

    def append(self, child: "DomNode") -> None:
        child.parent = self
        self.children.append(child)

    def attr_end(self) -> int:
        """Index one past the leading attribute block."""
        i = 0
        for child in self.children:
            if child.kind is not NodeKind.ATTRIBUTE:
                break
            i += 1
        return i

    def attribute_nodes(self) -> list["DomNode"]:
        return self.children[:self.attr_end()]

    def content_children(self) -> list["DomNode"]:
        """Children that are not attributes."""
        return self.children[self.attr_end():]

    def attrs(self) -> dict[str, str]:
        return {a.name: a.value for a in self.attribute_nodes()}

    def get_attr(self, name: str) -> str | None:
        for a in self.attribute_nodes():
            if a.name == name:
                return a.value
        return None

    def set_attr(self, name: str, value: str) -> None:
        for a in self.attribute_nodes():
            if a.name == name:
                a.value = value
                return
        node = DomNode(NodeKind.ATTRIBUTE, name, value)
        node.parent = self
        self.children.insert(self.attr_end(), node)

    def remove_child(self, child: "DomNode") -> None:
        try:
            self.children.remove(child)
        except ValueError:
            raise StructureError(f"node {child!r} is not a child of {self!r}")
        child.parent = None

    def text_content(self) -> str:
        """Concatenated text of the subtree, attribute values excluded."""
        parts: list[str] = []
        stack = [self]
        while stack:
            node = stack.pop()
            if node.kind is NodeKind.TEXT:
                parts.append(node.value)
            elif node.kind is not NodeKind.ATTRIBUTE:
                stack.extend(reversed(node.children))
        return "".join(parts)

    def __repr__(self) -> str:
        if self.kind is NodeKind.ELEMENT:
            return f"<DomNode element {self.name} children={len(self.children)}>"
        if self.kind is NodeKind.ATTRIBUTE:
            return f"<DomNode attr {self.name}={self.value!r}>"
        return f"<DomNode {self.kind.value} {self.name} {self.value!r}>"


def element(name: str, attrs: dict[str, str] | None = None,
            *children: DomNode) -> DomNode:
    """Convenience constructor used by tests and demos."""
    node = DomNode(NodeKind.ELEMENT, name)
    for attr_name, attr_value in (attrs or {}).items():
        node.append(DomNode(NodeKind.ATTRIBUTE, attr_name, attr_value))
    for child in children:
        node.append(child)
    return node


def text(value: str) -> DomNode:
    return DomNode(NodeKind.TEXT, "#text", value)


def deep_clone(node: DomNode) -> DomNode:
    clone = DomNode(node.kind, node.name, node.value)
    for child in node.children:
        clone.append(deep_clone(child))
    return clone


# -- parsing ---------------------------------------------------------------

# Start tags that implicitly close an open <p>.
_P_CLOSERS = frozenset({
    "address", "article", "aside", "blockquote", "details", "div", "dl",
    "fieldset", "figcaption", "figure", "footer", "form",
    "h1", "h2", "h3", "h4", "h5", "h6", "header", "hr", "main", "menu",
    "nav", "ol", "p", "pre", "section", "table", "ul",
})

# Inline elements the implicit-close scan may step over.
_TRANSPARENT = frozenset({
    "a", "abbr", "b", "cite", "code", "em", "i", "label", "mark", "q",
    "s", "small", "span", "strong", "sub", "sup", "time", "u",
})


class _TreeBuilder(HTMLParser):
    def __init__(self) -> None:
        super().__init__(convert_charrefs=True)
        self.root = DomNode(NodeKind.OTHER, DOCUMENT_NAME)
        self._stack: list[DomNode] = [self.root]

    # -- stack helpers --

    def _top(self) -> DomNode:
        return self._stack[-1]

    def _pop_to(self, node: DomNode) -> None:
        while self._stack[-1] is not node:
            self._stack.pop()
        self._stack.pop()

    def _close_through(self, targets: frozenset[str]) -> None:
        """Close the nearest open element named in *targets*, if the walk
        up only crosses transparent inline elements."""
        for node in reversed(self._stack[1:]):
            if node.name in targets:
                self._pop_to(node)
                return
            if node.name not in _TRANSPARENT:
                return

    def _implicit_closes(self, tag: str) -> None:
        if tag in _P_CLOSERS:
            self._close_through(frozenset({"p"}))
        if tag == "li":
            self._close_through(frozenset({"li"}))
        elif tag in ("dt", "dd"):
            self._close_through(frozenset({"dt", "dd"}))
        elif tag in ("td", "th"):
            self._close_through(frozenset({"td", "th"}))
        elif tag == "tr":
            self._close_through(frozenset({"td", "th"}))
            self._close_through(frozenset({"tr"}))
        elif tag == "option":
            self._close_through(frozenset({"option"}))
        elif tag == "optgroup":
            self._close_through(frozenset({"option"}))
            self._close_through(frozenset({"optgroup"}))

    # -- HTMLParser callbacks --

    def handle_starttag(self, tag: str, attrs) -> None:
        self._implicit_closes(tag)
        node = DomNode(NodeKind.ELEMENT, tag)
        seen: set[str] = set()
        for name, value in attrs:
            if name in seen:
                continue  # duplicate attribute: first wins
            seen.add(name)
            node.append(DomNode(NodeKind.ATTRIBUTE, name,
                                "" if value is None else value))
        self._top().append(node)
        if tag not in VOID_ELEMENTS:
            self._stack.append(node)

    def handle_startendtag(self, tag: str, attrs) -> None:
        pushed = tag not in VOID_ELEMENTS
        self.handle_starttag(tag, attrs)
        if pushed:
            self._stack.pop()

    def handle_endtag(self, tag: str) -> None:
        if tag in VOID_ELEMENTS:
            return
        for node in reversed(self._stack[1:]):
            if node.name == tag:
                self._pop_to(node)
                return
        # stray end tag: ignore

    def handle_data(self, data: str) -> None:
        if not data:
            return
        top = self._top()
        if top.children and top.children[-1].kind is NodeKind.TEXT:
            top.children[-1].value += data
        else:
            top.append(text(data))

    def handle_comment(self, data: str) -> None:
        self._top().append(DomNode(NodeKind.OTHER, "#comment", data))

    def handle_decl(self, decl: str) -> None:
        self._top().append(DomNode(NodeKind.OTHER, "#decl", decl))

    def handle_pi(self, data: str) -> None:
        self._top().append(DomNode(NodeKind.OTHER, "#pi", data))


def _decode(source: bytes, encoding: str | None) -> str:
    if encoding is not None:
        try:
            return source.decode(encoding)
        except (UnicodeDecodeError, LookupError) as exc:
            raise ParseError(f"cannot decode input as {encoding}: {exc}") from exc
    try:
        return source.decode("utf-8-sig")
    except UnicodeDecodeError:
        return source.decode("latin-1")


def parse_html(source: str | bytes, encoding: str | None = None) -> DomNode:
    """Parse HTML into a tree and return the synthetic document node.

    ``source`` may be text or bytes.  Bytes are decoded with *encoding*
    when given (errors raise :class:`ParseError`), otherwise UTF-8 is
    tried first with a Latin-1 fallback.
    """
    if isinstance(source, bytes):
        source = _decode(source, encoding)
    builder = _TreeBuilder()
    builder.feed(source)
    builder.close()
    return builder.root


# -- serialization ---------------------------------------------------------

def _escape_text(value: str) -> str:
    # ">" is legal unescaped in text content, and Markdown quote markers
    # should survive serialization readable.
    return value.replace("&", "&amp;").replace("<", "&lt;")


def _escape_attr(value: str) -> str:
    return (value.replace("&", "&amp;").replace("<", "&lt;")
            .replace('"', "&quot;"))


def _open_tag(node: DomNode, self_close: bool) -> str:
    parts = [f"<{node.name}"]
    for attr in node.attribute_nodes():
        parts.append(f' {attr.name}="{_escape_attr(attr.value)}"')
    parts.append("/>" if self_close else ">")
    return "".join(parts)


def serialize(node: DomNode) -> str:
    """Minified serialization: no injected indentation or separators."""
    out: list[str] = []
    _serialize_into(node, out)
    return "".join(out)


def _serialize_into(node: DomNode, out: list[str]) -> None:
    if node.kind is NodeKind.TEXT:
        out.append(_escape_text(node.value))
        return
    if node.kind is NodeKind.ATTRIBUTE:
        return  # emitted inside the open tag
    if node.kind is NodeKind.OTHER:
        if node.name == DOCUMENT_NAME:
            for child in node.children:
                _serialize_into(child, out)
        elif node.name == "#comment":
            out.append(f"<!--{node.value}-->")
        elif node.name == "#decl":
            out.append(f"<!{node.value}>")
        elif node.name == "#pi":
            out.append(f"<?{node.value}>")
        return
    content = node.content_children()
    if node.name in VOID_ELEMENTS and not content:
        out.append(_open_tag(node, self_close=True))
        return
    out.append(_open_tag(node, self_close=False))
    for child in content:
        _serialize_into(child, out)
    out.append(f"</{node.name}>")


def serialize_pretty(node: DomNode, indent: str = "  ") -> str:
    """Readable serialization: one node per line, two-space indentation.

    An element whose only content is a single-line text node is kept on
    one line.  Multi-line text prints line by line at the current depth.
    """
    lines: list[str] = []
    _pretty_into(node, 0, indent, lines)
    return "\n".join(lines) + ("\n" if lines else "")


def _pretty_into(node: DomNode, depth: int, indent: str, lines: list[str]) -> None:
    pad = indent * depth
    if node.kind is NodeKind.TEXT:
        for line in _escape_text(node.value).split("\n"):
            lines.append(pad + line)
        return
    if node.kind is NodeKind.ATTRIBUTE:
        return
    if node.kind is NodeKind.OTHER:
        if node.name == DOCUMENT_NAME:
            for child in node.children:
                _pretty_into(child, depth, indent, lines)
        elif node.name == "#comment":
            lines.append(f"{pad}<!--{node.value}-->")
        elif node.name == "#decl":
            lines.append(f"{pad}<!{node.value}>")
        elif node.name == "#pi":
            lines.append(f"{pad}<?{node.value}>")
        return
    content = node.content_children()
    if node.name in VOID_ELEMENTS and not content:
        lines.append(pad + _open_tag(node, self_close=True))
        return
    open_tag = _open_tag(node, self_close=False)
    if (len(content) == 1 and content[0].kind is NodeKind.TEXT
            and "\n" not in content[0].value):
        lines.append(f"{pad}{open_tag}{_escape_text(content[0].value)}</{node.name}>")
        return
    lines.append(pad + open_tag)
    for child in content:
        _pretty_into(child, depth + 1, indent, lines)
    lines.append(f"{pad}</{node.name}>")


# -- measurements and normal forms ------------------------------------------

def height(node: DomNode) -> int:
    """Longest chain of element-to-element edges below *node*.

    A childless element has height 0.  For non-element nodes (notably the
    document node) the height is that of the tallest element child, since
    the edge from a non-element does not count.
    """
    best = 0
    for child in node.children:
        if child.kind is NodeKind.ELEMENT:
            h = height(child) + (1 if node.kind is NodeKind.ELEMENT else 0)
            best = max(best, h)
    return best


def element_depth(node: DomNode) -> int:
    """Number of element ancestors above *node*."""
    depth = 0
    cur = node.parent
    while cur is not None:
        if cur.kind is NodeKind.ELEMENT:
            depth += 1
        cur = cur.parent
    return depth


def _collapse_ws(value: str) -> str:
    """Collapse whitespace runs; runs containing a newline become a newline.

    Keeping the newline (instead of flattening everything to spaces) means
    a serialized snapshot that is parsed again reproduces the same text
    nodes, which makes repeated downsampling stable.
    """
    out: list[str] = []
    run_has_newline = False
    in_run = False
    for ch in value:
        if ch.isspace():
            in_run = True
            if ch == "\n":
                run_has_newline = True
            continue
        if in_run:
            out.append("\n" if run_has_newline else " ")
            in_run = False
            run_has_newline = False
        out.append(ch)
    if in_run:
        out.append("\n" if run_has_newline else " ")
    return "".join(out).strip()


def normalize_whitespace(root: DomNode) -> None:
    """Collapse whitespace in all text nodes in place; drop empty ones.

    Subtrees under a ``pre`` element keep their text verbatim.
    """
    _normalize(root, in_pre=False)


def _normalize(node: DomNode, in_pre: bool) -> None:
    if node.kind is NodeKind.ELEMENT and node.name == "pre":
        in_pre = True
    kept: list[DomNode] = []
    for child in node.children:
        if child.kind is NodeKind.TEXT and not in_pre:
            child.value = _collapse_ws(child.value)
            if not child.value:
                child.parent = None
                continue
        elif child.kind in (NodeKind.ELEMENT, NodeKind.OTHER):
            _normalize(child, in_pre)
        kept.append(child)
    node.children = kept


def coalesce_text(node: DomNode, sep: str = "\n") -> None:
    """Join adjacent text siblings throughout the subtree."""
    merged: list[DomNode] = []
    for child in node.children:
        if (child.kind is NodeKind.TEXT and merged
                and merged[-1].kind is NodeKind.TEXT):
            merged[-1].value += sep + child.value
            child.parent = None
            continue
        merged.append(child)
        if child.kind in (NodeKind.ELEMENT, NodeKind.OTHER):
            coalesce_text(child, sep)
    node.children = merged


def structurally_equal(a: DomNode, b: DomNode, *,
                       ignore_whitespace: bool = False) -> bool:
    """Compare two trees: attributes as unordered name/value sets, other
    children ordered.  With *ignore_whitespace* text values are compared
    after collapsing whitespace runs to single spaces."""
    if a.kind is not b.kind or a.name != b.name:
        return False
    if a.kind is NodeKind.TEXT or a.kind is NodeKind.ATTRIBUTE or (
            a.kind is NodeKind.OTHER and a.name != DOCUMENT_NAME):
        va, vb = a.value, b.value
        if ignore_whitespace:
            va, vb = " ".join(va.split()), " ".join(vb.split())
        return va == vb
    if a.kind is NodeKind.ELEMENT and a.attrs() != b.attrs():
        return False
    ca, cb = a.content_children(), b.content_children()
    if len(ca) != len(cb):
        return False
    return all(structurally_equal(x, y, ignore_whitespace=ignore_whitespace)
               for x, y in zip(ca, cb))

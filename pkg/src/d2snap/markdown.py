"""Translation of text-bearing elements into GitHub-flavoured Markdown.

Runs bottom-up: by the time an element is translated, its descendants are
already reduced to text runs plus the elements that survive downsampling
(links, buttons, form controls).  Translation therefore returns a flat
replacement list in which surviving child elements stay interleaved with
the produced text.

Table cells are the one deferred case: a ``td``/``th`` directly inside a
``tr`` is left intact so the row can assemble ``| a | b |`` with cell
boundaries still known.
"""

from __future__ import annotations

import re

from .dom import DomNode, NodeKind, _collapse_ws, text

__all__ = ["translate"]

_HEADINGS = {f"h{i}": "#" * i + " " for i in range(1, 7)}

# Content tags whose children splice through unchanged and separately,
# one block per line.
_BLOCK_SPLICE = frozenset({"ul", "ol", "tbody", "figure"})


def _merge_adjacent_runs(children: list[DomNode], joiner: str = " ") -> list[DomNode]:
    """Join neighbouring text nodes so inline fragments form one run."""
    merged: list[DomNode] = []
    for child in children:
        if (child.kind is NodeKind.TEXT and merged
                and merged[-1].kind is NodeKind.TEXT):
            merged[-1] = text(merged[-1].value + joiner + child.value)
            continue
        merged.append(child)
    return merged


def _wrap_runs(children: list[DomNode], left: str, right: str) -> list[DomNode]:
    out = []
    for child in children:
        if child.kind is NodeKind.TEXT and child.value:
            out.append(text(left + child.value + right))
        else:
            out.append(child)
    return out


def _prefix_first_run(children: list[DomNode], marker: str) -> list[DomNode]:
    out = list(children)
    for i, child in enumerate(out):
        if child.kind is NodeKind.TEXT:
            out[i] = text(marker + child.value)
            break
    return out


def _cell_text(cell: DomNode) -> tuple[str, list[DomNode]]:
    """Flatten a table cell into one line; element children are handed
    back so they can be re-attached after the row."""
    runs: list[str] = []
    extras: list[DomNode] = []
    for child in cell.content_children():
        if child.kind is NodeKind.TEXT:
            runs.append(child.value.replace("|", "\\|").replace("\n", " "))
        else:
            extras.append(child)
    return " ".join(runs), extras


def _translate_row(node: DomNode) -> list[DomNode]:
    cells = []
    extras: list[DomNode] = []
    for child in node.content_children():
        if child.kind is NodeKind.ELEMENT and child.name in ("td", "th"):
            cells.append(child)
        else:
            extras.append(child)
    if not cells:
        return _merge_adjacent_runs(node.content_children())
    values = []
    for cell in cells:
        value, spill = _cell_text(cell)
        values.append(value)
        extras.extend(spill)
    # empty cells would pad to a double space, which later whitespace
    # normalisation would squeeze anyway; emit the stable form directly
    row = re.sub(" {2,}", " ", "| " + " | ".join(values) + " |")
    out = [text(row)]
    if all(c.name == "th" for c in cells):
        out.append(text("| " + " | ".join("---" for _ in cells) + " |"))
    return out + extras


def _is_separator_row(node: DomNode) -> bool:
    if node.kind is not NodeKind.TEXT:
        return False
    body = node.value.strip("| ")
    return bool(body) and set(body) <= {"-", " ", "|"}


def _translate_table(node: DomNode) -> list[DomNode]:
    children = node.content_children()
    rows = [c for c in children if c.kind is NodeKind.TEXT
            and c.value.startswith("|")]
    if rows and not any(_is_separator_row(r) for r in children):
        # column boundaries are " | " runs; escaped \| pipes do not count
        columns = rows[0].value.count(" | ") + 1
        separator = text("| " + " | ".join("---" for _ in range(columns)) + " |")
        out = []
        for child in children:
            out.append(child)
            if child is rows[0]:
                out.append(separator)
        return out
    return children


def _translate_pre(node: DomNode) -> list[DomNode]:
    raw: list[str] = []
    extras: list[DomNode] = []
    for child in node.content_children():
        if child.kind is NodeKind.TEXT:
            raw.append(child.value)
        else:
            extras.append(child)
    # once fenced, the text lives outside any pre element, so it has to
    # survive ordinary whitespace normalisation; collapse it up front
    # (per-line indentation is not representable there anyway)
    body = _collapse_ws("".join(raw))
    if not body and not extras:
        return []
    out: list[DomNode] = []
    if body:
        out.append(text(f"```\n{body}\n```"))
    return out + extras


def _translate_blockquote(node: DomNode) -> list[DomNode]:
    out: list[DomNode] = []
    for child in _merge_adjacent_runs(node.content_children(), joiner="\n"):
        if child.kind is NodeKind.TEXT:
            quoted = "\n".join("> " + line for line in child.value.split("\n"))
            out.append(text(quoted))
        else:
            out.append(child)
    return out


def translate(node: DomNode, parent: DomNode) -> list[DomNode] | None:
    """Replace a content element with Markdown text nodes.

    Returns the replacement list, or ``None`` when the element must stay
    in place for its parent to consume (table cells inside a row).
    """
    name = node.name
    if name in _HEADINGS:
        runs = _merge_adjacent_runs(node.content_children())
        return _prefix_first_run(runs, _HEADINGS[name])
    if name == "li":
        marker = "1. " if parent.name == "ol" else "- "
        runs = _merge_adjacent_runs(node.content_children())
        return _prefix_first_run(runs, marker)
    if name in ("b", "strong"):
        return _wrap_runs(_merge_adjacent_runs(node.content_children()), "**", "**")
    if name == "em":
        return _wrap_runs(_merge_adjacent_runs(node.content_children()), "*", "*")
    if name == "code":
        if parent.name == "pre":
            return node.content_children()
        return _wrap_runs(_merge_adjacent_runs(node.content_children()), "`", "`")
    if name == "img":
        src = node.get_attr("src")
        if not src:
            return []
        # attribute values bypass text normalisation, but the alt text is
        # about to become text; collapse it so the output stays stable
        alt = _collapse_ws(node.get_attr("alt") or "")
        return [text(f"![{alt}]({src})")]
    if name == "hr":
        return [text("---")]
    if name == "pre":
        return _translate_pre(node)
    if name == "blockquote":
        return _translate_blockquote(node)
    if name == "table":
        return _translate_table(node)
    if name == "tr":
        return _translate_row(node)
    if name in ("td", "th"):
        if parent.name == "tr":
            return None
        return _merge_adjacent_runs(node.content_children())
    if name in _BLOCK_SPLICE:
        return node.content_children()
    # p, span, small, sub, sup, address, figcaption and anything else
    # text-like: the wrapper dissolves, inline fragments join up.
    return _merge_adjacent_runs(node.content_children())

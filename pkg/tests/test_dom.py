"""Node model, parser, serializers and tree utilities."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from d2snap import (
    DOCUMENT_NAME,
    DomNode,
    NodeKind,
    ParseError,
    StructureError,
    deep_clone,
    element,
    element_depth,
    height,
    normalize_whitespace,
    parse_html,
    serialize,
    serialize_pretty,
    structurally_equal,
    text,
)
from d2snap.dom import coalesce_text


def first_element(root):
    for child in root.children:
        if child.kind is NodeKind.ELEMENT:
            return child
    raise AssertionError("no element child")


class TestParsing:
    def test_document_root(self):
        root = parse_html("<div>hi</div>")
        assert root.kind is NodeKind.OTHER
        assert root.name == DOCUMENT_NAME
        assert root.parent is None

    def test_no_wrapper_synthesis(self):
        # a fragment stays a fragment: nothing invents html/head/body
        root = parse_html("<section><p>x</p></section>")
        names = [c.name for c in root.children]
        assert names == ["section"]

    def test_attributes_become_leading_children(self):
        div = first_element(parse_html('<div id="a" class="b">t</div>'))
        kinds = [c.kind for c in div.children]
        assert kinds == [NodeKind.ATTRIBUTE, NodeKind.ATTRIBUTE, NodeKind.TEXT]
        assert div.attrs() == {"id": "a", "class": "b"}

    def test_duplicate_attribute_first_wins(self):
        div = first_element(parse_html('<div id="a" id="b"></div>'))
        assert div.attrs() == {"id": "a"}

    def test_names_lowercased(self):
        div = first_element(parse_html('<DIV CLASS="x"></DIV>'))
        assert div.name == "div"
        assert div.attrs() == {"class": "x"}

    def test_valueless_attribute(self):
        node = first_element(parse_html("<input disabled>"))
        assert node.attrs() == {"disabled": ""}

    def test_void_elements_do_not_nest(self):
        root = parse_html("<div><img src='x'><p>after</p></div>")
        div = first_element(root)
        names = [c.name for c in div.content_children()]
        assert names == ["img", "p"]
        img = div.content_children()[0]
        assert img.content_children() == []

    def test_implicit_p_close(self):
        root = parse_html("<p>one<p>two</p>")
        names = [c.name for c in root.children]
        assert names == ["p", "p"]
        assert root.children[0].text_content() == "one"

    def test_implicit_li_close(self):
        ul = first_element(parse_html("<ul><li>a<li>b</ul>"))
        items = [c for c in ul.content_children() if c.name == "li"]
        assert [i.text_content() for i in items] == ["a", "b"]

    def test_implicit_table_cell_close(self):
        root = parse_html("<table><tr><td>a<td>b<tr><td>c</table>")
        table = first_element(root)
        rows = [c for c in table.content_children() if c.name == "tr"]
        assert len(rows) == 2
        assert [c.text_content() for c in rows[0].content_children()] == ["a", "b"]

    def test_stray_end_tag_ignored(self):
        root = parse_html("<div>a</span></div>")
        assert first_element(root).text_content() == "a"

    def test_eof_closes_open_elements(self):
        root = parse_html("<div><span>x")
        div = first_element(root)
        assert div.content_children()[0].name == "span"

    def test_comment_doctype_pi_kinds(self):
        root = parse_html("<!DOCTYPE html><!-- c --><?pi data><div></div>")
        names = [c.name for c in root.children]
        assert names == ["#decl", "#comment", "#pi", "div"]
        assert all(c.kind is NodeKind.OTHER for c in root.children[:3])

    def test_script_content_stays_raw(self):
        root = parse_html("<script>if (a < b) { x(); }</script>")
        script = first_element(root)
        assert script.text_content() == "if (a < b) { x(); }"

    def test_entities_decoded(self):
        root = parse_html("<p>a &amp; b &lt;c&gt;</p>")
        assert first_element(root).text_content() == "a & b <c>"

    def test_text_chunks_coalesced_at_parse(self):
        root = parse_html("<p>a&amp;b</p>")
        p = first_element(root)
        assert len(p.content_children()) == 1
        assert p.content_children()[0].value == "a&b"


class TestEncoding:
    def test_str_passthrough(self):
        assert first_element(parse_html("<p>é</p>")).text_content() == "é"

    def test_bytes_utf8_default(self):
        assert first_element(parse_html("<p>é</p>".encode())).text_content() == "é"

    def test_bytes_utf8_bom_stripped(self):
        root = parse_html(b"\xef\xbb\xbf<p>x</p>")
        assert first_element(root).name == "p"

    def test_latin1_fallback(self):
        root = parse_html("<p>café</p>".encode("latin-1"))
        assert first_element(root).text_content() == "café"

    def test_explicit_encoding(self):
        raw = "<p>grüß</p>".encode("cp1252")
        assert first_element(parse_html(raw, encoding="cp1252")).text_content() == "grüß"

    def test_bad_hint_raises(self):
        with pytest.raises(ParseError):
            parse_html("<p>日本語</p>".encode("utf-8"), encoding="ascii")

    def test_unknown_codec_raises(self):
        with pytest.raises(ParseError):
            parse_html(b"<p>x</p>", encoding="no-such-codec")


class TestSerialize:
    def test_minified_has_no_injected_whitespace(self):
        src = '<div id="a"><p>x</p><p>y</p></div>'
        assert serialize(parse_html(src)) == src

    def test_void_self_closing(self):
        assert serialize(parse_html('<img src="a.png">')) == '<img src="a.png"/>'

    def test_text_escaping(self):
        out = serialize(parse_html("<p>a &amp; b &lt;tag&gt;</p>"))
        assert out == "<p>a &amp; b &lt;tag></p>"
        assert parse_html(out).children[0].text_content() == "a & b <tag>"

    def test_gt_not_escaped_in_text(self):
        root = DomNode(NodeKind.OTHER, DOCUMENT_NAME, children=[text("> quote")])
        assert serialize(root) == "> quote"

    def test_attribute_escaping(self):
        root = parse_html('<div title="a &quot;b&quot; &amp; c"></div>')
        assert serialize(root) == '<div title="a &quot;b&quot; &amp; c"></div>'

    def test_comment_decl_roundtrip(self):
        src = "<!DOCTYPE html><!--note--><div></div>"
        assert serialize(parse_html(src)) == src

    def test_pretty_inlines_single_text_child(self):
        out = serialize_pretty(parse_html("<div><p>short</p></div>"))
        assert out == "<div>\n  <p>short</p>\n</div>\n"

    def test_pretty_multiline_text_indented(self):
        root = parse_html("<div></div>")
        first_element(root).append(text("one\ntwo"))
        assert serialize_pretty(root) == "<div>\n  one\n  two\n</div>\n"

    def test_pretty_void(self):
        assert serialize_pretty(parse_html("<br>")) == "<br/>\n"


class TestMeasures:
    def test_height_counts_element_edges(self):
        root = parse_html("<section><div><div><div><h2>x</h2></div></div></div></section>")
        assert height(root) == 4
        assert height(first_element(root)) == 4

    def test_height_ignores_text(self):
        assert height(parse_html("<div>just text</div>")) == 0

    def test_height_empty(self):
        assert height(parse_html("")) == 0

    def test_height_siblings(self):
        root = parse_html("<div><span></span></div><div><p><b>x</b></p></div>")
        assert height(root) == 2

    def test_element_depth(self):
        root = parse_html("<div><section><p>x</p></section></div>")
        div = first_element(root)
        section = div.content_children()[0]
        p = section.content_children()[0]
        assert element_depth(div) == 0
        assert element_depth(section) == 1
        assert element_depth(p) == 2

    def test_remove_child_requires_membership(self):
        a, b = element("div"), element("span")
        with pytest.raises(StructureError):
            a.remove_child(b)


class TestNormalize:
    def test_runs_collapse_to_single_space(self):
        root = parse_html("<p>a   b\t\tc</p>")
        normalize_whitespace(root)
        assert first_element(root).text_content() == "a b c"

    def test_newline_runs_collapse_to_newline(self):
        root = parse_html("<p>a \n  b</p>")
        normalize_whitespace(root)
        assert first_element(root).text_content() == "a\nb"

    def test_strip_and_drop_empty(self):
        root = parse_html("<div>  <p>  x  </p>  </div>")
        normalize_whitespace(root)
        div = first_element(root)
        assert len(div.content_children()) == 1
        assert div.text_content() == "x"

    def test_pre_exempt(self):
        src = "<pre>  keep\n   this  </pre>"
        root = parse_html(src)
        normalize_whitespace(root)
        assert first_element(root).text_content() == "  keep\n   this  "

    def test_coalesce_joins_adjacent_text(self):
        div = element("div", None, text("a"), element("br"), text("b"))
        div.children = [c for c in div.children if c.name != "br"]
        coalesce_text(div)
        assert [c.value for c in div.children] == ["a\nb"]


class TestClone:
    def test_deep_clone_is_independent(self):
        root = parse_html('<div id="a"><p>x</p></div>')
        copy = deep_clone(root)
        first_element(copy).set_attr("id", "changed")
        first_element(copy).append(text("new"))
        assert first_element(root).get_attr("id") == "a"
        assert serialize(root) == '<div id="a"><p>x</p></div>'

    def test_clone_parents_rebuilt(self):
        copy = deep_clone(parse_html("<div><p>x</p></div>"))
        p = first_element(copy).content_children()[0]
        assert p.parent is first_element(copy)


class TestStructuralEquality:
    def test_attribute_order_irrelevant(self):
        a = parse_html('<div id="1" class="x"></div>')
        b = parse_html('<div class="x" id="1"></div>')
        assert structurally_equal(a, b)

    def test_attribute_value_matters(self):
        a = parse_html('<div id="1"></div>')
        b = parse_html('<div id="2"></div>')
        assert not structurally_equal(a, b)

    def test_child_order_matters(self):
        a = parse_html("<div><p>x</p><span>y</span></div>")
        b = parse_html("<div><span>y</span><p>x</p></div>")
        assert not structurally_equal(a, b)

    def test_whitespace_insensitive_mode(self):
        a = parse_html("<p>a\nb</p>")
        b = parse_html("<p>a b</p>")
        assert not structurally_equal(a, b)
        assert structurally_equal(a, b, ignore_whitespace=True)


# -- property: serialization reaches a parse-stable fixed point -------------

_SAFE_NAMES = st.sampled_from([
    "div", "section", "article", "span", "em", "strong", "nav", "main",
    "header", "footer", "blockquote", "h1", "h2", "label", "button", "a",
    "form", "figure",
])
_TEXTS = st.text(
    alphabet=st.characters(blacklist_categories=("Cs", "Cc"),
                           blacklist_characters="\r"),
    min_size=1, max_size=40,
)
_ATTR_NAMES = st.sampled_from(["id", "class", "href", "title", "data-x", "role"])
_ATTRS = st.dictionaries(_ATTR_NAMES, _TEXTS, max_size=3)


def _tree(draw, depth=0):
    children = []
    if depth < 3:
        for _ in range(draw(st.integers(0, 3))):
            if draw(st.booleans()):
                children.append(text(draw(_TEXTS)))
            else:
                children.append(_tree(draw, depth + 1))
    return element(draw(_SAFE_NAMES), draw(_ATTRS), *children)


@st.composite
def dom_trees(draw):
    root = DomNode(NodeKind.OTHER, DOCUMENT_NAME)
    root.append(_tree(draw))
    return root


@given(dom_trees())
@settings(max_examples=60, deadline=None)
def test_serialize_parse_fixed_point(tree):
    once = serialize(parse_html(serialize(tree)))
    assert serialize(parse_html(once)) == once


@given(dom_trees())
@settings(max_examples=60, deadline=None)
def test_parse_recovers_structure(tree):
    # names avoid implicit-close pairs, so one round trip is lossless up
    # to text-chunk merging
    reparsed = parse_html(serialize(tree))
    coalesce_text(tree, sep="")
    coalesce_text(reparsed, sep="")
    assert structurally_equal(tree, reparsed)

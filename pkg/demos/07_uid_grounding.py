"""Stable handles for interactive elements.

A model reading a snapshot needs a way to point back at concrete nodes
("click the element with uid 2").  annotate=True numbers every
interactive element with a data-uid attribute in document order.  The
numbering is idempotent, continues above pre-existing integer uids, and
survives any attribute threshold m.
"""

from d2snap import d2snap, parse_html, serialize_pretty

PAGE = """
<body>
  <form action="/search">
    <input name="q" placeholder="Search">
    <button type="submit">Go</button>
  </form>
  <nav>
    <a href="/a">First</a>
    <a href="/b" data-uid="40">Already numbered</a>
  </nav>
</body>
"""

tree = parse_html(PAGE)

snap = d2snap(tree, k=1.0, m=1.0, annotate=True)
print("m=1.0 strips every attribute except the grounding uids:")
print(serialize_pretty(snap))
print()

again = d2snap(parse_html(serialize_pretty(snap)), annotate=True)
print("re-annotating a snapshot changes nothing:")
print(serialize_pretty(again))

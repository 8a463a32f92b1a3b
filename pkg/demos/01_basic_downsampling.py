"""Walk one page through the engine at a few parameter settings.

The three ratios act on independent axes: k merges layout containers,
l prunes sentences, m filters attributes.  Watch the byte size drop
while the buttons and links stay put.
"""

from d2snap import d2snap, estimate_tokens, parse_html, serialize, serialize_pretty

PAGE = """
<body>
  <header class="top" role="banner" data-build="20260814">
    <h1>Harbor Status</h1>
    <nav><a href="/berths">Berths</a> <a href="/tides">Tides</a></nav>
  </header>
  <main>
    <section class="report" data-widget="summary">
      <h2>Morning report</h2>
      <p>
        Fog lifted before six and the channel opened on schedule.
        Two freighters cleared the narrows without assistance.
        The dredging crew resumes work on the east basin today.
        Expect minor delays near berth nine through the afternoon.
      </p>
      <button type="button" data-track="ack">Acknowledge</button>
    </section>
  </main>
  <script>console.log("not part of the page's meaning");</script>
</body>
"""


def show(label, snapshot):
    html = serialize(snapshot)
    print(f"--- {label}: {len(html)} bytes minified, "
          f"~{estimate_tokens(html)} tokens")
    print(serialize_pretty(snapshot))
    print()


tree = parse_html(PAGE)
print(f"input: {len(PAGE)} bytes raw")
print()

show("defaults (normalize + translate only)", d2snap(tree))
show("k=0.5 merges containers", d2snap(tree, k=0.5))
show("l=0.5 halves the paragraph", d2snap(tree, k=0.5, l=0.5))
show("m=0.75 keeps only high-value attributes", d2snap(tree, k=0.5, l=0.5, m=0.75))

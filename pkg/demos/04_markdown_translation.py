"""Content elements become Markdown text; interactive ones stay HTML.

Run this to see each supported construct in its translated form.
"""

from d2snap import d2snap, parse_html, serialize_pretty

SAMPLES = [
    ("headings", "<h1>Title</h1><h2>Subtitle</h2><h3>Section</h3>"),
    ("emphasis", "<p>Mostly plain with <b>bold</b>, <em>italic</em> and "
                 "<code>inline_code()</code>.</p>"),
    ("list", "<ul><li>first</li><li>second</li></ul>"
             "<ol><li>step</li><li>step</li></ol>"),
    ("table", "<table><tr><th>Name</th><th>Qty</th></tr>"
              "<tr><td>Bolt</td><td>40</td></tr>"
              "<tr><td>Nut</td><td>44</td></tr></table>"),
    ("quote and rule", "<blockquote><p>Measure twice.</p></blockquote><hr>"),
    ("code block", "<pre><code>for row in rows:\n    emit(row)</code></pre>"),
    ("image", '<figure><img src="/chart.png" alt="Weekly totals">'
              "<figcaption>Totals by week</figcaption></figure>"),
    ("link stays interactive",
     '<p>Read the <a href="/docs">documentation</a> for details.</p>'),
    ("button inside a cell",
     "<table><tr><th>Job</th><th></th></tr>"
     "<tr><td>sync</td><td><button>Retry</button></td></tr></table>"),
]

for label, html in SAMPLES:
    print(f"--- {label}")
    print(html)
    print("=>")
    print(serialize_pretty(d2snap(parse_html(html))))
    print()

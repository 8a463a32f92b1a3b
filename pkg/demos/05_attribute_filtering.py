"""Attribute filtering against the rating table.

An attribute survives while its score is >= m (strictly lower scores
drop).  Unrated names score 0.0 and vanish at any m > 0; aria-* scores
0.6.  Run with increasing thresholds and watch the tag slim down.
"""

from d2snap import d2snap, parse_html, score_attribute, serialize

TAG = ('<body><a href="/checkout" id="go" class="btn primary" '
       'tabindex="1" aria-label="Proceed to checkout" data-step="3" '
       'onclick="go()">Checkout</a></body>')

tree = parse_html(TAG)
anchor = tree.children[0].children[0]

print("scores:")
for attr in anchor.attribute_nodes():
    print(f"  {attr.name}={attr.value!r}: {score_attribute(attr.name)}")
print()

for m in (0.0, 0.3, 0.6, 0.7, 0.8, 1.0):
    print(f"m={m}: {serialize(d2snap(tree, m=m))}")

"""How container merging works, step by step.

The merge unit u = ceil(k * height) divides the tree's frozen element
depths; containers whose depth is not a multiple of u collapse into
their container parent.  The pair's better-rated name survives, the
attributes union (survivor wins collisions), and the children stay in
document order.  Interactive elements never participate.
"""

from d2snap import d2snap, height, parse_html, serialize_pretty

NESTED = """
<section class="outer">
  <div class="wrap" data-x="1">
    <div class="row">
      <div class="cell">
        <p>Deeply buried text.</p>
        <button>Act</button>
      </div>
    </div>
  </div>
</section>
"""

tree = parse_html(NESTED)
root = next(c for c in tree.children if c.kind.value == "element")
print(f"original height: {height(root)} (section > 3 divs > p)")
print()

for k in (0.0, 0.25, 0.5, 1.0):
    out = d2snap(tree, k=k)
    top = [c for c in out.children if c.kind.value == "element"][0]
    print(f"k={k}: height {height(top)}")
    print(serialize_pretty(out))
    print()

print("note: the section absorbed the divs' attributes where its own")
print("names did not collide, and the button never merged anywhere.")

"""Fit a snapshot under a token budget without hand-picking parameters.

The loop probes (k, l, m) along Halton sequences in bases (5, 3, 2),
scaled by how large the document is against a one-megabyte reference.
Each failed iteration inflates the scale by a 1.125 power, so later
probes downsample harder.  When even the harshest attempt stays over
budget, BudgetError still hands back the smallest snapshot seen.
"""

from d2snap import BudgetError, downsample_to_budget, parse_html, serialize

# a link directory big enough that small budgets get interesting
rows = "".join(
    f'<li><a href="/entry/{i}" class="x">Entry number {i} leads somewhere '
    f"useful.</a></li>"
    for i in range(400)
)
PAGE = f"<body><main><h1>Directory</h1><ul>{rows}</ul></main></body>"
tree = parse_html(PAGE)
print(f"input: {len(PAGE)} bytes")
print()

for budget in (12000, 4000, 700):
    try:
        result = downsample_to_budget(tree, max_tokens=budget)
        k, l, m = result.parameters
        print(f"budget {budget}: fit on iteration {result.iterations} "
              f"with k={k:.3f} l={l:.3f} m={m:.3f} "
              f"-> {result.estimated_tokens} tokens")
    except BudgetError as err:
        print(f"budget {budget}: NOT met; smallest attempt is "
              f"{err.estimated_tokens} tokens "
              f"({len(serialize(err.smallest))} bytes)")

"""Working with the weighted goal hierarchy.

Loads the bundled 27-node case-study knowledge base, inspects its
structure, and walks through the value-style update operations:
normalization, degree edits, and throw-in annotation with the
duplicate-project cloning rule.
"""

import datetime as dt
from importlib import resources

from iopscope import (
    TemporalAnnotation,
    apply_annotation,
    loads_kb,
    normalize_weights,
    set_implementation,
    validate_kb,
)
from iopscope.fixtures import demo_kb

kb = loads_kb(resources.files("iopscope.data")
              .joinpath("nasu_kb.yaml").read_text("utf-8"))
print(f"loaded {len(kb.nodes)} nodes, root: {kb.root.formulation!r}")

report = validate_kb(kb)
print(f"validation ok={report.ok} "
      f"({len(report.errors())} errors, {len(report.warnings())} warnings)")

normalized = normalize_weights(kb)
for goal in sorted(normalized.goals(), key=lambda n: n.id)[:3]:
    weights = ", ".join(f"{e.child}:{e.weight:.3f}" for e in goal.children)
    print(f"goal {goal.id} normalized child weights -> {weights}")

# degree edits return new values; the original is untouched
updated = set_implementation(kb, 13, 1.0)
print(f"node 13 degree: original {kb.nodes[13].implementation_degree}, "
      f"updated {updated.nodes[13].implementation_degree}")

# a second throw-in inside the same calendar year clones the project
pristine = demo_kb()
first = TemporalAnnotation(dt.date(2015, 3, 10), 9, impact_delay_months=9)
second = TemporalAnnotation(dt.date(2015, 8, 21), 15, impact_delay_months=11)
step1 = apply_annotation(pristine, 18, first)
step2 = apply_annotation(step1, 18, second)
added = set(step2.nodes) - set(step1.nodes)
print(f"after the second 2015 throw-in, node 18 became "
      f"{step2.nodes[18].formulation!r} and node {added.pop()} holds the "
      "second burst")

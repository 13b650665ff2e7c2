"""Goal-achievement scoring, the retrospective comparison, and what-ifs.

Reproduces the case study's published arithmetic from its seven
per-period scores, prints the impact timeline implied by the annotated
hierarchy, and runs a few what-if evaluations directly against the
scoring engine.
"""

import datetime as dt
from importlib import resources

from iopscope import (
    EvaluationPeriod,
    build_report,
    compare_and_verdict,
    extrapolate,
    goal_achievement,
    impact_timeline,
    loads_kb,
    retrospective_average,
)
from iopscope.fixtures import PERIOD_SCORES_7, PERIODS_7

kb = loads_kb(resources.files("iopscope.data")
              .joinpath("nasu_kb.yaml").read_text("utf-8"))

average = retrospective_average(PERIOD_SCORES_7[:6])
forecast = extrapolate(PERIOD_SCORES_7[-1], 2)
diff, verdict = compare_and_verdict(forecast, average)
print(f"retrospective average: {average:.6f}")
print(f"extrapolated current-period score: {forecast:.7f}")
print(f"relative difference {diff * 100:.1f}% -> {verdict}")

periods = [EvaluationPeriod(s, e) for s, e in PERIODS_7]
report = build_report(kb, periods, factor=2.0,
                      score_overrides=PERIOD_SCORES_7)
print("\nexpected indicator impact windows (onset + delay .. + duration):")
for window in report.impact_timeline[:5]:
    name = kb.nodes[window.project_id].formulation
    print(f"  {window.impact_onset} .. {window.impact_end}  {name}")
print(f"  ... {len(report.impact_timeline)} windows total")

period_2015 = EvaluationPeriod(dt.date(2015, 1, 1), dt.date(2015, 12, 31))
base = goal_achievement(kb, 0, period_2015)
print(f"\n2015 main-goal achievement on the fixture weights: {base:.6f}")
for overrides, label in (
        ({13: 1.0}, "activate the silent 'companies' component"),
        ({14: 0.0}, "suppress the 'understated achievements' component"),
):
    value = goal_achievement(kb, 0, period_2015, overrides=overrides)
    print(f"  what-if {label}: {value:.6f} ({value - base:+.6f})")

"""Runnable example code to rebuild the [232, 220, 4] code from a Denniston arc in PG(2, 32)"""

from maxarc.analysis import denniston_report
from maxarc.arcs import DennistonSpec
from maxarc.gf2m import build_field

if __name__ == "__main__":
    ctx = build_field(5, 37)

    # H is spanned by {1, w, w^2}, so h = 8 and the arc has 232 points
    report = denniston_report(DennistonSpec(ctx, 3))

    print(report.to_markdown())

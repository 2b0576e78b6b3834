"""Runnable example code to rebuild the [34, 22, 6] code from the (q+1)-arc in PG(3, 32)"""

from maxarc.analysis import pg3_report
from maxarc.arcs import PG3ArcSpec
from maxarc.gf2m import build_field

if __name__ == "__main__":
    report = pg3_report(PG3ArcSpec(build_field(5, 37), 1))

    extended = report.stage("extended_dual")
    print(extended.parameters, extended.verdict)

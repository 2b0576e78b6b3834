"""Runnable example code comparing brute-force Weil sums with their closed forms"""

from maxarc.charsum import coulter_sweep
from maxarc.gf2m import build_field

if __name__ == "__main__":
    ctx = build_field(4)

    # gcd(4, 2) = 2 and m/e is even, the case with the most branches
    reports = coulter_sweep(ctx, 2)
    for report in reports:
        if not report.agrees:
            print(report.to_json())

"""How entanglement dies at lambda_+: a straight line hiding a logarithm.

Just below lambda_+ the inter-to-intra crossover is governed by eta1, and
C1 vanishes linearly with slope dC1/dlambda ~ -1.476.  The interesting
structure sits at the critical point lambda = 0 itself: the derivative
deta1/dlambda diverges logarithmically,

    deta1/dlambda -> (2/pi) ln[(e/2)^2 |lambda|]    as lambda -> 0,

which this demo verifies by fitting the numerically integrated derivative
against ln|lambda| over a window deep in the asymptotic regime.
"""

import numpy as np

from chainent import analysis

report = analysis.critical_report()
print(f"lambda_+        = {report.lambda_plus:.9f}")
print(f"lambda_-        = {report.lambda_minus:.9f}")
print(f"dC1/dlambda     = {report.slope_at_plus:.6f}   (at lambda_+^-)")

# Fit deta1/dlambda = a ln(lambda) + b over lambda in [1e-5, 1e-3].
fit = analysis.logfit(window=(1e-5, 1e-3))
a_exact = 2.0 / np.pi
b_exact = (4.0 / np.pi) * np.log(np.e / 2.0)
print("\nlogarithmic divergence of deta1/dlambda at lambda = 0")
print(f"fitted slope     = {fit.slope:.6f}   exact 2/pi          = {a_exact:.6f}")
print(f"fitted intercept = {fit.intercept:.6f}   exact (2/pi)ln(e/2)^2 = {b_exact:.6f}")
print(f"max residual     = {fit.max_residual:.2e}  asymptotic window: {fit.asymptotic}")

# The same fit over a window far from 0 is visibly not asymptotic -- the
# result object says so instead of silently returning garbage numbers.
bad = analysis.logfit(window=(0.1, 0.5))
print(f"\nfit over [0.1, 0.5]: slope = {bad.slope:.4f}, "
      f"asymptotic: {bad.asymptotic}  (far from the log regime)")

# Raw derivative values, to see the logarithm with the naked eye: every
# decade in lambda adds the same increment (2/pi) ln 10 ~ 1.47.
print(f"\n{'lambda':>10} {'deta1/dlambda':>14}")
for lam in (1e-2, 1e-3, 1e-4, 1e-5, 1e-6):
    print(f"{lam:10.0e} {analysis.deta1(lam):14.6f}")

"""
Error-channel experiments
=========================

Exact-weight errors up to the radius are always corrected.  Beyond it the
decoder either reports a typed failure or returns a codeword that really
is within the radius of the received word.
"""

from fractions import Fraction
from pathlib import Path

from tgrs import GF, TGRSCode, params_for
from tgrs.channel import TrialConfig, loglog_slope, run_trials, scaling_csv, scaling_run

specs = Path(__file__).resolve().parent.parent / "specs"
code = TGRSCode.load(specs / "f7_n7_k2.json")
radius = params_for(code).radius

for w in range(radius + 3):
    report = run_trials(TrialConfig(code, trials=500, error_weight=w, seed=1))
    print(f"w={w}: {report.successes}/500 corrected, failures {report.failures}")

# decode time against n at rate 1/2 over GF(2^9)
rows = scaling_run(Fraction(1, 2), [16, 32, 64, 128], GF(2, 9), seed=0, trials=10)
print(scaling_csv(rows))
print("log-log slope:", round(loglog_slope(rows), 2))

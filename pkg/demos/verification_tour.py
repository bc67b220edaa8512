"""Driving the full verification suite from Python.

The same machinery behind `reflect-gkm verify` is callable directly; the
report object carries every number and serializes deterministically.
"""

from reflect_gkm import run_suite

report = run_suite("z3", trials=10, seed=0, naive_control=True)
print(report.text())

# the JSON form excludes timings, so identical inputs give identical bytes
again = run_suite("z3", trials=10, seed=0, naive_control=True)
print("reports byte-identical:", report.to_json() == again.to_json())

# the control row shows why second-power divisibility is not optional for
# a reflection of order three: pairwise conditions overcount degree 1
control = report.control
print("pairwise degree-1 dimension:", control.pairwise[1])
print("membership degree-1 dimension:", control.membership[1])

"""Smoke test for the macsym extension module.

Build and install first:
    cd crates/python && maturin build --release -o dist && pip install dist/*.whl
Then run: python python/smoke.py
"""

from fractions import Fraction

import macsym
from macsym import Partition, RatQT, SymFunc

q, t = RatQT.q(), RatQT.t()


def check(name, cond):
    print(f"{'ok  ' if cond else 'FAIL'} {name}")
    if not cond:
        raise SystemExit(1)


lam = Partition([3, 1])
check("conjugate", lam.conjugate() == Partition([2, 1, 1]))
check("n statistic", Partition([2, 1]).n() == 1)
check("partition count", len(macsym.partitions(6)) == 11)

x = (1 - t) * (1 + q) / (1 - q * t)
check("field ops", (x * (1 - q * t)) / (1 + q) == 1 - t)
check("eval", (q / (1 + q + q**2)).eval_q(3) == Fraction(3, 13))
check("json round-trip", RatQT.from_json(x.to_json()) == x)

p2 = macsym.macdonald("P", [2], basis="m")
expected = SymFunc.m([2]) + SymFunc.m([1, 1]).scale(x)
check("P_(2) in monomials", p2 == expected)
check("P(q,q) is Schur", macsym.macdonald("P", [2, 1], binding="q,q") == SymFunc.s([2, 1]).to_p())

check("Green Q_(2)^(11)", macsym.green([2], [1, 1]) == 1 - t)

check("trivial spherical value", macsym.spherical_value([1, 1], "transvection") == 1)
v2 = macsym.spherical_value({"triv": [2]}, "transvection")
check("transvection value", v2 == (q - 1) / (q**4 - 1))
routes = {r: macsym.spherical_value({"triv": [2, 1]}, "transvection", route=r) for r in "abc"}
check("routes agree", routes["a"] == routes["b"] == routes["c"])
check("identity value", macsym.spherical_value({"triv": [1], "phi1": [1]}, [1, 1], "b") == 1)

c = macsym.positivity_coefficient([2], [], [1, 1])
check("positivity witness", c.eval_q(3) == Fraction(3, 13))
check("vanishing", macsym.vanishing_predicted([1, 1], [], [2])
      and macsym.positivity_coefficient([1, 1], [], [2]).is_zero())
check("haglund", macsym.haglund_check([2], [1, 1]) == ["0", "1", "1"])

scan = macsym.positivity_scan(3, qs=[3, "5/2"])
check("scan has no falsifications", scan["falsifications"] == [] and len(scan["reports"]) > 0)

print("all smoke checks passed")

"""Python smoke tests for the compiled module."""

import json
import os
import sys

import djones


def check(cond, what):
    if not cond:
        print("FAIL", what)
        sys.exit(1)
    print("ok", what)


def main():
    j2 = djones.jones("4_1", 2)
    check(json.loads(j2.to_json()) == [[-2, "1"], [-1, "-1"], [0, "1"], [1, "-1"], [2, "1"]],
          "J_2(4_1) serialization")
    check(str(djones.habiro("3_1", 1)) == "-q^2", "H_1(3_1)")

    for n_order, want in ((1, "1"), (2, "5"), (3, "13")):
        check(str(djones.dj_eval_root("4_1", 0, n_order)) == want,
              f"Kashaev value at N={n_order}")

    js = [djones.jones("5_2", n) for n in range(1, 6)]
    check(djones.habiro_from_jones(js, 4) == djones.habiro("5_2", 4), "inversion k=4")

    check(djones.verify_relation("4_1", -2, 2, 1, 4).all_pass(), "rec41 small grid")
    check(djones.verify_52_identities([4], [3]).all_pass(), "5_2 identities small")
    check(djones.classical_limit("3_1").str("L") == "2*L - L^2", "classical limit 3_1")

    got = djones.contract("4_1", 2, 1)
    want = djones.naive_sum_41(2, 1)
    check(all(a == b for ra, rb in zip(got, want) for a, b in zip(ra, rb)),
          "contract equals oracle at N=2")
    check(str(got[0][0]) == "5" and got[0][1].is_zero(), "diagonal Kashaev value")

    check(djones.conjecture2("4_1", "4_1", 3, 2).all_pass(), "conjecture2 N=3 n=2")
    check(djones.check_yang_baxter(2, 2, 3).all_pass(), "Yang-Baxter N=2")
    check(djones.invariance("4_1", "4_1_kinked", 2).all_pass(), "invariance N=2")

    data = os.environ.get("DJONES_DATA")
    if data:
        path = os.path.join(data, "diagrams", "4_1.json")
        check(djones.validate_diagram("@" + path), "shipped diagram validates")
        with open(path) as fh:
            check(djones.validate_diagram(fh.read()), "diagram from JSON text")

    try:
        djones.jones("6_1", 2)
        check(False, "unknown knot should raise")
    except ValueError:
        check(True, "unknown knot raises ValueError")

    print("smoke test passed")


if __name__ == "__main__":
    main()

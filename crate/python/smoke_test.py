"""Smoke test for the pyqcharlier extension module."""

import pyqcharlier as qc


def main():
    assert qc.poly(0) == [(0, 0, 0, 1)]

    want = [(2, 0, 1, 1), (2, 0, 2, 2), (2, 0, 3, 1),
            (3, 0, 1, -1), (3, 0, 2, -1), (3, 0, 3, 1), (3, 0, 4, 1)]
    for method in ("formula", "bruteforce", "fixedpoints"):
        assert qc.linearize(2, 2, 1, method) == want, method

    assert qc.stats("123144124") == {"ls": 13, "lb": 7, "rs": 7, "rb": 11}
    assert qc.stirling(2, 3, 2) == [(0, 2), (1, 1)]
    assert qc.orth(2, 1) == []

    # coefficients are exact Python ints however large they get
    top = qc.moments(14)[14]
    assert all(isinstance(c, int) for *_, c in top)

    report = qc.verify("all", 4)
    assert len(report) == len(qc.SUITES) == 13
    failed = [r for r in report if not r["passed"]]
    assert not failed, failed

    try:
        qc.linearize(1, 1, 1, "guess")
    except ValueError:
        pass
    else:
        raise AssertionError("bad method accepted")

    print("pyqcharlier smoke test passed")


if __name__ == "__main__":
    main()

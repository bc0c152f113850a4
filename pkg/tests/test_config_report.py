import json
from fractions import Fraction

import pytest

from krawtchouk import CheckReport, DomainError, ResourceError, get_limits, override_limits, set_limits
from krawtchouk.config import check_order


def test_defaults():
    limits = get_limits()
    assert (limits.order_cap, limits.hadamard_cap) == (64, 20)


def test_override_is_scoped():
    with override_limits(order_cap=5) as active:
        assert active.order_cap == 5
        with pytest.raises(ResourceError):
            check_order(6)
    assert get_limits().order_cap == 64


def test_set_limits_returns_previous():
    previous = set_limits(hadamard_cap=10)
    try:
        assert previous.hadamard_cap == 20
        with pytest.raises(ResourceError):
            check_order(11, hadamard=True)
    finally:
        set_limits(hadamard_cap=previous.hadamard_cap)


def test_check_order_validation():
    assert check_order(3) == 3
    for bad in (-1, 2.5, "3", True):
        with pytest.raises(DomainError):
            check_order(bad)
    with pytest.raises(DomainError):
        check_order(0, minimum=1)
    with pytest.raises(DomainError):
        set_limits(order_cap=-2)


def test_report_serialization():
    r = CheckReport.failure("x", 3, {"got": 2**70, "expected": Fraction(1, 3), "path": [1, -1]})
    obj = json.loads(r.to_json())
    assert obj["passed"] is False
    assert obj["counterexample"] == {"got": str(2**70), "expected": "1/3", "path": ["1", "-1"]}
    assert not r and CheckReport.success("x", 3)


def test_combine_keeps_first_failure():
    ok = CheckReport.success("a", 1, 4)
    bad = CheckReport.failure("b", 1, {"row": 0})
    worse = CheckReport.failure("c", 1, {"row": 9})
    merged = CheckReport.combine("all", 1, [ok, bad, worse])
    assert merged.counterexample == {"row": 0, "part": "b"}
    assert CheckReport.combine("all", 1, [ok, ok]).checked == 8

from __future__ import annotations

from ckmarkov.core.verdict import Verdict

T, F, U = Verdict.TRUE, Verdict.FALSE, Verdict.UNDECIDED


def test_of() -> None:
    assert Verdict.of(True) is T
    assert Verdict.of(False) is F


def test_conjunction() -> None:
    assert T.both(T) is T
    assert T.both(U) is U
    assert U.both(F) is F
    assert F.both(U) is F


def test_json_values() -> None:
    assert T.to_json() is True
    assert F.to_json() is False
    assert U.to_json() == "undecided"

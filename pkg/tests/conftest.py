from __future__ import annotations

import sys

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from cedist.laurent import LaurentPoly
from cedist.pauli import PauliVec, PauliWindow, from_pauli_window

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def polys(draw, lo: int = -4, hi: int = 4, allow_zero: bool = True) -> LaurentPoly:
    exps = draw(st.sets(st.integers(lo, hi), max_size=hi - lo + 1))
    p = LaurentPoly.from_exponents(exps)
    if not allow_zero and p.is_zero():
        p = LaurentPoly.monomial(draw(st.integers(lo, hi)))
    return p


@st.composite
def paulivecs(draw, n: int | None = None, lo: int = 0, hi: int = 3) -> PauliVec:
    n = draw(st.integers(1, 4)) if n is None else n
    z = tuple(draw(polys(lo, hi)) for _ in range(n))
    x = tuple(draw(polys(lo, hi)) for _ in range(n))
    v = PauliVec(z, x)
    if v.is_zero():
        v = PauliVec((LaurentPoly.monomial(lo),) + z[1:], x)
    return v


@st.composite
def generator_lists(draw, max_m: int = 3, max_n: int = 3, hi: int = 3) -> list[PauliVec]:
    n = draw(st.integers(1, max_n))
    m = draw(st.integers(1, max_m))
    return [draw(paulivecs(n, 0, hi)) for _ in range(m)]


@pytest.fixture
def u_single() -> PauliVec:
    return PauliVec.parse("1+D^3, 1+D^2 | D^2, D")


@pytest.fixture
def rate_third_gens() -> list[PauliVec]:
    return [from_pauli_window(PauliWindow.parse(w)) for w in ("XXX|XZY", "ZZZ|ZYX")]


_CRITERIA = ("1", "2", "3", "4", "5", "6", "7", "8")


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    res = mod.RESULTS
    tr = terminalreporter
    tr.section("acceptance criteria")
    for key in _CRITERIA:
        if key not in res:
            tr.write_line(f"criterion {key}: NOT RUN")
            continue
        ok, detail = res[key]
        tr.write_line(f"criterion {key}: {'PASS' if ok else 'FAIL'} ({detail})")
    props = sorted(k for k in res if k.startswith("9."))
    ok9 = len(props) == 9 and all(res[k][0] for k in props)
    for k in props:
        tr.write_line(f"  {k}: {'PASS' if res[k][0] else 'FAIL'} ({res[k][1]})")
    if not props:
        tr.write_line("criterion 9: NOT RUN")
    elif len(props) < 9 and all(res[k][0] for k in props):
        tr.write_line(f"criterion 9: INCOMPLETE ({len(props)}/9 property suites run)")
    else:
        tr.write_line(f"criterion 9: {'PASS' if ok9 else 'FAIL'} ({len(props)}/9 property suites recorded)")

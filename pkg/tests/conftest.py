from __future__ import annotations

from fractions import Fraction

from hypothesis import strategies as st

from symqe import SymmetricQuartic

# outcome of each acceptance criterion, reported at the end of the run
ACCEPTANCE: dict[str, bool] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE, key=lambda s: int(s.split(".")[0])):
        terminalreporter.write_line(f"{'PASS' if ACCEPTANCE[name] else 'FAIL'}  {name}")


def tight_quartic(n: int = 4) -> SymmetricQuartic:
    return SymmetricQuartic(n, 24, -18, -8, 9, -1)


def split_quartic(n: int = 4) -> SymmetricQuartic:
    return SymmetricQuartic(n, 24, -19, -7, 9, -1)


def family_g(n: int) -> SymmetricQuartic:
    return SymmetricQuartic(n, 2 * n, -2 * (n + 1), -n, n + 3, -1)


def family_h(n: int) -> SymmetricQuartic:
    """Nonnegative on the orthant; also nonnegative on R^n."""
    return SymmetricQuartic(n, -n * (n - 1), 4 * (n - 1), n * n - 3 * n + 3, -2 * n, 1)


def family_k(n: int) -> SymmetricQuartic:
    return SymmetricQuartic(n, 0, -2 * (n - 1), n - 2, n + 1, -1)


small_ints = st.integers(min_value=-6, max_value=6)
rationals = st.builds(
    Fraction, st.integers(min_value=-30, max_value=30), st.integers(min_value=1, max_value=7)
)
nonzero_rationals = rationals.filter(lambda x: x != 0)


@st.composite
def quartics(draw, n_min=2, n_max=7, coeff=small_ints):
    n = draw(st.integers(min_value=n_min, max_value=n_max))
    return SymmetricQuartic(n, *(draw(coeff) for _ in range(5)))


@st.composite
def quartics_with_pair(draw, coeff=rationals):
    f = draw(quartics(coeff=coeff))
    r = draw(st.integers(min_value=1, max_value=f.n - 1))
    s = draw(st.integers(min_value=1, max_value=f.n - r))
    return f, r, s

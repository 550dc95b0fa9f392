from fractions import Fraction

from hypothesis import settings, strategies as st

from coxtour.roots import RootType
from coxtour.sgraph import SignedGraph

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")

F = Fraction


def vec(*values):
    return tuple(Fraction(v) for v in values)


def digon(kind="D"):
    return SignedGraph(RootType(kind, 2), [(2, 1)], [(2, 1)])


def single_loop():
    return SignedGraph(RootType("C", 1), loops=[1])


rationals = st.builds(
    Fraction,
    st.integers(min_value=-40, max_value=40),
    st.sampled_from([1, 2, 3, 4, 5, 8, 10]),
)


@st.composite
def root_types(draw, kinds="BCD", max_n=5):
    return RootType(draw(st.sampled_from(kinds)), draw(st.integers(1, max_n)))


@st.composite
def feasible_complete(draw, kinds="BCD", max_n=6):
    """A root type and a random point with |x| weakly sub-majorized by rho."""
    from coxtour.birkhoff import SignedPermutation, vertex_tournament
    from coxtour.score import mean_score

    t = draw(root_types(kinds, max_n))
    # convex combination of a few vertex scores, shrunk by a random factor
    k = draw(st.integers(1, 3))
    weights = [draw(st.integers(1, 6)) for _ in range(k)]
    total = sum(weights)
    x = [Fraction(0)] * t.n
    for w in weights:
        perm = draw(st.permutations(range(1, t.n + 1)))
        signs = [draw(st.sampled_from((1, -1))) for _ in range(t.n)]
        phi = SignedPermutation(tuple(s * v for s, v in zip(signs, perm)))
        for i, v in enumerate(mean_score(vertex_tournament(phi, t))):
            x[i] += Fraction(w, total) * v
    shrink = Fraction(draw(st.integers(0, 8)), 8)
    return t, tuple(shrink * v for v in x)


# acceptance report: one line per criterion, printed after the run
ACCEPTANCE_LINES: list[str] = []
SUITE_BUDGET_SECONDS = 180.0


def record(criterion: int, ok: bool, detail: str) -> None:
    line = f"{'PASS' if ok else 'FAIL'}  criterion {criterion}: {detail}"
    ACCEPTANCE_LINES.append(line)


def pytest_sessionstart(session):
    import time

    session.config._coxtour_start = time.perf_counter()


def pytest_sessionfinish(session, exitstatus):
    import time

    elapsed = time.perf_counter() - session.config._coxtour_start
    # the budget is for the whole suite; only judge it when every test file ran
    full = not session.config.args or all(a.rstrip("/").endswith("tests") for a in session.config.args)
    if full and session.testscollected > 50:
        ok = elapsed < SUITE_BUDGET_SECONDS
        record(8, ok, f"full suite ran in {elapsed:.1f} s (limit {SUITE_BUDGET_SECONDS:.0f} s)")
        if not ok:
            session.exitstatus = 1


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)

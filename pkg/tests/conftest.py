import random
import sys
from pathlib import Path

from hypothesis import settings, strategies as st

from occlogic.formula import And, Base, Iff, Implies, Not, Or, Var
from occlogic.sampling import SampleConfig, random_base, random_query

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

BASES = Path(__file__).resolve().parent.parent / "bases"

names = st.sampled_from(["p", "q", "r"])


def core_formulas(max_leaves: int = 8):
    return st.recursive(
        names.map(Var),
        lambda sub: st.one_of(sub.map(Not), st.tuples(sub, sub).map(lambda t: And(*t))),
        max_leaves=max_leaves,
    )


def surface_formulas(max_leaves: int = 8):
    binary = (And, Or, Implies, Iff)
    return st.recursive(
        names.map(Var),
        lambda sub: st.one_of(
            sub.map(Not),
            st.tuples(st.sampled_from(binary), sub, sub).map(lambda t: t[0](t[1], t[2])),
        ),
        max_leaves=max_leaves,
    )


seeds = st.integers(min_value=0, max_value=2**32 - 1)


def base_from_seed(seed: int, cfg: SampleConfig = SampleConfig()) -> Base:
    return random_base(random.Random(seed), cfg)


def small_bases(cfg: SampleConfig = SampleConfig()):
    return seeds.map(lambda s: base_from_seed(s, cfg))


def base_and_query(cfg: SampleConfig = SampleConfig()):
    def build(seed):
        rng = random.Random(seed)
        b = random_base(rng, cfg)
        return b, random_query(rng, b, cfg)

    return seeds.map(build)


def pytest_terminal_summary(terminalreporter):
    """One PASS/FAIL line per acceptance criterion."""
    reports = [r for key in ("passed", "failed")
               for r in terminalreporter.stats.get(key, [])
               if r.when == "call" and "test_acceptance.py::test_criterion_" in r.nodeid]
    if not reports:
        return
    terminalreporter.section("acceptance criteria")
    for r in sorted(reports, key=lambda r: int(r.nodeid.split("test_criterion_")[1].split("_")[0])):
        num = r.nodeid.split("test_criterion_")[1].split("_")[0]
        name = r.nodeid.split("::")[-1]
        terminalreporter.write_line(f"criterion {num:>2}: {'PASS' if r.passed else 'FAIL'}  {name}")

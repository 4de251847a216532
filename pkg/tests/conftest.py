import pytest
import hypothesis.strategies as st
from hypothesis import settings as hypothesis_settings

from dualis.calculus import builtin_calculus
from dualis.config import reset_settings
from dualis.formula import And, Atom, Const, Exists, Forall, Imp, Not, Or, Pred, Var

hypothesis_settings.register_profile("dualis", deadline=None, max_examples=200)
hypothesis_settings.load_profile("dualis")


# ============================================================
# STRATEGIES
# ============================================================

atoms_st = st.sampled_from(["p", "q", "r"]).map(Atom)
variables_st = st.sampled_from(["x", "y", "z"])
terms_st = st.one_of(variables_st.map(Var), st.sampled_from(["a", "c"]).map(Const))
predicates_st = st.builds(
    Pred,
    st.sampled_from(["P", "Q"]),
    st.lists(terms_st, min_size=1, max_size=2).map(tuple),
)


def _propositional_extend(sub):
    return st.one_of(
        sub.map(Not),
        st.builds(And, sub, sub),
        st.builds(Or, sub, sub),
        st.builds(Imp, sub, sub),
    )


def _first_order_extend(sub):
    return st.one_of(
        _propositional_extend(sub),
        st.builds(Forall, variables_st, sub),
        st.builds(Exists, variables_st, sub),
    )


propositional_formulas = st.recursive(atoms_st, _propositional_extend, max_leaves=10)
formulas = st.recursive(st.one_of(atoms_st, predicates_st), _first_order_extend, max_leaves=10)


# ============================================================
# FIXTURES
# ============================================================

@pytest.fixture(autouse=True)
def clean_settings(monkeypatch):
    for name in ("DUALIS_DEPTH", "DUALIS_CONTRACTION", "DUALIS_LOG_LEVEL", "DUALIS_CORPUS_BUDGET"):
        monkeypatch.delenv(name, raising=False)
    reset_settings()
    yield
    reset_settings()


@pytest.fixture
def LK():
    return builtin_calculus("LK")


@pytest.fixture
def LJ():
    return builtin_calculus("LJ")


@pytest.fixture
def SP():
    return builtin_calculus("SP")


@pytest.fixture
def ANTI_LJ():
    return builtin_calculus("ANTI_LJ")

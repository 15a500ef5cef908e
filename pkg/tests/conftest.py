import pytest

from equistrat import analyze, load_builtin, verify_predictions
from equistrat.isotropy import build_lattice

_problems = {}
_lattices = {}
_reports = {}
_probes = {}


@pytest.fixture(scope="session")
def problem():
    def get(name):
        if name not in _problems:
            _problems[name] = load_builtin(name)
        return _problems[name]
    return get


@pytest.fixture(scope="session")
def lattice(problem):
    def get(name):
        if name not in _lattices:
            p = problem(name)
            _lattices[name] = build_lattice(p.v, p.w)
        return _lattices[name]
    return get


@pytest.fixture(scope="session")
def report(problem):
    def get(name):
        if name not in _reports:
            p = problem(name)
            _reports[name] = analyze(p.v, p.w)
        return _reports[name]
    return get


@pytest.fixture(scope="session")
def probe_result(problem):
    def get(name):
        if name not in _probes:
            p = problem(name)
            _probes[name] = verify_predictions(p.v, p.w)
        return _probes[name]
    return get

"""Exact Conley-Zehnder / contact-homology calculus for Reeb orbit data.

Dict-level wrapper around the compiled ``_core`` extension. Rationals travel
as strings "p/q" to keep everything exact across the language boundary.
"""

import json

try:
    from . import _core
except ImportError:  # development layout: extension next to the package on sys.path
    import _core

DomainError = _core.DomainError
InputError = _core.InputError

__all__ = [
    "DomainError", "InputError",
    "ellipsoid", "spectrum", "perfect_check", "geom_perfect", "resonance",
    "ratios", "counting", "ordering", "cluster", "brute_oracle",
    "verify_window", "verify_window_abstract", "bound_b", "even_count",
    "classify_s3", "census_s3", "witness_ellipsoid", "cz_index",
    "mean_index", "degree",
]


def _loads(text):
    return json.loads(text)


def ellipsoid(axes, irrational=False):
    """Model ellipsoid orbit system for semiaxes given as rational strings."""
    return _loads(_core.ellipsoid([str(a) for a in axes], irrational))


def spectrum(system, max_degree=None, max_action=None):
    if (max_degree is None) == (max_action is None):
        raise ValueError("pass exactly one of max_degree / max_action")
    return _loads(_core.spectrum(json.dumps(system), max_degree or 0, max_action or ""))


def perfect_check(system, target, max_degree):
    return _loads(_core.perfect_check(json.dumps(system), json.dumps(target), max_degree))


def geom_perfect(system, max_degree):
    return _loads(_core.geom_perfect(json.dumps(system), max_degree))


def resonance(system):
    return _loads(_core.resonance(json.dumps(system)))


def ratios(system):
    return _loads(_core.ratios(json.dumps(system)))


def counting(system, x, y, k_max):
    return _loads(_core.counting(json.dumps(system), x, y, k_max))


def ordering(system, max_degree):
    return _loads(_core.ordering(json.dumps(system), max_degree))


def cluster(deltas, epsilon, bound, parity="any"):
    return _loads(_core.cluster([str(d) for d in deltas], str(epsilon), bound, parity))


def brute_oracle(deltas, epsilon, bound, parity="any"):
    return _loads(_core.brute_oracle([str(d) for d in deltas], str(epsilon), bound, parity))


def verify_window(system, k, epsilon):
    return _loads(_core.verify_window(json.dumps(system), list(k), str(epsilon)))


def verify_window_abstract(deltas, k, epsilon):
    return _loads(_core.verify_window_abstract([str(d) for d in deltas], list(k), str(epsilon)))


def bound_b(target, n, m_min, m_max):
    return _loads(_core.bound_b(json.dumps(target), n, m_min, m_max))


def even_count(system, target, m_min, m_max):
    return _loads(_core.even_count(json.dumps(system), json.dumps(target), m_min, m_max))


def classify_s3(config, mode=None, bound=10000):
    return _loads(_core.classify_s3(json.dumps(config), mode or "", bound))


def census_s3(mode, entries, mu_max, denom_max, bound=10000):
    return _loads(_core.census_s3(mode, entries, mu_max, denom_max, bound))


def witness_ellipsoid(delta1):
    return _loads(_core.witness_ellipsoid(str(delta1)))


def cz_index(system, orbit, k):
    return _core.cz_index(json.dumps(system), orbit, k)


def mean_index(system, orbit, k=1):
    return _core.mean_index(json.dumps(system), orbit, k)


def degree(system, orbit, k):
    return _core.degree(json.dumps(system), orbit, k)

"""Run every applicable verifier on one input file."""
from __future__ import annotations

from pathlib import Path

from ..errors import ParseError
from ..graph import digraph_from_laplacian, is_hamiltonian_cycle, new_digraph
from ..io import read_digraph, read_matrix
from ..laplacian import make_standardized, standardize
from ..theory import (
    VerificationReport,
    merge_reports,
    verify_charpoly_identities,
    verify_hamiltonian_extremal,
    verify_localization,
    verify_multiplicities,
    verify_semiconvergence,
    verify_spectrum_correspondence,
)


def _floated(g):
    return new_digraph(g.n, [(i, j, float(w)) for i, j, w in g.arcs], float(g.b))


def load_input(path, exact: bool = False):
    """Return ``(digraph, laplacian)`` for a ``.tsv`` digraph or ``.csv`` matrix.

    Without ``exact`` all rational data is converted to floats first, so
    every verifier runs in float mode.
    """
    p = Path(path)
    suffix = p.suffix.lower()
    if suffix == ".tsv":
        g = read_digraph(p)
        if not exact:
            g = _floated(g)
        return g, standardize(g)
    if suffix == ".csv":
        m = read_matrix(p, exact=exact)
        lap = make_standardized(m, provenance=p.name)
        return digraph_from_laplacian(lap.exact if exact else lap.matrix), lap
    raise ParseError(f"unknown input type {suffix!r}; expected .tsv or .csv", None, None, str(p))


def run_verify_suite(path, exact: bool = False) -> VerificationReport:
    g, lap = load_input(path, exact)
    reports = [
        verify_spectrum_correspondence(lap),
        verify_semiconvergence(lap),
        verify_multiplicities(g, exact=exact),
        verify_localization(lap, digraph=g),
    ]
    if exact and lap.is_exact:
        reports.append(verify_charpoly_identities(lap))
    if g.n >= 2 and is_hamiltonian_cycle(g):
        reports.append(verify_hamiltonian_extremal(g.n))
    return merge_reports(f"suite:{Path(path).name}", reports)

"""Python bindings for the netcube library."""

import json

from ._netcube import (
    BudgetExceeded,
    Complex,
    Domain,
    Error,
    InsufficientDepth,
    Net,
    NotAdmissible,
    NotCoEnabled,
    NotEnabled,
    ParseError,
    SemanticError,
    TraceAlphabet,
    UnknownLetter,
    bdr,
    domain_from_json,
    example_names,
    example_text,
    nstar,
    parse_complex,
    parse_net,
    z,
    zprime,
)


def events(domain):
    """Event structure of a domain prefix as a dict."""
    return json.loads(domain.events_json())


def analyze(domain, **options):
    """Cluster, end-type, grid and biclique diagnostics as a dict."""
    return json.loads(domain.analyze_json(**options))


__all__ = [name for name in dir() if not name.startswith("_") and name != "json"]

"""Minimal excludant statistics of overpartitions."""

import json

from ._mexlab import (
    OracleLimitError,
    Overpartition,
    PartGroup,
    enumerate_overpartitions,
    mex_counts,
    overpartition_counts,
    overpartitions_from_multiset,
    ramanujan_sigma,
    sigma_mex,
    sigma_mex_oracle,
)

__all__ = [
    "OracleLimitError",
    "Overpartition",
    "PartGroup",
    "enumerate_overpartitions",
    "mex_counts",
    "overpartition_counts",
    "overpartitions_from_multiset",
    "ramanujan_sigma",
    "run_cli",
    "sigma_mex",
    "sigma_mex_oracle",
    "verify",
]


def verify(only=None, identity_order=2000):
    """Run the verification suite and return the reports as dicts."""
    from ._mexlab import _run_suite_json

    text = _run_suite_json(only, identity_order)
    return [json.loads(line) for line in text.splitlines()]


def run_cli(args):
    """Run the command-line tool in-process. Returns (exit_code, stdout, stderr)."""
    from ._mexlab import _run_cli

    return _run_cli([str(a) for a in args])

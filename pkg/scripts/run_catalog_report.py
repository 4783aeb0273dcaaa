#!/usr/bin/env python3
"""Re-derive every stated property of the forbidden catalog and print the results."""

from __future__ import annotations

import sys

from wordrep.catalog import closure_report, minimal_graphs
from wordrep.graphs import chromatic_number, contains_induced, wheel
from wordrep.orientations import exists_semi_transitive
from wordrep.verify import verify_catalog


def main() -> int:
    for p in minimal_graphs():
        g = p.embedded.graph
        wheels = [m for m in (5, 7, 9) if contains_induced(g, wheel(m)) is not None]
        print(
            f"{p.name}: n={g.n} edges={g.edge_count} chi={chromatic_number(g)} "
            f"semi-transitive={'yes' if exists_semi_transitive(g) else 'no'} "
            f"induced odd wheels={wheels}"
        )
    print(f"closure: {closure_report()}")
    report = verify_catalog()
    print(
        f"catalog verification: passed={report.passed} "
        f"violations={len(report.violations)} ({report.elapsed_seconds:.1f}s)"
    )
    for v in report.violations:
        print(f"    {v.triangulation}: {v.detail}")
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())

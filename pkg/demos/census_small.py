"""Census of hulls on up to six vertices, with the published-table checks."""

import tempfile
from pathlib import Path

from kernelgraphs import run_census

with tempfile.TemporaryDirectory() as tmp:
    out = Path(tmp)
    for n in range(3, 7):
        summary = run_census(n, out)
        print(f"n={n}: {summary.hulls} hulls among {summary.graphs} graphs")
        groups = ", ".join(
            f"{name}:{count}" for name, count in sorted(summary.group_distribution.items())
        )
        print(f"  automorphism groups  {groups}")
        sizes = ", ".join(
            f"{size}:{count}" for size, count in sorted(summary.size_distribution.items())
        )
        print(f"  minimal set sizes    {sizes}")
        for w in summary.warnings:
            print(f"  warning: {w}")
    print("\nartifacts written per n: hulls_n3.jsonl, summary_n3.json, ...")
    print("files present for n=6:", sorted(p.name for p in out.glob("*n6*")))

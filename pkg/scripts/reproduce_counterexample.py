"""Reproduce the 5x5 counterexample end to end and write both certificates to disk.

    python3 scripts/reproduce_counterexample.py --out certificates/
"""

from __future__ import annotations

import argparse
import io
from dataclasses import dataclass
from pathlib import Path

from potcert.certifier import WITNESS_C, certify_pate_k2, certify_pot
from potcert.cli import main as cli_main


@dataclass(frozen=True)
class ReproduceConfig:
    out: Path = Path("certificates")
    c: int = int(WITNESS_C)


def run(cfg: ReproduceConfig) -> int:
    cfg.out.mkdir(parents=True, exist_ok=True)
    report = io.StringIO()
    code = cli_main(["paper-demo", "--no-timestamp"], stdout=report)
    (cfg.out / "report.txt").write_text(report.getvalue())
    (cfg.out / "pot.cert").write_text(certify_pot(cfg.c).to_text())
    (cfg.out / "pate_k2.cert").write_text(certify_pate_k2(cfg.c).to_text())
    print(report.getvalue().splitlines()[-1])
    print(f"wrote report.txt, pot.cert, pate_k2.cert to {cfg.out}/ (exit {code})")
    return code


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=ReproduceConfig.out)
    raise SystemExit(run(ReproduceConfig(out=ap.parse_args().out)))

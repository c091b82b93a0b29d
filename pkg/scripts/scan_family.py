"""Scan the parameter c of the family H(c) and certify the C_2 verdict at each point.

Prints per(H(c)), the certified top eigenvalue of C_2(H(c)) and the verdict.
Every row is backed by exact kernel dimensions and a PSD shift.

    python3 scripts/scan_family.py --start 0 --stop 4 --step 1/4
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass
from fractions import Fraction

from potcert.arith import format_scalar
from potcert.certifier import certify_pate_k2


@dataclass(frozen=True)
class ScanConfig:
    start: Fraction = Fraction(0)
    stop: Fraction = Fraction(4)
    step: Fraction = Fraction(1, 4)

    def grid(self) -> list[Fraction]:
        if self.step <= 0:
            raise ValueError("step must be positive")
        out, c = [], self.start
        while c <= self.stop:
            out.append(c)
            c += self.step
        return out


def scan(cfg: ScanConfig) -> list[tuple[Fraction, str, str, str]]:
    rows = []
    for c in cfg.grid():
        cert = certify_pate_k2(c)
        rows.append((c, format_scalar(cert.per), format_scalar(cert.witness), cert.verdict))
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--start", type=Fraction, default=ScanConfig.start)
    ap.add_argument("--stop", type=Fraction, default=ScanConfig.stop)
    ap.add_argument("--step", type=Fraction, default=ScanConfig.step)
    args = ap.parse_args()
    cfg = ScanConfig(args.start, args.stop, args.step)
    print(f"{'c':>8} {'per':>14} {'lambda_max(C_2)':>18}  verdict")
    for c, per, lam, verdict in scan(cfg):
        print(f"{str(c):>8} {per:>14} {lam:>18}  {verdict}")


if __name__ == "__main__":
    main()

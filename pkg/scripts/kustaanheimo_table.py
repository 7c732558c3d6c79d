"""Least primes p = 3 mod 4 with 1..k all quadratic residues, plus the primes the
positive-definiteness (1..2k^3) and Cauchy-Schwarz (1..4k^6) sweeps need."""

import argparse
import time

from fieldgrid.order import SearchExhausted, find_kustaanheimo_prime


def least(k, cap):
    try:
        return find_kustaanheimo_prime(k, cap).p
    except SearchExhausted:
        return None


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--kmax", type=int, default=12)
    ap.add_argument("--cap", type=int, default=10**7)
    args = ap.parse_args()

    print(f"{'k':>3} {'p(1..k)':>10} {'p(1..2k^3)':>12} {'p(1..4k^6)':>12} {'sec':>7}")
    for k in range(1, args.kmax + 1):
        t0 = time.perf_counter()
        # the derived bounds grow fast; only the small ones are searched
        targets = [k, 2 * k**3 if k <= 3 else None, 4 * k**6 if k <= 2 else None]
        cells = []
        for t in targets:
            if t is None:
                cells.append("")
                continue
            p = least(t, args.cap)
            cells.append(str(p) if p is not None else f">{args.cap:.0e}")
        print(f"{k:>3} {cells[0]:>10} {cells[1]:>12} {cells[2]:>12} {time.perf_counter() - t0:7.2f}")


if __name__ == "__main__":
    main()

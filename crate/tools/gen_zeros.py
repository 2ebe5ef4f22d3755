#!/usr/bin/env python3
"""Write the first N positive ordinates of the nontrivial zeta zeros, one per line.

Usage: gen_zeros.py N OUT
The output is in the plain-text zeros format read by `pksums`.
"""
import sys

import mpmath


def main():
    n = int(sys.argv[1])
    out = sys.argv[2]
    mpmath.mp.dps = 25
    with open(out, "w") as f:
        f.write("# first %d ordinates of nontrivial zeta zeros (mpmath.zetazero, dps=25)\n" % n)
        for i in range(1, n + 1):
            g = mpmath.zetazero(i).imag
            f.write(mpmath.nstr(g, 16, min_fixed=-1, max_fixed=30) + "\n")
            if i % 100 == 0:
                f.flush()


if __name__ == "__main__":
    main()

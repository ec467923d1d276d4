"""Smallest odd genus over a few small closed triangulations.

    python scripts/odd_genus_demo.py

For each census entry with a one-sided surface of odd genus, prints the
fundamental surface found and checks it with the certificate verifier.
"""
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

from census import CENSUS  # noqa: E402

from surfembed.enumeration import min_odd_genus  # noqa: E402
from surfembed.homology import homology  # noqa: E402
from surfembed.triangulation import parse_triangulation  # noqa: E402
from surfembed.verifier import Certificate, verify_certificate  # noqa: E402


def main():
    print(f"{'name':<16} {'H1':<12} {'genus':>5}  verdict")
    for name in sorted(CENSUS):
        tri = parse_triangulation(CENSUS[name][0])
        res = min_odd_genus(tri)
        if res is None:
            print(f"{name:<16} {str(homology(tri, 1)):<12} {'-':>5}")
            continue
        v = verify_certificate(tri, Certificate(res.coordinates, res.genus), res.genus)
        print(f"{name:<16} {str(homology(tri, 1)):<12} {res.genus:>5}  {v.reason.value}")


if __name__ == "__main__":
    main()

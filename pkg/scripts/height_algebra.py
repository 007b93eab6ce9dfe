"""Report whether nonzero partitions are algebras of the bee operad in the height preorder.

The verdict is printed, not asserted: the action maps C(j) *1 (A *2 ... *2 A) -> A
need max(h(B(j)), j h(A)) <= h(A), which fails once j >= 2 and h(A) >= 1.
"""
import argparse

from nfold import catalog
from nfold.operads import verify_algebra


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--arity", type=int, default=6)
    ap.add_argument("objects", nargs="*", default=["[1]", "[2,1]", "[3,3]"])
    args = ap.parse_args()
    B = catalog.bee_heights(args.arity)
    for text in args.objects:
        rep = verify_algebra(B, B.structure.parse_obj(text), 1, 2, args.arity)
        first = rep.failures[0] if rep.failures else None
        where = f"; first failure {first[0]} at {first[1]}" if first else ""
        print(f"A = {text}: {rep.verdict}{where}")


if __name__ == "__main__":
    main()

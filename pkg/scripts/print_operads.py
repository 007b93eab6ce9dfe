"""Print the catalog operads and generated examples with their verdicts."""
import argparse

from nfold import catalog
from nfold.diagrams import render_ascii, validate
from nfold.operads import generate_minimal_diagram, generate_minimal_nat, tensor_operads, verify_operad


def show(title, C, pairs, N, draw=False):
    s = C.structure
    print(f"== {title} ({s.name})")
    for j in range(1, N + 1):
        print(f"  C({j}) = {s.format_obj(C[j])}")
        if draw and j <= 6 and C[j].dim == 1 and not C[j].is_empty():
            print("    " + render_ascii(C[j]).replace("\n", "\n    "))
    for p, q in pairs:
        rep = verify_operad(C, p, q, N)
        extra = f", first witness {rep.witnesses[0].label()}" if rep.witnesses else ""
        print(f"  ({p},{q}): {rep.verdict}{extra}")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--arity", type=int, default=8)
    args = ap.parse_args()
    N = args.arity

    show("bee", catalog.bee(N), [(1, 2), (2, 3)], N)
    show("predecessor", catalog.predecessor(N), [(1, 2), (1, 3), (2, 3)], N)
    show("squares", catalog.squares(N), [(2, 3)], N, draw=True)
    show("bee tensor predecessor", tensor_operads(catalog.bee(N), catalog.predecessor(N), 1), [(1, 2)], N)
    show("single box", generate_minimal_diagram(validate([1]), N=N), [(2, 3)], N, draw=True)
    for starts in ((0, 1), (0, 0, 1), (0, 2), (0, 0, 2), (0, 1, 2, 4, 8)):
        print(f"== N minimal operad from {starts}: {generate_minimal_nat(starts, 15)}")


if __name__ == "__main__":
    main()

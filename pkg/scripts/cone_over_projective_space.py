#!/usr/bin/env python3
"""Compute groups and the three pairing cases for cones over P^n.

Usage: python3 scripts/cone_over_projective_space.py [n]

Everything reduces to the polynomial ring Z[h]/h^(n+1); this prints the
group table by vertex bound and the products of the cone divisor, a
vertex-avoiding hyperplane section, and a vertex-avoiding linear subvariety.
"""

import sys

import pervchow as pc


def main(n: int) -> None:
    cone = pc.ConeVariety(pc.projective_space(n))
    d = cone.cone_dim
    print(f"cone over P^{n}: dimension {d}\n")

    print("class groups by dimension r and vertex bound p:")
    for r in range(d + 1):
        cells = []
        for p in range(d):
            group = pc.chow_group(cone, r, p)
            cells.append(f"p={p}: {pc.describe(group)} ({cone.mode(r, p).value[:4]})")
        print(f"  r={r}:  " + "   ".join(cells))

    cone_divisor = cone.cls(d - 1, 1, [1])          # cone over a hyperplane of P^n
    section = cone.cls(d - 1, 0, [1])               # hyperplane section missing the vertex
    line = cone.cls(1, 0, [1])                      # vertex-avoiding line

    print("\ncase 1 (both through the vertex):")
    out = pc.intersect(cone_divisor, cone_divisor)
    print(f"  C(hyperplane)^2 -> dimension {out.r}, payload {list(out.payload.coeffs)}")

    print("case 2 (one through the vertex):")
    print(f"  C(hyperplane) . line -> degree {pc.degree_pairing(cone_divisor, line)}")

    print("case 3 (both avoiding the vertex):")
    out = pc.intersect(section, section)
    print(
        f"  section^2 -> dimension {out.r}, payload {list(out.payload.coeffs)} "
        f"(sliced by the hyperplane class)"
    )
    print(f"  section . line -> degree {pc.degree_pairing(section, line)}")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 2)

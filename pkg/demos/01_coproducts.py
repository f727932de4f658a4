"""Coproducts of q-Serre polynomials in G<X>, computed generically and
compared with the closed formulas."""

from charhopf import ParamTable, SkewGroupAlgebra, closed_coproduct, coproduct, render

spacer = "_" * 60

A = SkewGroupAlgebra(ParamTable.free(2))
x1, x2 = A.x(1), A.x(2)

print("Generators are skew-primitive")
print("Delta(x1) =", render(coproduct(x1)))
print("Delta(g1) =", render(coproduct(A.g(1))))

print(spacer)

print("\nWords pass group elements at the cost of a character value")
print("x2 g2   =", x2 * A.g(2))
print("x1x2 g2 =", x1 * x2 * A.g(2))

print(spacer)

print("\nThe left-normed bracket [x1 x2^2]")
u = A.serre_left(1, 2, 2)
print("[x1 x2^2] =", u)
print("Delta     =", render(coproduct(u)))

print(spacer)

print("\nClosed formulas agree with the generic coproduct")
for kind, build in [("serre_left", lambda n: A.serre_left(1, 2, n)),
                    ("braced_left", lambda n: A.braced_left(1, 2, n)),
                    ("serre_right", lambda n: A.serre_right(2, n, 1)),
                    ("braced_right", lambda n: A.braced_right(2, n, 1))]:
    ok = all(coproduct(build(n)) == closed_coproduct(A, kind, n) for n in range(5))
    print(f"  {kind:13s} n = 0..4: {ok}")

print(spacer)

print("\nThe same for {x1 x2^2}, in LaTeX")
print(render(coproduct(A.braced_left(1, 2, 2)), "latex"))

"""Under the G2 specialization p11 = q^3, p22 = q, p12 p21 = q^-3 the
Serre polynomials [x1 x2^4] and [x1^2 x2] vanish in the shuffle algebra, and
the top PBW generator {x1 x2^3 x1} has a coefficient-free coproduct."""

from charhopf import g2, render

spacer = "_" * 60

A, S = g2.g2_algebras()
q = A.params.q

print("Serre polynomials lie in the kernel of Omega")
print("Omega([x1 x2^4]) =", S.omega(A.serre_left(1, 2, 4)))
print("Omega([x1^2 x2]) =", S.omega(A.serre_right(1, 2, 2)))

print(spacer)

u = g2.g2_top_element(A)
print("\nOmega({x1 x2^3 x1}) is a single comonomial:")
print(" ", S.omega(u))

print(spacer)

print("\nThe coproduct, reassembled from the shuffle side:")
print(render(g2.g2_top_closed_coproduct(A)))

print(spacer)

print("\nVerification reports")
for check in (g2.verify_serre_kernel, g2.verify_lemma_leq,
              g2.verify_basis_change, g2.verify_theorem_c5):
    print(" ", render(check()))

print("\nWith the first coefficient's sign flipped the decomposition breaks:")
print(" ", render(g2.verify_lemma_leq(printed=True)))

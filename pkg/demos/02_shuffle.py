"""The shuffle representation: comonomials, the braided shuffle product and
the homomorphism Omega."""

from charhopf import ParamTable, ShuffleAlgebra, SkewGroupAlgebra, braided_from_ordinary, render

spacer = "_" * 60

params = ParamTable.free(2)
A = SkewGroupAlgebra(params)
S = ShuffleAlgebra(params)

print("Shuffle products pick up p(b, a)^-1 whenever b overtakes a")
print("(x1)(x2)   =", S.comonomial((1,)) * S.comonomial((2,)))
print("(x2)(x1x2) =", S.comonomial((2,)) * S.comonomial((1, 2)))

print(spacer)

print("\nOmega sends each word to the product of its letters")
for n in range(1, 4):
    print(f"Omega(x2^{n}) =", S.omega(A.x(2) ** n))

print(spacer)

print("\nQ-Serre polynomials collapse to a single comonomial")
for n in range(3):
    print(f"Omega({{x1 x2^{n}}}) =", S.omega(A.braced_left(1, 2, n)))

print(spacer)

print("\nOmega intertwines the braided coproduct with deconcatenation")
u = A.serre_left(1, 2, 2)
print("Delta^b([x1 x2^2]) =", render(braided_from_ordinary(u)))
print("compatible:", S.braided_compat_check(u))

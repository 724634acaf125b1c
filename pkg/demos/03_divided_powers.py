"""
Divided powers and the composition product
==========================================

Gamma^n of a free module has a basis of size-n multisets; the n-th divided
power of a vector has monomial coefficients on it.  For a matrix module the
orbit-sum embedding into the tensor power turns composition of matrices
into a product of divided elements.
"""
from functorlab import (
    GammaModule,
    Matrix,
    gamma_dimension,
    gamma_of_hom,
    schur_product,
    tensor_embedding,
    tensor_readoff,
)

gm = GammaModule(2, 2)
print("dim Gamma^2(Z^2):", gm.dimension(), "==", gamma_dimension(2, 2))
print("divided square of (a,b):", gm.divided_power((3, 5)).to_json())

# induced matrix on multiset bases; integral by construction
alpha = Matrix([[1, 2], [3, 4]])
print("Gamma^2 of [[1,2],[3,4]]:")
for row in gamma_of_hom(alpha, 2).rows:
    print("  ", row)

# functorial: matrices compose before or after, same answer
beta = Matrix([[2, 0], [1, 1]])
print(
    "functoriality:",
    gamma_of_hom(alpha @ beta, 2) == gamma_of_hom(alpha, 2) @ gamma_of_hom(beta, 2),
)

# the composition (Schur) product on Gamma^n(End): divided powers of
# matrices multiply like the matrices themselves
end = GammaModule(4, 2)


def flat(m):
    return tuple(v for row in m.rows for v in row)


a = Matrix([[1, 1], [0, 1]])
b = Matrix([[2, 0], [1, 1]])
lhs = schur_product(end.divided_power(flat(a)), end.divided_power(flat(b)))
print("a^[2] * b^[2] == (ab)^[2]:", lhs == end.divided_power(flat(a @ b)))

# under the hood: embed as symmetric endomorphisms of the tensor square,
# compose there, read back off
u = end.divided_power(flat(a))
print("round trip through the embedding:", tensor_readoff(end, tensor_embedding(u)) == u)

#pragma once

#include <utility>
#include <vector>

#include "gml/poly.hpp"

namespace gml {

// gcd over Q[vars]: unit-normal (integer-primitive, positive lead);
// gcd of anything with a nonzero constant is 1, gcd(0,0) errors.
Poly poly_gcd(const Poly& a, const Poly& b);

// integer content (nonnegative) of an integer-coefficient polynomial
Int integer_content(const Poly& p);

// content of p with respect to var: gcd of the coefficient polynomials
Poly content_in(const Poly& p, size_t var);
// p / content_in(p, var)
Poly primitive_part_in(const Poly& p, size_t var);

// pseudo-remainder of a by b in var: lc_b^(da-db+1) * a = q*b + r
Poly pseudo_rem(const Poly& a, const Poly& b, size_t var);

// Sylvester resultant with respect to var, computed by the
// subresultant PRS. Errors if both inputs are constant in var.
Poly poly_resultant(const Poly& a, const Poly& b, size_t var);

// same resultant as an explicit Sylvester determinant (fraction-free
// Bareiss elimination); the test-side cross-check oracle
Poly sylvester_resultant(const Poly& a, const Poly& b, size_t var);

// fraction-free determinant of a square polynomial matrix
Poly bareiss_determinant(std::vector<std::vector<Poly>> m, const Ring& ring);

// squarefree decomposition: p = constant * prod parts[i]^mult[i],
// parts pairwise coprime, squarefree, unit-normal
struct SquarefreePart {
    Poly part;
    int multiplicity;
};
struct SquarefreeDecomposition {
    Rat constant;
    std::vector<SquarefreePart> parts;
};
SquarefreeDecomposition squarefree_decompose(const Poly& p);

} // namespace gml

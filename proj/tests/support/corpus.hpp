#pragma once

#include <random>

#include "qbx/presentation.hpp"

// Shared fixture presentations.  All indices are 0-based; lists follow the
// normalized convention lhs = coeff * rhs with the lhs the degree-lex
// greater side under the ambient listing.
namespace corpus {

using qbx::BinomialRelation;
using qbx::Presentation;
using qbx::Scalar;
using qbx::Word;

// commuting generators: x_j x_i = x_i x_j for j > i
Presentation flip(int n);

// three generators, two of the relations sharing the side x1x3
Presentation a1();

// one-parameter family on four generators; (a, b, c, d, e, f) are the
// coefficients of x4x3, x4x2, x4x1, x3x2, x3x1, x2x1
Presentation a2(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d,
                const Scalar& e, const Scalar& f);
Presentation a2_ones();
// nontrivial instance satisfying a^2 = f^2 = be/cd = cd/be and a^4 = f^4 = 1
Presentation a2_general();
// instance breaking the linear braid relation
Presentation a2_bad();

// four generators, exchange map not nondegenerate
Presentation example_c();

// four generators, all coefficients one, exchange map involutive and
// nondegenerate with a non-multilinear socle representative
Presentation set_theoretic();

// Random presentation with a well-defined involutive exchange map: a
// perfect matching on the off-diagonal words built from a random involution
// with random nonzero rational coefficients.  nondegenerate_only filters
// until axiom d holds.
Presentation random_presentation(int n, std::mt19937& rng, bool nondegenerate_only);

} // namespace corpus

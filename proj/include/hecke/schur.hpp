#pragma once

#include "hecke/combinatorics.hpp"
#include "hecke/scalars.hpp"

namespace hecke {

// Principal specializations of Schur polynomials at x_i = q^(i-1), i = 1..r.
// Every function expects q^k != 1 for 1 <= k < r (q > 0, q != 1 suffices).

/// s_alpha(1, q, ..., q^(r-1)); zero when l(alpha) > r.
Scalar schur_principal(const Partition& alpha, int r, const Scalar& q);

/// s_alpha(1, ..., q^(r-1)) / s_[1](1, ..., q^(r-1))^|alpha|.
Scalar schur_normalized(const Partition& alpha, int r, const Scalar& q);

/// Closed form of schur_normalized([m^r1], r1 + r2, q).
Scalar rectangle_schur(int m, int r1, int r2, const Scalar& q);

/// schur_normalized(embed_double(shape, m, r1), r1 + r2, q) rewritten as a
/// product of the two component Schur values and an r1 x r2 cross product.
Scalar schur_embedded_factorized(const DoublePartition& shape, int m, int r1, int r2, const Scalar& q);

}  // namespace hecke

#pragma once

#include "hecke/combinatorics.hpp"
#include "hecke/report.hpp"
#include "hecke/scalars.hpp"

#include <cstdint>
#include <optional>

namespace hecke {

// Checks of the map from the specialized algebra H_n(q, -q^(r1+m)) onto the
// reduced type-A algebra, carried out on the skew modules V_{mu/[m^r1]}.

/// For n = 1: the t-eigenvalues on both one-box skew modules, and the
/// full-twist ratio -alpha_beta / alpha_gamma against -q^(r1+m), with
/// beta = [m+1, m^(r1-1)] and gamma = [m^r1, 1]. `gamma_override` replaces
/// gamma in the ratio (used to confirm a wrong shape is flagged).
Report rho_eigenvalue_report(int m, int r1, const Scalar& q, const std::optional<Partition>& gamma_override = {});

/// For every (alpha, beta) of size n, skew and type-B characters at
/// Q = -q^(r1+m) agree on `samples` random words (plus the identity), and
/// distinct shapes are separated by some sampled word.
Report character_match_report(int n, int m, int r1, const Scalar& q, std::size_t samples, std::uint64_t seed = 1);

/// s_{mu,r}(q) / s_{[m^r1],r}(q) equals W_(alpha,beta)(q, -q^(r1+m)) for every
/// (alpha, beta) of size n, mu = embed_double((alpha, beta), m, r1), r = r1 + r2.
Report weight_ratio_report(int n, int m, int r1, int r2, const Scalar& q);

/// Skew dimension against C(n, |alpha|) f^alpha f^beta and the t-diagonal
/// against the full-twist ratios, for every shape of size n.
Report skew_structure_report(int n, int m, int r1, const Scalar& q);

}  // namespace hecke

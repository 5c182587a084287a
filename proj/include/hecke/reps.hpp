#pragma once

#include "hecke/combinatorics.hpp"
#include "hecke/scalars.hpp"
#include "hecke/words.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace hecke {

/// Skew module V_{mu/lambda} with lambda = [m^r1] and mu = embed_double(shape, m, r1).
struct SkewLabel {
    DoublePartition shape;
    int m = 0;
    int r1 = 0;
};

using RepLabel = std::variant<Partition, DoublePartition, SkewLabel>;

std::string describe(const RepLabel& label);

/// Seminormal matrix representation: one matrix per generator, acting on
/// column vectors indexed by the canonical tableau basis.
///
/// For a tableau T and generator g_i with x = axial ratio of T at i:
///   g_i v_T = a(x) v_T                      if s_i T is not standard,
///   g_i v_T = a(x) v_T + b v_{s_i T}        otherwise,
/// where a(x) = x(1-q)/(1-x), b = 1 when s_i T follows T in canonical order
/// and b = P(x) = (q-x)(1-qx)/(1-x)^2 when it precedes it.
class Representation {
public:
    Representation(RepLabel label, std::vector<DoubleTableau> basis, std::optional<Matrix> t_matrix,
                   std::vector<Matrix> g_matrices, ParameterPoint point);

    const RepLabel& label() const noexcept { return label_; }
    std::size_t dimension() const noexcept { return basis_.size(); }
    /// Number of strands n: the representation is of H_n.
    int strands() const noexcept { return strands_; }
    const std::vector<DoubleTableau>& basis() const noexcept { return basis_; }
    const std::optional<Matrix>& t_matrix() const noexcept { return t_; }
    const std::vector<Matrix>& g_matrices() const noexcept { return g_; }
    const Matrix& g(int i) const { return g_.at(static_cast<std::size_t>(i - 1)); }
    const ParameterPoint& point() const noexcept { return point_; }

    /// Matrix of a single letter; throws if the letter does not act here.
    Matrix letter_matrix(const Letter& l) const;

private:
    RepLabel label_;
    std::vector<DoubleTableau> basis_;
    std::optional<Matrix> t_;
    std::vector<Matrix> g_;
    std::vector<Matrix> g_inv_;
    std::vector<Matrix> t_prime_;
    ParameterPoint point_;
    int strands_ = 0;
};

Representation typeA_rep(const Partition& mu, const ParameterPoint& point);
Representation typeB_rep(const DoublePartition& shape, const ParameterPoint& point);

/// Realization of H_n(q, -q^(r1+m)) on V_{mu/lambda}: axial ratios come from
/// contents inside mu, and t acts on v_T by -alpha_nu / alpha_gamma where nu
/// is lambda plus the box of entry 1 and gamma = [m^r1, 1].
Representation skew_rep(const DoublePartition& shape, int m, int r1, const Scalar& q);

/// Scalar by which the full twist (g_{f-1} ... g_1)^f acts on V_nu, f = |nu|.
Scalar full_twist_scalar(const Partition& nu, const Scalar& q);

Matrix evaluate(const Representation& rep, const HeckeWord& word);
Matrix evaluate(const Representation& rep, const HeckeElement& element);
Scalar character(const Representation& rep, const HeckeElement& element);

struct RelationResidual {
    std::string relation;
    Matrix residual;
};

/// left - right for every defining relation that applies to the representation.
std::vector<RelationResidual> relation_residuals(const Representation& rep);

/// Same check on explicit matrices; t may be absent (type A).
std::vector<RelationResidual> relation_residuals(const std::optional<Matrix>& t, const std::vector<Matrix>& g,
                                                 const Scalar& q, const std::optional<Scalar>& Q);

}  // namespace hecke

#pragma once

#include "hecke/report.hpp"
#include "hecke/scalars.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hecke {

// Exact checks of the algebraic identities the library relies on. Every
// function returns a Report with one Check per (property, size, point).
// `n` arguments are inclusive upper bounds unless stated otherwise.

// Representations
// Type A starts at n = 2; H_1 has no relations to check.
Report check_typeA_relations(int max_n, const std::vector<ParameterPoint>& points);
Report check_typeB_relations(int max_n, const std::vector<ParameterPoint>& points);
Report check_skew_relations(int max_n, const std::vector<Scalar>& qs);
Report check_jucys_murphy(int max_n, const std::vector<ParameterPoint>& points);
Report check_restriction(int max_n, const std::vector<ParameterPoint>& points, std::size_t samples, std::uint64_t seed);
Report check_full_twist(int max_f, const std::vector<Scalar>& qs);
Report check_dimensions(int max_n_square_sum, int max_n_skew);
/// Products r_1...r_n of coset representatives, evaluated in the sum of all
/// irreducibles, span a space of dimension 2^n n!.
Report check_coset_basis(int max_n, const ParameterPoint& point);
/// skew_rep and typeB_rep at Q = -q^(r1+m) have identical matrices, m = r1 = n+1.
Report check_skew_matrices(int max_n, const std::vector<Scalar>& qs);

// Type-B Markov trace
Report check_markov_property(int max_n, const std::vector<ParameterPoint>& points, std::size_t samples,
                             std::uint64_t seed);
Report check_tprime_property(int max_n, const std::vector<ParameterPoint>& points, std::size_t samples,
                             std::uint64_t seed);
Report check_tprime_products(int max_k, const std::vector<ParameterPoint>& points);
Report check_double_cosets(int max_n, const std::vector<ParameterPoint>& points);
Report check_trace_property(int max_n, const std::vector<ParameterPoint>& points, std::size_t samples,
                            std::uint64_t seed);
/// tr(t) by closed form, by the two one-box weights, and by the character sum,
/// for all (r1, r2) in [1, max_r]^2 at `points` fresh points per pair.
Report check_trace_of_t(int max_r, std::size_t points, std::uint64_t seed);

// Weights
Report check_branching(int max_n, int r1, int r2, const std::vector<ParameterPoint>& points);
Report check_weight_forms(int max_n, int r1, int r2, const std::vector<ParameterPoint>& points);
Report check_normalization(int max_n, int r1, int r2, const std::vector<ParameterPoint>& points);

// Schur functions and type A
Report check_rectangle_schur(int max_side, const std::vector<Scalar>& qs);
Report check_factorization(int max_n, const std::vector<Scalar>& qs);
Report check_typeA_normalization(int max_n, const std::vector<int>& rs, const std::vector<Scalar>& qs);
Report check_pieri(int max_n, const std::vector<int>& rs, const std::vector<Scalar>& qs);
Report check_typeA_markov(int max_n, int r, const std::vector<Scalar>& qs, std::size_t samples, std::uint64_t seed);

// Type D
Report check_typeD_inclusion(int max_n, int r1, int r2, const std::vector<Scalar>& qs);
Report check_typeD_markov(int max_n, int r1, int r2, const std::vector<Scalar>& qs, std::size_t samples,
                          std::uint64_t seed);
Report check_typeD_relations(int max_n, int r1, int r2, const std::vector<Scalar>& qs, std::size_t samples,
                             std::uint64_t seed);
/// Restrictions of type-B modules to the type-D generators at Q = 1: the
/// commutant has dimension 1 when alpha != beta and 2 when alpha = beta, and
/// (alpha, beta), (beta, alpha) have equal characters on type-D words.
Report check_typeD_modules(int max_n, const std::vector<Scalar>& qs, std::size_t samples, std::uint64_t seed);

struct SuiteOptions {
    int n = 3;
    std::uint64_t seed = 1;
    std::size_t points = 3;
    std::size_t samples = 20;
};

const std::vector<std::string>& suite_names();

/// Runs one named suite ("relations", "markov", "branching", "schur", "hom",
/// "typeD" or "all"). Throws Error on an unknown name or bad options.
Report run_suite(const std::string& name, const SuiteOptions& options);

}  // namespace hecke

#pragma once

#include "hecke/combinatorics.hpp"
#include "hecke/reps.hpp"
#include "hecke/scalars.hpp"
#include "hecke/words.hpp"

#include <string>
#include <vector>

namespace hecke {

/// Weight W_(alpha,beta)(q, Q) of the two-parameter Markov trace in its
/// product form. Zero when l(alpha) > r1 or l(beta) > r2.
Scalar weight_B(const DoublePartition& shape, int r1, int r2, const ParameterPoint& point);

/// The same weight assembled from principal Schur specializations.
Scalar weight_B_schur_form(const DoublePartition& shape, int r1, int r2, const ParameterPoint& point);

struct MarkovParams {
    Scalar z;  ///< tr(h g_n) = z tr(h)
    Scalar y;  ///< tr(h t'_n) = y tr(h)
};

/// z = q^r (1-q)/(1-q^r), y = (Q q^r2 + 1)(1-q^r1)/(1-q^r) - 1 with r = r1 + r2.
MarkovParams markov_params(int r1, int r2, const ParameterPoint& point);

struct WeightEntry {
    DoublePartition shape;
    Scalar weight;
    std::size_t dimension = 0;
};

struct WeightTable {
    int n = 0;
    int r1 = 0;
    int r2 = 0;
    ParameterPoint point;
    std::vector<WeightEntry> entries;  ///< canonical double-partition order
    Scalar z;
    Scalar y;

    /// sum of weight * dimension; equals 1 for a valid table.
    Scalar normalization() const;
};

WeightTable weight_table(int n, int r1, int r2, const ParameterPoint& point);

/// Markov trace on H_n(q,Q) as the weighted character sum over all
/// (alpha, beta) of size n. Representations are built once per instance.
class MarkovTraceB {
public:
    MarkovTraceB(int n, int r1, int r2, const ParameterPoint& point);

    Scalar operator()(const HeckeElement& element) const;
    const WeightTable& table() const noexcept { return table_; }
    const std::vector<Representation>& representations() const noexcept { return reps_; }

private:
    WeightTable table_;
    std::vector<Representation> reps_;
    std::vector<Scalar> weights_;
};

Scalar markov_trace_B(const HeckeElement& element, int n, int r1, int r2, const ParameterPoint& point);

/// Type-A Markov trace: weights s_{mu,r}(q) over mu |- n with l(mu) <= r.
class TypeAMarkovTrace {
public:
    TypeAMarkovTrace(int n, int r, const Scalar& q);

    Scalar operator()(const HeckeElement& element) const;
    /// z = q^r (1-q)/(1-q^r)
    Scalar z() const;

private:
    int r_;
    Scalar q_;
    std::vector<Representation> reps_;
    std::vector<Scalar> weights_;
};

Scalar typeA_markov_trace(const HeckeElement& element, int n, int r, const Scalar& q);

/// One simple component of the type-D algebra, labelled by the type-B shape
/// it comes from. `split` is 0 for a merged class {(a,b), (b,a)} with a != b,
/// and 1 or 2 for the two halves of V_(a,a).
struct TypeDWeight {
    std::string label;
    DoublePartition shape;
    int split = 0;
    Scalar weight;
    std::size_t dimension = 0;
};

/// The point (q, Q = 1) at which H_n^D(q) sits inside H_n(q, Q).
ParameterPoint typeD_point(const Scalar& q, int guard_bound);

/// Weights of the type-D simple components attached to `shape`: one merged
/// weight W_(a,b)(q,1) + W_(b,a)(q,1) when a != b, two equal weights
/// W_(a,a)(q,1) when a == b.
std::vector<TypeDWeight> weight_D(const DoublePartition& shape, int r1, int r2, const Scalar& q);

/// All type-D components for size n, one row per class, in canonical order of
/// the first type-B shape of each class.
std::vector<TypeDWeight> typeD_weight_table(int n, int r1, int r2, const Scalar& q);

/// Multiplicity of each type-D component (rows, typeD_weight_table order) in
/// each type-B module restricted to H_n^D (columns, double_partitions order).
std::vector<std::vector<int>> typeD_inclusion_matrix(int n);

/// Markov trace on H_n^D(q): the type-B trace at Q = 1 restricted to words
/// in u, g_i and g_i^-1. Other letters are rejected.
class MarkovTraceD {
public:
    MarkovTraceD(int n, int r1, int r2, const Scalar& q);
    Scalar operator()(const HeckeElement& element) const;
    const MarkovTraceB& typeB() const noexcept { return inner_; }

private:
    MarkovTraceB inner_;
};

Scalar markov_trace_D(const HeckeElement& element, int n, int r1, int r2, const Scalar& q);

/// Throws unless every letter is u, g_i or g_i^-1.
void require_typeD_alphabet(const HeckeElement& element);

}  // namespace hecke

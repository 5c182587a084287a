#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hecke {

/// Exact rational scalar. GMP keeps every value canonical (lowest terms,
/// positive denominator) after each arithmetic operation.
using Scalar = mpq_class;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a (q, Q) pair hits a singular locus.
class InadmissiblePoint : public Error {
public:
    using Error::Error;
};

Scalar parse_rational(std::string_view text);
std::string to_string(const Scalar& x);

/// q^k for any integer k; q must be nonzero when k < 0.
Scalar power(const Scalar& q, int k);

/// A specialization (q, Q) of the two Hecke parameters.
///
/// Construction checks q > 0, q != 1, Q != 0 and Q != -q^s for every
/// |s| <= guard_bound. Instances are immutable.
class ParameterPoint {
public:
    static ParameterPoint make(Scalar q, Scalar Q, int guard_bound);

    const Scalar& q() const noexcept { return q_; }
    const Scalar& Q() const noexcept { return Q_; }
    int guard_bound() const noexcept { return guard_bound_; }

    /// True when Q + q^s != 0 for all s in [lo, hi].
    bool avoids(int lo, int hi) const;

    /// Throws InadmissiblePoint naming the first s in [lo, hi] with Q = -q^s.
    void require_avoids(int lo, int hi) const;

    bool operator==(const ParameterPoint& other) const {
        return q_ == other.q_ && Q_ == other.Q_;
    }

private:
    ParameterPoint(Scalar q, Scalar Q, int guard) : q_(std::move(q)), Q_(std::move(Q)), guard_bound_(guard) {}

    Scalar q_;
    Scalar Q_;
    int guard_bound_;
};

/// Returns the s in [lo, hi] with Q == -q^s, if any.
std::optional<int> excluded_exponent(const Scalar& q, const Scalar& Q, int lo, int hi);

Scalar qpow(const ParameterPoint& point, int k);

/// Deterministic pseudo-random admissible point for H_n(q,Q) with the given
/// row bounds. guard_bound = max(n, r1 + r2, 2n + 2).
ParameterPoint admissible_point(std::size_t n, std::size_t r1, std::size_t r2, std::uint64_t seed);

/// `count` pairwise distinct admissible points derived from `seed`.
std::vector<ParameterPoint> admissible_points(std::size_t n, std::size_t r1, std::size_t r2,
                                              std::uint64_t seed, std::size_t count);

/// The point (q, -q^(r1 + m)), admissible for n < r1 + m.
ParameterPoint specialized_point(const Scalar& q, std::size_t m, std::size_t r1);

/// Small-height q values in (1/4, 4) \ {1}, used when only q matters.
std::vector<Scalar> sample_q_values(std::uint64_t seed, std::size_t count);

/// Dense row-major matrix over Scalar.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix scalar(std::size_t n, const Scalar& value);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix& operator+=(const Matrix& other);
    Matrix& operator-=(const Matrix& other);
    Matrix& operator*=(const Scalar& s);

    Scalar trace() const;
    bool is_zero() const;
    bool is_diagonal() const;

    /// Number of linearly independent rows (exact Gaussian elimination).
    std::size_t rank() const;

    bool operator==(const Matrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const Scalar& s, Matrix a);

}  // namespace hecke

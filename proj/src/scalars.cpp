#include "hecke/scalars.hpp"

#include <algorithm>
#include <cctype>
#include <random>

namespace hecke {

Scalar parse_rational(std::string_view text) {
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return c == ' '; }), s.end());
    if (s.empty()) throw Error("empty rational literal");
    auto valid_int = [](std::string_view part) {
        std::size_t start = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
        if (start == part.size()) return false;
        return std::all_of(part.begin() + start, part.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
        throw Error("malformed rational '" + std::string(text) + "'");
    if (num[0] == '+') num.erase(0, 1);
    mpz_class n(num), d(den);
    if (d == 0) throw Error("zero denominator in '" + std::string(text) + "'");
    Scalar out(n, d);
    out.canonicalize();
    return out;
}

std::string to_string(const Scalar& x) {
    Scalar c = x;
    c.canonicalize();
    return c.get_str();
}

Scalar power(const Scalar& q, int k) {
    if (k < 0) {
        if (q == 0) throw Error("negative power of zero");
        Scalar inv = 1 / q;
        return power(inv, -k);
    }
    Scalar result = 1;
    Scalar base = q;
    unsigned e = static_cast<unsigned>(k);
    while (e != 0) {
        if (e & 1u) result *= base;
        e >>= 1;
        if (e != 0) base *= base;
    }
    return result;
}

std::optional<int> excluded_exponent(const Scalar& q, const Scalar& Q, int lo, int hi) {
    if (Q >= 0) return std::nullopt;
    for (int s = lo; s <= hi; ++s)
        if (Q + power(q, s) == 0) return s;
    return std::nullopt;
}

ParameterPoint ParameterPoint::make(Scalar q, Scalar Q, int guard_bound) {
    if (q <= 0) throw InadmissiblePoint("q must be positive");
    if (q == 1) throw InadmissiblePoint("q = 1 is excluded");
    if (Q == 0) throw InadmissiblePoint("Q = 0 is excluded");
    if (guard_bound < 0) throw Error("guard bound must be nonnegative");
    ParameterPoint p(std::move(q), std::move(Q), guard_bound);
    p.require_avoids(-guard_bound, guard_bound);
    // Q = -1 is the s = 0 case; reject it even with a zero guard.
    p.require_avoids(0, 0);
    return p;
}

bool ParameterPoint::avoids(int lo, int hi) const { return !excluded_exponent(q_, Q_, lo, hi); }

void ParameterPoint::require_avoids(int lo, int hi) const {
    if (auto s = excluded_exponent(q_, Q_, lo, hi)) {
        std::string msg = *s == 0 ? "Q = -1 is excluded" : "Q = -q^" + std::to_string(*s) + " is excluded";
        throw InadmissiblePoint(msg);
    }
}

Scalar qpow(const ParameterPoint& point, int k) { return power(point.q(), k); }

namespace {

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

Scalar draw_q(std::mt19937_64& rng) {
    for (;;) {
        Scalar q(static_cast<long>(draw(rng, 9) + 1), static_cast<long>(draw(rng, 9) + 1));
        q.canonicalize();
        if (q > Scalar(1, 4) && q < 4 && q != 1) return q;
    }
}

Scalar draw_Q(std::mt19937_64& rng) {
    long num = static_cast<long>(draw(rng, 12) + 1);
    long den = static_cast<long>(draw(rng, 9) + 1);
    Scalar Q(num, den);
    Q.canonicalize();
    if (draw(rng, 2) == 0) Q = -Q;
    return Q;
}

int guard_for(std::size_t n, std::size_t r1, std::size_t r2) {
    return static_cast<int>(std::max({n, r1 + r2, 2 * n + 2}));
}

}  // namespace

std::vector<ParameterPoint> admissible_points(std::size_t n, std::size_t r1, std::size_t r2,
                                              std::uint64_t seed, std::size_t count) {
    if (n < 1 || r1 < 1 || r2 < 1) throw Error("admissible_points requires n, r1, r2 >= 1");
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    const int guard = guard_for(n, r1, r2);
    std::vector<ParameterPoint> out;
    while (out.size() < count) {
        Scalar q = draw_q(rng);
        Scalar Q = draw_Q(rng);
        if (Q == -1 || excluded_exponent(q, Q, -guard, guard)) continue;
        auto p = ParameterPoint::make(q, Q, guard);
        if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
    }
    return out;
}

ParameterPoint admissible_point(std::size_t n, std::size_t r1, std::size_t r2, std::uint64_t seed) {
    return admissible_points(n, r1, r2, seed, 1).front();
}

ParameterPoint specialized_point(const Scalar& q, std::size_t m, std::size_t r1) {
    if (q <= 0 || q == 1) throw InadmissiblePoint("specialized point needs q > 0 and q != 1");
    const int e = static_cast<int>(r1 + m);
    return ParameterPoint::make(q, -power(q, e), e - 1);
}

std::vector<Scalar> sample_q_values(std::uint64_t seed, std::size_t count) {
    std::mt19937_64 rng(seed ^ 0x51ed270b27d4c3a5ULL);
    std::vector<Scalar> out;
    while (out.size() < count) {
        Scalar q = draw_q(rng);
        if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(q);
    }
    return out;
}

Matrix Matrix::identity(std::size_t n) { return scalar(n, Scalar(1)); }

Matrix Matrix::scalar(std::size_t n, const Scalar& value) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = value;
    return m;
}

Matrix& Matrix::operator+=(const Matrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw Error("matrix shape mismatch in +");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw Error("matrix shape mismatch in -");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
    return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
    for (auto& x : data_) x *= s;
    return *this;
}

Scalar Matrix::trace() const {
    if (rows_ != cols_) throw Error("trace of a non-square matrix");
    Scalar t = 0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& x) { return x == 0; });
}

bool Matrix::is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i != j && (*this)(i, j) != 0) return false;
    return true;
}

std::size_t Matrix::rank() const {
    Matrix m = *this;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows_ && m(pivot, col) == 0) ++pivot;
        if (pivot == rows_) continue;
        if (pivot != rank)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m(pivot, j), m(rank, j));
        const Scalar inv = 1 / m(rank, col);
        for (std::size_t i = rank + 1; i < rows_; ++i) {
            if (m(i, col) == 0) continue;
            const Scalar factor = m(i, col) * inv;
            for (std::size_t j = col; j < cols_; ++j)
                if (m(rank, j) != 0) m(i, j) -= factor * m(rank, j);
        }
        ++rank;
    }
    return rank;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw Error("matrix shape mismatch in *");
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Scalar& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (b(k, j) != 0) c(i, j) += aik * b(k, j);
        }
    return c;
}

}  // namespace hecke

#include "hecke/traces.hpp"

#include "hecke/schur.hpp"

#include <algorithm>

namespace hecke {

namespace {

bool fits_rows(const DoublePartition& shape, int r1, int r2) {
    return static_cast<int>(shape.first.length()) <= r1 && static_cast<int>(shape.second.length()) <= r2;
}

void require_rows(int r1, int r2) {
    if (r1 < 1 || r2 < 1) throw Error("row bounds r1, r2 must be >= 1");
}

std::size_t dimension_of(const DoublePartition& shape) {
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(shape.size()),
                 static_cast<unsigned long>(shape.first.size()));
    return static_cast<std::size_t>(binom.get_ui()) * static_cast<std::size_t>(count_standard(shape.first)) *
           static_cast<std::size_t>(count_standard(shape.second));
}

}  // namespace

Scalar weight_B(const DoublePartition& shape, int r1, int r2, const ParameterPoint& point) {
    require_rows(r1, r2);
    point.require_avoids(1 - r2, r1 - 1);
    if (!fits_rows(shape, r1, r2)) return 0;
    const Scalar& q = point.q();
    const Scalar& Q = point.Q();
    const auto& a = shape.first;
    const auto& b = shape.second;
    const int r = r1 + r2;
    auto qp = [&](int k) { return power(q, k); };
    auto part = [](const Partition& p, int i) { return p.part(static_cast<std::size_t>(i - 1)); };

    Scalar w = qp(n_stat(a) + n_stat(b)) * power((1 - q) / (1 - qp(r)), shape.size());
    for (int i = 1; i <= r1; ++i)
        for (int j = i + 1; j <= r1; ++j) w *= (1 - qp(part(a, i) - part(a, j) + j - i)) / (1 - qp(j - i));
    for (int i = 1; i <= r2; ++i)
        for (int j = i + 1; j <= r2; ++j) w *= (1 - qp(part(b, i) - part(b, j) + j - i)) / (1 - qp(j - i));
    for (int i = 1; i <= r1; ++i)
        for (int j = 1; j <= r2; ++j)
            w *= (Q * qp(part(a, i) - i) + qp(part(b, j) - j)) / (Q * qp(-i) + qp(-j));
    return w;
}

Scalar weight_B_schur_form(const DoublePartition& shape, int r1, int r2, const ParameterPoint& point) {
    require_rows(r1, r2);
    point.require_avoids(1 - r2, r1 - 1);
    if (!fits_rows(shape, r1, r2)) return 0;
    const Scalar& q = point.q();
    const Scalar& Q = point.Q();
    const int r = r1 + r2;
    Scalar w = power(q, r1 * shape.second.size());
    w *= schur_principal(shape.first, r1, q) * schur_principal(shape.second, r2, q);
    w /= power(schur_principal(Partition{1}, r, q), shape.size());
    for (int i = 1; i <= r1; ++i)
        for (int j = 1; j <= r2; ++j) {
            const int ai = shape.first.part(static_cast<std::size_t>(i - 1));
            const int bj = shape.second.part(static_cast<std::size_t>(j - 1));
            w *= (1 + Q * power(q, ai - bj + j - i)) / (1 + Q * power(q, j - i));
        }
    return w;
}

MarkovParams markov_params(int r1, int r2, const ParameterPoint& point) {
    require_rows(r1, r2);
    const Scalar& q = point.q();
    const int r = r1 + r2;
    const Scalar one_minus_qr = 1 - power(q, r);
    Scalar z = power(q, r) * (1 - q) / one_minus_qr;
    Scalar y = (point.Q() * power(q, r2) + 1) * (1 - power(q, r1)) / one_minus_qr - 1;
    return {z, y};
}

Scalar WeightTable::normalization() const {
    Scalar total = 0;
    for (const auto& e : entries) total += e.weight * static_cast<unsigned long>(e.dimension);
    return total;
}

WeightTable weight_table(int n, int r1, int r2, const ParameterPoint& point) {
    auto params = markov_params(r1, r2, point);
    WeightTable table{n, r1, r2, point, {}, params.z, params.y};
    for (const auto& shape : double_partitions(n))
        table.entries.push_back({shape, weight_B(shape, r1, r2, point), dimension_of(shape)});
    return table;
}

MarkovTraceB::MarkovTraceB(int n, int r1, int r2, const ParameterPoint& point) : table_(weight_table(n, r1, r2, point)) {
    if (n == 0) return;
    for (const auto& e : table_.entries) {
        if (e.weight == 0) continue;
        reps_.push_back(typeB_rep(e.shape, point));
        weights_.push_back(e.weight);
    }
}

Scalar MarkovTraceB::operator()(const HeckeElement& element) const {
    if (table_.n == 0) {
        // H_0 is the ground field: only scalar multiples of 1.
        Scalar total = 0;
        for (const auto& [w, c] : element.terms()) {
            if (!w.empty()) throw Error("nonempty word in H_0");
            total += c;
        }
        return total;
    }
    Scalar total = 0;
    for (std::size_t k = 0; k < reps_.size(); ++k) total += weights_[k] * character(reps_[k], element);
    return total;
}

Scalar markov_trace_B(const HeckeElement& element, int n, int r1, int r2, const ParameterPoint& point) {
    return MarkovTraceB(n, r1, r2, point)(element);
}

TypeAMarkovTrace::TypeAMarkovTrace(int n, int r, const Scalar& q) : r_(r), q_(q) {
    if (r < 1) throw Error("type-A trace needs r >= 1");
    const auto point = ParameterPoint::make(q, Scalar(1), 0);
    for (const auto& mu : partitions(n)) {
        const Scalar w = schur_normalized(mu, r, q);
        if (w == 0) continue;
        reps_.push_back(typeA_rep(mu, point));
        weights_.push_back(w);
    }
}

Scalar TypeAMarkovTrace::operator()(const HeckeElement& element) const {
    Scalar total = 0;
    for (std::size_t k = 0; k < reps_.size(); ++k) total += weights_[k] * character(reps_[k], element);
    return total;
}

Scalar TypeAMarkovTrace::z() const { return power(q_, r_) * (1 - q_) / (1 - power(q_, r_)); }

Scalar typeA_markov_trace(const HeckeElement& element, int n, int r, const Scalar& q) {
    return TypeAMarkovTrace(n, r, q)(element);
}

ParameterPoint typeD_point(const Scalar& q, int guard_bound) { return ParameterPoint::make(q, Scalar(1), guard_bound); }

std::vector<TypeDWeight> weight_D(const DoublePartition& shape, int r1, int r2, const Scalar& q) {
    const auto point = typeD_point(q, std::max({shape.size(), r1 + r2}));
    const std::size_t dim = dimension_of(shape);
    const std::string label = format_double(shape);
    if (shape.first != shape.second) {
        const DoublePartition swapped{shape.second, shape.first};
        Scalar w = weight_B(shape, r1, r2, point) + weight_B(swapped, r1, r2, point);
        return {{label, shape, 0, w, dim}};
    }
    const Scalar w = weight_B(shape, r1, r2, point);
    return {{label + "_1", shape, 1, w, dim / 2}, {label + "_2", shape, 2, w, dim / 2}};
}

std::vector<TypeDWeight> typeD_weight_table(int n, int r1, int r2, const Scalar& q) {
    std::vector<TypeDWeight> out;
    const auto shapes = double_partitions(n);
    for (const auto& shape : shapes) {
        const DoublePartition swapped{shape.second, shape.first};
        // Merged classes are listed under whichever member comes first.
        if (shape.first != shape.second) {
            auto self = std::find(shapes.begin(), shapes.end(), shape);
            auto other = std::find(shapes.begin(), shapes.end(), swapped);
            if (other < self) continue;
        }
        for (auto& w : weight_D(shape, r1, r2, q)) out.push_back(std::move(w));
    }
    return out;
}

std::vector<std::vector<int>> typeD_inclusion_matrix(int n) {
    const auto shapes = double_partitions(n);
    // Class rows are independent of r1, r2, q; any valid arguments do.
    const auto classes = typeD_weight_table(n, n + 1, n + 1, Scalar(2));
    std::vector<std::vector<int>> g(classes.size(), std::vector<int>(shapes.size(), 0));
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const auto& c = classes[i].shape;
        const DoublePartition swapped{c.second, c.first};
        for (std::size_t j = 0; j < shapes.size(); ++j)
            if (shapes[j] == c || shapes[j] == swapped) g[i][j] = 1;
    }
    return g;
}

void require_typeD_alphabet(const HeckeElement& element) {
    for (const auto& [w, c] : element.terms())
        for (const auto& l : w.letters())
            if (l.kind != LetterKind::U && l.kind != LetterKind::G && l.kind != LetterKind::Ginv)
                throw Error("letter " + l.token() + " is not in the type-D alphabet {u, g_i, g_i^-1}");
}

MarkovTraceD::MarkovTraceD(int n, int r1, int r2, const Scalar& q)
    : inner_(n, r1, r2, typeD_point(q, std::max(n, r1 + r2))) {}

Scalar MarkovTraceD::operator()(const HeckeElement& element) const {
    require_typeD_alphabet(element);
    return inner_(element);
}

Scalar markov_trace_D(const HeckeElement& element, int n, int r1, int r2, const Scalar& q) {
    return MarkovTraceD(n, r1, r2, q)(element);
}

}  // namespace hecke

#include "hecke/reps.hpp"

#include <functional>

namespace hecke {

std::string describe(const RepLabel& label) {
    struct Visitor {
        std::string operator()(const Partition& p) const { return format_partition(p); }
        std::string operator()(const DoublePartition& d) const { return format_double(d); }
        std::string operator()(const SkewLabel& s) const {
            return format_double(s.shape) + " in " + format_partition(embed_double(s.shape, s.m, s.r1)) + "/[" +
                   std::to_string(s.m) + "^" + std::to_string(s.r1) + "]";
        }
    };
    return std::visit(Visitor{}, label);
}

Representation::Representation(RepLabel label, std::vector<DoubleTableau> basis, std::optional<Matrix> t_matrix,
                               std::vector<Matrix> g_matrices, ParameterPoint point)
    : label_(std::move(label)),
      basis_(std::move(basis)),
      t_(std::move(t_matrix)),
      g_(std::move(g_matrices)),
      point_(std::move(point)),
      strands_(basis_.empty() ? 0 : static_cast<int>(basis_.front().size())) {
    const std::size_t d = basis_.size();
    if (strands_ > 0 && g_.size() != static_cast<std::size_t>(strands_ - 1))
        throw Error("expected one generator matrix per adjacent pair of strands");
    if (t_ && (t_->rows() != d || t_->cols() != d)) throw Error("t matrix has the wrong size");
    for (const auto& g : g_)
        if (g.rows() != d || g.cols() != d) throw Error("generator matrix has the wrong size");

    const Scalar q_inv = 1 / point_.q();
    const Matrix shift = Matrix::scalar(d, q_inv - 1);
    for (const auto& g : g_) g_inv_.push_back(q_inv * g + shift);

    if (t_) {
        // t'_i = g_i t'_{i-1} g_i^-1
        t_prime_.push_back(*t_);
        for (std::size_t i = 0; i < g_.size(); ++i) t_prime_.push_back(g_[i] * t_prime_.back() * g_inv_[i]);
    }
}

Matrix Representation::letter_matrix(const Letter& l) const {
    if (l.min_strands() > strands_)
        throw Error("letter " + l.token() + " does not act on a representation of H_" + std::to_string(strands_));
    auto need_t = [&]() {
        if (!t_) throw Error("letter " + l.token() + " needs a type-B representation");
    };
    const auto idx = static_cast<std::size_t>(l.index);
    switch (l.kind) {
        case LetterKind::T: need_t(); return *t_;
        case LetterKind::G: return g_.at(idx - 1);
        case LetterKind::Ginv: return g_inv_.at(idx - 1);
        case LetterKind::Tprime: need_t(); return t_prime_.at(idx);
        case LetterKind::U: need_t(); return *t_ * g_.at(0) * *t_;
    }
    throw Error("unknown letter");
}

namespace {

using AxialFn = std::function<Scalar(const DoubleTableau&, std::size_t)>;

// Seminormal generator matrices on `basis` (sorted canonically).
std::vector<Matrix> seminormal_generators(const std::vector<DoubleTableau>& basis, int strands, const Scalar& q,
                                          const AxialFn& axial) {
    const std::size_t d = basis.size();
    auto index_of = [&](const DoubleTableau& t) {
        auto it = std::lower_bound(basis.begin(), basis.end(), t);
        if (it == basis.end() || !(*it == t)) throw Error("tableau missing from basis");
        return static_cast<std::size_t>(it - basis.begin());
    };
    std::vector<Matrix> gens;
    for (int i = 1; i < strands; ++i) {
        Matrix g(d, d);
        for (std::size_t col = 0; col < d; ++col) {
            const auto& t = basis[col];
            const Scalar x = axial(t, static_cast<std::size_t>(i));
            if (x == 1) throw InadmissiblePoint("axial ratio equals 1; the point is singular for this shape");
            g(col, col) = x * (1 - q) / (1 - x);
            if (auto s = apply_transposition(t, static_cast<std::size_t>(i))) {
                const std::size_t row = index_of(*s);
                if (row > col) {
                    g(row, col) = 1;
                } else {
                    const Scalar one_minus_x = 1 - x;
                    g(row, col) = (q - x) * (1 - q * x) / (one_minus_x * one_minus_x);
                }
            }
        }
        gens.push_back(std::move(g));
    }
    return gens;
}

Matrix diagonal(const std::vector<Scalar>& entries) {
    Matrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
}

}  // namespace

Representation typeA_rep(const Partition& mu, const ParameterPoint& point) {
    auto basis = standard_tableaux(mu);
    const int n = mu.size();
    auto gens = seminormal_generators(basis, n, point.q(),
                                      [&](const DoubleTableau& t, std::size_t i) { return axial_parameter(t, i, point); });
    return Representation(mu, std::move(basis), std::nullopt, std::move(gens), point);
}

Representation typeB_rep(const DoublePartition& shape, const ParameterPoint& point) {
    const int n = shape.size();
    if (n < 1) throw Error("type-B representations need n >= 1");
    point.require_avoids(-(n - 1), n - 1);
    auto basis = standard_tableaux(shape);
    auto gens = seminormal_generators(basis, n, point.q(),
                                      [&](const DoubleTableau& t, std::size_t i) { return axial_parameter(t, i, point); });
    std::vector<Scalar> t_diag;
    for (const auto& t : basis) t_diag.push_back(t.box(1).component == Component::first ? point.Q() : Scalar(-1));
    return Representation(shape, std::move(basis), diagonal(t_diag), std::move(gens), point);
}

Scalar full_twist_scalar(const Partition& nu, const Scalar& q) {
    const int f = nu.size();
    if (f < 1) throw Error("full twist needs a nonempty partition");
    int exponent = f * (f - 1);
    for (std::size_t i = 0; i < nu.length(); ++i)
        for (std::size_t j = i + 1; j < nu.length(); ++j) exponent -= (nu.part(i) + 1) * nu.part(j);
    return power(q, exponent);
}

Representation skew_rep(const DoublePartition& shape, int m, int r1, const Scalar& q) {
    const int n = shape.size();
    if (n < 1) throw Error("skew representations need n >= 1");
    if (m <= n || r1 <= n) throw Error("skew representations need m > n and r1 > n");
    const ParameterPoint point = specialized_point(q, static_cast<std::size_t>(m), static_cast<std::size_t>(r1));
    auto basis = standard_tableaux(shape);

    auto absolute_content = [&](const Box& b) { return embed_box(b, m, r1).content(); };
    auto gens = seminormal_generators(basis, n, q, [&](const DoubleTableau& t, std::size_t i) {
        return power(q, absolute_content(t.box(i + 1)) - absolute_content(t.box(i)));
    });

    std::vector<int> rect(static_cast<std::size_t>(r1), m);
    std::vector<int> gamma_parts = rect;
    gamma_parts.push_back(1);
    const Scalar alpha_gamma = full_twist_scalar(Partition(gamma_parts), q);
    std::vector<Scalar> t_diag;
    for (const auto& t : basis) {
        const Box b = embed_box(t.box(1), m, r1);
        std::vector<int> nu = rect;
        if (static_cast<std::size_t>(b.row) > nu.size()) nu.resize(static_cast<std::size_t>(b.row), 0);
        nu[static_cast<std::size_t>(b.row - 1)] += 1;
        t_diag.push_back(-full_twist_scalar(Partition(nu), q) / alpha_gamma);
    }
    return Representation(SkewLabel{shape, m, r1}, std::move(basis), diagonal(t_diag), std::move(gens), point);
}

Matrix evaluate(const Representation& rep, const HeckeWord& word) {
    Matrix out = Matrix::identity(rep.dimension());
    for (const auto& l : word.letters()) out = out * rep.letter_matrix(l);
    return out;
}

Matrix evaluate(const Representation& rep, const HeckeElement& element) {
    if (element.ambient_n() > rep.strands())
        throw Error("element of H_" + std::to_string(element.ambient_n()) + " evaluated on a representation of H_" +
                    std::to_string(rep.strands()));
    Matrix out(rep.dimension(), rep.dimension());
    for (const auto& [w, c] : element.terms()) out += c * evaluate(rep, w);
    return out;
}

Scalar character(const Representation& rep, const HeckeElement& element) {
    // trace(sum c_w pi(w)) without forming the full sum
    Scalar total = 0;
    if (element.ambient_n() > rep.strands())
        throw Error("element of H_" + std::to_string(element.ambient_n()) + " evaluated on a representation of H_" +
                    std::to_string(rep.strands()));
    for (const auto& [w, c] : element.terms()) total += c * evaluate(rep, w).trace();
    return total;
}

std::vector<RelationResidual> relation_residuals(const std::optional<Matrix>& t, const std::vector<Matrix>& g,
                                                 const Scalar& q, const std::optional<Scalar>& Q) {
    std::vector<RelationResidual> out;
    const std::size_t n_gens = g.size();
    const std::size_t d = n_gens ? g[0].rows() : (t ? t->rows() : 0);
    const Matrix id = Matrix::identity(d);
    auto name = [](const std::string& rel, std::size_t i, std::size_t j = 0) {
        return rel + " (i=" + std::to_string(i) + (j ? ", j=" + std::to_string(j) : "") + ")";
    };
    for (std::size_t i = 0; i + 1 < n_gens; ++i)
        out.push_back({name("braid g_i g_i+1 g_i = g_i+1 g_i g_i+1", i + 1),
                       g[i] * g[i + 1] * g[i] - g[i + 1] * g[i] * g[i + 1]});
    for (std::size_t i = 0; i < n_gens; ++i)
        for (std::size_t j = i + 2; j < n_gens; ++j)
            out.push_back({name("commutation g_i g_j = g_j g_i", i + 1, j + 1), g[i] * g[j] - g[j] * g[i]});
    for (std::size_t i = 0; i < n_gens; ++i)
        out.push_back({name("quadratic g_i^2 = (q-1) g_i + q", i + 1), g[i] * g[i] - ((q - 1) * g[i] + q * id)});
    if (t) {
        if (!Q) throw Error("type-B relation check needs Q");
        out.push_back({"quadratic t^2 = (Q-1) t + Q", *t * *t - ((*Q - 1) * *t + *Q * id)});
        if (n_gens >= 1)
            out.push_back({"mixed braid t g_1 t g_1 = g_1 t g_1 t", *t * g[0] * *t * g[0] - g[0] * *t * g[0] * *t});
        for (std::size_t i = 1; i < n_gens; ++i)
            out.push_back({name("commutation t g_i = g_i t", i + 1), *t * g[i] - g[i] * *t});
    }
    return out;
}

std::vector<RelationResidual> relation_residuals(const Representation& rep) {
    std::optional<Scalar> Q;
    if (rep.t_matrix()) Q = rep.point().Q();
    return relation_residuals(rep.t_matrix(), rep.g_matrices(), rep.point().q(), Q);
}

}  // namespace hecke

#include "hecke/verify.hpp"

#include "hecke/combinatorics.hpp"
#include "hecke/homcheck.hpp"
#include "hecke/reps.hpp"
#include "hecke/schur.hpp"
#include "hecke/traces.hpp"
#include "hecke/words.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

namespace hecke {

namespace {

namespace ref {
constexpr const char* relations = "Section 2, relations (H1)-(H6)";
constexpr const char* jucys_murphy = "Section 2, elements t'_i";
constexpr const char* restriction = "Eq. (7)";
constexpr const char* full_twist = "Lemma 3.1";
constexpr const char* dimension = "Section 2, dimension 2^n n!";
constexpr const char* skew_dimension = "Section 3.2 (skew dimension)";
constexpr const char* coset_basis = "Section 2, coset representatives R_n";
constexpr const char* onto = "Theorem 3.3";
constexpr const char* markov = "Section 4, Markov property";
constexpr const char* tprime = "Proposition 4.1";
constexpr const char* tprime_products = "Lemma 5.4";
constexpr const char* double_cosets = "Section 4, double coset reduction";
constexpr const char* trace = "Section 4, trace property";
constexpr const char* closed_form = "Theorem 5.5";
constexpr const char* branching = "Lemma 5.1";
constexpr const char* weight_forms = "Eq. (10) = Eq. (11)";
constexpr const char* normalization = "Eq. (9), tr(1) = 1";
constexpr const char* rectangle = "Eq. (3)";
constexpr const char* factorization = "Eq. (4)";
constexpr const char* typeA_weights = "Section 5, type-A weights";
constexpr const char* pieri = "Lemma 5.1, Littlewood-Richardson rule";
constexpr const char* typeD_weights = "Proposition 6.1";
constexpr const char* typeD_markov = "Section 6, restriction of the Markov trace";
constexpr const char* typeD_relations = "Section 6, relations (D1)-(D5)";
constexpr const char* typeD_modules = "Section 6, figure 8";
}  // namespace ref

std::string at(const ParameterPoint& p) { return " at (q=" + to_string(p.q()) + ", Q=" + to_string(p.Q()) + ")"; }
std::string at(const Scalar& q) { return " at q=" + to_string(q); }
std::string n_is(int n) { return " n=" + std::to_string(n); }

HeckeWord lift(const HeckeWord& w, int n) { return HeckeWord(w.letters(), n); }

WordAlphabet typeB_alphabet() {
    WordAlphabet a;
    a.t_prime = true;
    return a;
}

WordAlphabet typeA_alphabet() {
    WordAlphabet a;
    a.t = false;
    return a;
}

WordAlphabet typeD_alphabet() {
    WordAlphabet a;
    a.t = false;
    a.u = true;
    return a;
}

// Word of length 0..8 in H_n, lifted to ambient `ambient`.
HeckeWord sample_word(int n, int ambient, std::mt19937_64& rng, const WordAlphabet& alphabet) {
    if (n == 0) return HeckeWord({}, ambient);
    return lift(random_word(n, rng() % 9, rng, alphabet), ambient);
}

// Counts failures and remembers the first one.
struct Tally {
    std::size_t total = 0;
    std::size_t failed = 0;
    std::string first;

    void record(bool ok, const std::function<std::string()>& describe_failure) {
        ++total;
        if (!ok && failed++ == 0) first = describe_failure();
    }
    Check check(std::string name, const char* paper_ref) const {
        std::string detail = std::to_string(total - failed) + "/" + std::to_string(total) + " exact";
        if (failed) detail += "; first failure: " + first;
        return {std::move(name), paper_ref, failed == 0 && total > 0, detail};
    }
};

void relation_tally(Tally& tally, const Representation& rep) {
    for (const auto& r : relation_residuals(rep))
        tally.record(r.residual.is_zero(), [&] { return r.relation + " on " + describe(rep.label()); });
}

std::vector<Scalar> flatten(const std::vector<Matrix>& blocks) {
    std::vector<Scalar> out;
    for (const auto& m : blocks)
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m(i, j));
    return out;
}

long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// Number of saturated chains from lambda up to mu in Young's lattice, i.e.
// standard fillings of mu/lambda, by removing corners of mu.
long long skew_fillings(const Partition& mu, const Partition& lambda, std::map<Partition, long long>& memo) {
    if (!lambda.contained_in(mu)) return 0;
    if (mu.size() == lambda.size()) return mu == lambda ? 1 : 0;
    if (auto it = memo.find(mu); it != memo.end()) return it->second;
    long long count = 0;
    const auto& parts = mu.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i + 1 < parts.size() && parts[i + 1] == parts[i]) continue;
        auto smaller = parts;
        --smaller[i];
        count += skew_fillings(Partition(smaller), lambda, memo);
    }
    memo[mu] = count;
    return count;
}

std::pair<int, int> trace_rows(int n) { return {n + 1, n}; }

// Linear map X -> XA - AX over all generators A, as a matrix on vec(X).
Matrix commutant_system(const std::vector<Matrix>& generators, std::size_t d) {
    Matrix system(generators.size() * d * d, d * d);
    std::size_t row = 0;
    for (const auto& A : generators)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j, ++row) {
                for (std::size_t b = 0; b < d; ++b) system(row, i * d + b) += A(b, j);
                for (std::size_t a = 0; a < d; ++a) system(row, a * d + j) -= A(i, a);
            }
    return system;
}

}  // namespace

Report check_typeA_relations(int max_n, const std::vector<ParameterPoint>& points) {
    Report report;
    for (int n = 2; n <= max_n; ++n)
        for (const auto& p : points) {
            Tally tally;
            for (const auto& mu : partitions(n)) relation_tally(tally, typeA_rep(mu, p));
            report.add(tally.check("type-A relation residuals vanish" + n_is(n) + at(p.q()), ref::relations));
        }
    return report;
}

Report check_typeB_relations(int max_n, const std::vector<ParameterPoint>& points) {
    Report report;
    for (int n = 1; n <= max_n; ++n)
        for (const auto& p : points) {
            Tally tally;
            for (const auto& shape : double_partitions(n)) relation_tally(tally, typeB_rep(shape, p));
            report.add(tally.check("type-B relation residuals vanish" + n_is(n) + at(p), ref::relations));
        }
    return report;
}

Report check_skew_relations(int max_n, const std::vector<Scalar>& qs) {
    Report report;
    for (int n = 1; n <= max_n; ++n)
        for (const auto& q : qs) {
            Tally tally;
            for (const auto& shape : double_partitions(n)) relation_tally(tally, skew_rep(shape, n + 1, n + 1, q));
            report.add(tally.check("skew relation residuals vanish" + n_is(n) + ", m=r1=" + std::to_string(n + 1) + at(q),
                                   ref::relations));
        }
    return report;
}

Report check_jucys_murphy(int max_n, const std::vector<ParameterPoint>& points) {
    Report report;
    for (int n = 1; n <= max_n; ++n)
        for (const auto& p : points) {
            Tally tally;
            for (const auto& shape : double_partitions(n)) {
                const auto rep = typeB_rep(shape, p);
                for (int i = 0; i < n; ++i) {
                    const Matrix M = evaluate(rep, jucys_murphy(i, n, p.q()));
                    bool ok = M.is_diagonal();
                    for (std::size_t k = 0; k < rep.dimension() && ok; ++k) {
                        const Box& b = rep.basis()[k].box(static_cast<std::size_t>(i + 1));
                        const Scalar qc = power(p.q(), b.content());
                        ok = M(k, k) == (b.component == Component::first ? Scalar(p.Q() * qc) : Scalar(-qc));
                    }
                    tally.record(ok, [&] { return "L_" + std::to_string(i) + " on " + format_double(shape); });
                }
            }
            report.add(tally.check("Jucys-Murphy elements act diagonally by Q q^c or -q^c" + n_is(n) + at(p),
                                   ref::jucys_murphy));
        }
    return report;
}

Report check_restriction(int max_n, const std::vector<ParameterPoint>& points, std::size_t samples, std::uint64_t seed) {
    Report report;
    std::mt19937_64 rng(seed);
    for (int n = 2; n <= max_n; ++n)
        for (const auto& p : points) {
            std::vector<HeckeWord> words{HeckeWord({}, n - 1)};
            for (std::size_t s = 0; s < samples; ++s) words.push_back(sample_word(n - 1, n - 1, rng, typeB_alphabet()));
            std::map<DoublePartition, Representation> smaller;
            for (const auto& shape : double_partitions(n - 1)) smaller.emplace(shape, typeB_rep(shape, p));
            Tally tally;
            for (const auto& shape : double_partitions(n)) {
                const auto rep = typeB_rep(shape, p);
                const auto preds = one_box_predecessors(shape);
                for (const auto& w : words) {
                    Scalar sum = 0;
                    for (const auto& pred : preds) sum += character(smaller.at(pred), w);
                    tally.record(character(rep, w) == sum,
                                 [&] { return format_double(shape) + " on '" + w.to_string() + "'"; });
                }
            }
            report.add(tally.check("restriction to H_(n-1) is the sum over removable boxes" + n_is(n) + at(p),
                                   ref::restriction));
        }
    return report;
}

Report check_full_twist(int max_f, const std::vector<Scalar>& qs) {
    Report report;
    for (const auto& q : qs) {
        const auto point = ParameterPoint::make(q, Scalar(1), 0);
        for (int f = 1; f <= max_f; ++f) {
            std::vector<Letter> letters;
            for (int rep = 0; rep < f; ++rep)
                for (int i = f - 1; i >= 1; --i) letters.push_back(Letter::g(i));
            const HeckeWord twist(letters, f);
            Tally tally;
            for (const auto& nu : partitions(f)) {
                const auto rep = typeA_rep(nu, point);
                tally.record(evaluate(rep, twist) == Matrix::scalar(rep.dimension(), full_twist_scalar(nu, q)),
                             [&] { return format_partition(nu); });
            }
            report.add(tally.check("full twist acts by alpha_nu, f=" + std::to_string(f) + at(q), ref::full_twist));
        }
    }
    return report;
}

Report check_dimensions(int max_n_square_sum, int max_n_skew) {
    Report report;
    for (int n = 0; n <= max_n_square_sum; ++n) {
        long long total = 0;
        for (const auto& shape : double_partitions(n)) {
            const auto d = static_cast<long long>(standard_tableaux(shape).size());
            total += d * d;
        }
        const long long expected = (1LL << n) * factorial(n);
        report.add({"sum of squared dimensions is 2^n n!" + n_is(n), ref::dimension, total == expected,
                    std::to_string(total) + " vs " + std::to_string(expected)});
    }
    for (int n = 1; n <= max_n_skew; ++n) {
        const int m = n + 1;
        const Partition rect(std::vector<int>(static_cast<std::size_t>(m), m));
        Tally tally;
        std::map<Partition, long long> memo;
        for (const auto& shape : double_partitions(n)) {
            mpz_class binom;
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(shape.first.size()));
            const long long formula = binom.get_si() * count_standard(shape.first) * count_standard(shape.second);
            const long long chains = skew_fillings(embed_double(shape, m, m), rect, memo);
            const auto basis = static_cast<long long>(standard_tableaux(shape).size());
            tally.record(formula == chains && chains == basis, [&] {
                return format_double(shape) + ": formula " + std::to_string(formula) + ", fillings " +
                       std::to_string(chains) + ", basis " + std::to_string(basis);
            });
        }
        report.add(tally.check("skew module dimension is C(n,|alpha|) f^alpha f^beta" + n_is(n), ref::skew_dimension));
    }
    return report;
}

Report check_coset_basis(int max_n, const ParameterPoint& point) {
    Report report;
    for (int n = 1; n <= max_n; ++n) {
        std::vector<HeckeWord> products{HeckeWord({}, n)};
        for (int k = 1; k <= n; ++k) {
            std::vector<HeckeWord> next;
            for (const auto& prefix : products)
                for (const auto& r : coset_representatives(k)) next.push_back(prefix * lift(r, n));
            products = std::move(next);
        }
        std::vector<Representation> reps;
        for (const auto& shape : double_partitions(n)) reps.push_back(typeB_rep(shape, point));
        std::vector<std::vector<Scalar>> rows;
        for (const auto& w : products) {
            std::vector<Matrix> blocks;
            for (const auto& rep : reps) blocks.push_back(evaluate(rep, w));
            rows.push_back(flatten(blocks));
        }
        Matrix M(rows.size(), rows.empty() ? 0 : rows.front().size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < rows[i].size(); ++j) M(i, j) = rows[i][j];
        const long long expected = (1LL << n) * factorial(n);
        const auto rank = static_cast<long long>(M.rank());
        report.add({"coset representative products form a basis" + n_is(n) + at(point), ref::coset_basis,
                    rank == expected && static_cast<long long>(products.size()) == expected,
                    std::to_string(products.size()) + " products of rank " + std::to_string(rank) + ", expected " +
                        std::to_string(expected)});
    }
    return report;
}

Report check_skew_matrices(int max_n, const std::vector<Scalar>& qs) {
    Report report;
    for (int n = 1; n <= max_n; ++n)
        for (const auto& q : qs) {
            const int m = n + 1;
            const auto point = specialized_point(q, static_cast<std::size_t>(m), static_cast<std::size_t>(m));
            Tally tally;
            for (const auto& shape : double_partitions(n)) {
                const auto skew = skew_rep(shape, m, m, q);
                const auto typeB = typeB_rep(shape, point);
                tally.record(skew.g_matrices() == typeB.g_matrices() && skew.t_matrix() == typeB.t_matrix(),
                             [&] { return format_double(shape); });
            }
            report.add(tally.check("skew and specialized type-B matrices coincide" + n_is(n) + ", m=r1=" +
                                       std::to_string(m) + at(q),
                                   ref::onto));
        }
    return report;
}

Report check_markov_property(int max_n, const std::vector<ParameterPoint>& points, std::size_t samples,
                             std::uint64_t seed) {
    Report report;
    std::mt19937_64 rng(seed);
    for (int n = 2; n <= max_n; ++n) {
        const auto [r1, r2] = trace_rows(n);
        for (const auto& p : points) {
            const MarkovTraceB tr(n, r1, r2, p);
            const MarkovTraceB tr_prev(n - 1, r1, r2, p);
            const Scalar z = markov_params(r1, r2, p).z;
            const HeckeWord g_last({Letter::g(n - 1)}, n);
            Tally markov;
            Tally compatible;
            for (std::size_t s = 0; s <= samples; ++s) {
                const HeckeWord h = s == 0 ? HeckeWord({}, n) : sample_word(n - 1, n, rng, typeB_alphabet());
                const Scalar base = tr(h);
                markov.record(tr(h * g_last) == z * base, [&] { return "h = '" + h.to_string() + "'"; });
                compatible.record(base == tr_prev(lift(h, n - 1)), [&] { return "h = '" + h.to_string() + "'"; });
            }
            report.add(markov.check("tr(h g_(n-1)) = z tr(h)" + n_is(n) + at(p), ref::markov));
            report.add(compatible.check("trace on H_n restricts to the trace on H_(n-1)" + n_is(n) + at(p), ref::markov));
        }
    }
    return report;
}

Report check_tprime_property(int max_n, const std::vector<ParameterPoint>& points, std::size_t samples,
                             std::uint64_t seed) {
    Report report;
    std::mt19937_64 rng(seed + 1);
    for (int n = 1; n <= max_n; ++n) {
        const auto [r1, r2] = trace_rows(n);
        for (const auto& p : points) {
            const MarkovTraceB tr(n, r1, r2, p);
            const Scalar y = markov_params(r1, r2, p).y;
            const HeckeWord t_last({Letter::t_prime(n - 1)}, n);
            Tally tally;
            for (std::size_t s = 0; s <= samples; ++s) {
                const HeckeWord h = s == 0 ? HeckeWord({}, n) : sample_word(n - 1, n, rng, typeB_alphabet());
                tally.record(tr(h * t_last) == y * tr(h), [&] { return "h = '" + h.to_string() + "'"; });
            }
            report.add(tally.check("tr(h t'_(n-1)) = y tr(h)" + n_is(n) + at(p), ref::tprime));
        }
    }
    return report;
}

Report check_tprime_products(int max_k, const std::vector<ParameterPoint>& points) {
    Report report;
    for (int k = 1; k <= max_k; ++k) {
        const auto [r1, r2] = trace_rows(k);
        std::vector<Letter> letters;
        for (int i = 0; i < k; ++i) letters.push_back(Letter::t_prime(i));
        const HeckeWord word(letters, k);
        for (const auto& p : points) {
            const Scalar y = markov_params(r1, r2, p).y;
            const Scalar value = markov_trace_B(word, k, r1, r2, p);
            report.add({"tr(t'_0 ... t'_(k-1)) = y^k, k=" + std::to_string(k) + at(p), ref::tprime_products,
                        value == power(y, k), to_string(value) + " vs " + to_string(power(y, k))});
        }
    }
    return report;
}

Report check_double_cosets(int max_n, const std::vector<ParameterPoint>& points) {
    Report report;
    for (int n = 1; n <= max_n; ++n) {
        const auto [r1, r2] = trace_rows(n);
        std::vector<HeckeWord> products{HeckeWord({}, n)};
        for (int k = 1; k <= n; ++k) {
            std::vector<HeckeWord> next;
            for (const auto& prefix : products)
                for (const auto& d : double_coset_representatives(k)) next.push_back(prefix * lift(d, n));
            products = std::move(next);
        }
        for (const auto& p : points) {
            const MarkovTraceB tr(n, r1, r2, p);
            const auto [z, y] = markov_params(r1, r2, p);
            Tally tally;
            for (const auto& w : products) {
                int a = 0;
                int b = 0;
                for (const auto& l : w.letters()) (l.kind == LetterKind::G ? a : b) += 1;
                tally.record(tr(w) == power(z, a) * power(y, b), [&] { return "'" + w.to_string() + "'"; });
            }
            report.add(tally.check("tr(d_1 ... d_n) = z^a y^b over double coset representatives" + n_is(n) + at(p),
                                   ref::double_cosets));
        }
    }
    return report;
}

Report check_trace_property(int max_n, const std::vector<ParameterPoint>& points, std::size_t samples,
                            std::uint64_t seed) {
    Report report;
    std::mt19937_64 rng(seed + 2);
    for (int n = 1; n <= max_n; ++n) {
        const auto [r1, r2] = trace_rows(n);
        for (const auto& p : points) {
            const MarkovTraceB tr(n, r1, r2, p);
            Tally tally;
            for (std::size_t s = 0; s < samples; ++s) {
                const HeckeWord a = sample_word(n, n, rng, typeB_alphabet());
                const HeckeWord b = sample_word(n, n, rng, typeB_alphabet());
                tally.record(tr(a * b) == tr(b * a),
                             [&] { return "a = '" + a.to_string() + "', b = '" + b.to_string() + "'"; });
            }
            report.add(tally.check("tr(ab) = tr(ba)" + n_is(n) + at(p), ref::trace));
        }
    }
    return report;
}

Report check_trace_of_t(int max_r, std::size_t points, std::uint64_t seed) {
    Report report;
    const HeckeWord t({Letter::t()}, 1);
    const DoublePartition first{Partition{1}, Partition{}};
    const DoublePartition second{Partition{}, Partition{1}};
    for (int r1 = 1; r1 <= max_r; ++r1)
        for (int r2 = 1; r2 <= max_r; ++r2) {
            const int r = r1 + r2;
            Tally tally;
            const auto pts = admissible_points(1, static_cast<std::size_t>(r1), static_cast<std::size_t>(r2),
                                               seed + static_cast<std::uint64_t>(100 * r1 + r2), points);
            for (const auto& p : pts) {
                const Scalar& q = p.q();
                const Scalar& Q = p.Q();
                const Scalar closed = (Q * power(q, r2) + 1) * (1 - power(q, r1)) / (1 - power(q, r)) - 1;
                const Scalar w1 = (1 - power(q, r1)) * (1 + Q * power(q, r2)) / ((1 - power(q, r)) * (1 + Q));
                const Scalar w2 =
                    power(q, r1) * (1 - power(q, r2)) * (1 + Q * power(q, -r1)) / ((1 - power(q, r)) * (1 + Q));
                const Scalar from_weights = Q * weight_B(first, r1, r2, p) - weight_B(second, r1, r2, p);
                const Scalar from_characters = markov_trace_B(t, 1, r1, r2, p);
                const bool ok = markov_params(r1, r2, p).y == closed && from_weights == closed &&
                                from_characters == closed && weight_B(first, r1, r2, p) == w1 &&
                                weight_B(second, r1, r2, p) == w2;
                tally.record(ok, [&] {
                    return "closed " + to_string(closed) + ", weights " + to_string(from_weights) + ", characters " +
                           to_string(from_characters) + at(p);
                });
            }
            report.add(tally.check("tr(t) = y by formula, weights and characters, r1=" + std::to_string(r1) +
                                       ", r2=" + std::to_string(r2),
                                   ref::closed_form));
        }
    return report;
}

Report check_branching(int max_n, int r1, int r2, const std::vector<ParameterPoint>& points) {
    Report report;
    for (int n = 0; n <= max_n; ++n)
        for (const auto& p : points) {
            Tally tally;
            for (const auto& shape : double_partitions(n)) {
                Scalar sum = 0;
                for (const auto& s : one_box_successors(shape)) sum += weight_B(s, r1, r2, p);
                tally.record(weight_B(shape, r1, r2, p) == sum, [&] { return format_double(shape); });
            }
            report.add(tally.check("weight equals the sum over one-box successors" + n_is(n) + ", r1=" +
                                       std::to_string(r1) + ", r2=" + std::to_string(r2) + at(p),
                                   ref::branching));
        }
    return report;
}

Report check_weight_forms(int max_n, int r1, int r2, const std::vector<ParameterPoint>& points) {
    Report report;
    for (int n = 0; n <= max_n; ++n)
        for (const auto& p : points) {
            Tally tally;
            for (const auto& shape : double_partitions(n))
                tally.record(weight_B(shape, r1, r2, p) == weight_B_schur_form(shape, r1, r2, p),
                             [&] { return format_double(shape); });
            report.add(tally.check("product and Schur forms of the weight agree" + n_is(n) + at(p), ref::weight_forms));
        }
    return report;
}

Report check_normalization(int max_n, int r1, int r2, const std::vector<ParameterPoint>& points) {
    Report report;
    for (int n = 0; n <= max_n; ++n)
        for (const auto& p : points) {
            const Scalar total = weight_table(n, r1, r2, p).normalization();
            report.add({"sum of weight times dimension is 1" + n_is(n) + at(p), ref::normalization, total == 1,
                        to_string(total)});
        }
    return report;
}

Report check_rectangle_schur(int max_side, const std::vector<Scalar>& qs) {
    Report report;
    for (const auto& q : qs) {
        Tally tally;
        for (int m = 1; m <= max_side; ++m)
            for (int r1 = 1; r1 <= max_side; ++r1)
                for (int r2 = 1; r2 <= max_side; ++r2) {
                    const Partition rect(std::vector<int>(static_cast<std::size_t>(r1), m));
                    tally.record(rectangle_schur(m, r1, r2, q) == schur_normalized(rect, r1 + r2, q), [&] {
                        return "m=" + std::to_string(m) + ", r1=" + std::to_string(r1) + ", r2=" + std::to_string(r2);
                    });
                }
        report.add(tally.check("rectangle Schur closed form" + at(q), ref::rectangle));
    }
    return report;
}

Report check_factorization(int max_n, const std::vector<Scalar>& qs) {
    Report report;
    for (int n = 0; n <= max_n; ++n)
        for (const auto& q : qs) {
            const int m = n + 1;
            Tally tally;
            for (int r2 : {n + 1, n + 2})
                for (const auto& shape : double_partitions(n))
                    tally.record(schur_normalized(embed_double(shape, m, m), m + r2, q) ==
                                     schur_embedded_factorized(shape, m, m, r2, q),
                                 [&] { return format_double(shape) + ", r2=" + std::to_string(r2); });
            report.add(tally.check("factorized Schur value of the embedded shape" + n_is(n) + at(q), ref::factorization));
        }
    return report;
}

Report check_typeA_normalization(int max_n, const std::vector<int>& rs, const std::vector<Scalar>& qs) {
    Report report;
    for (int n = 0; n <= max_n; ++n)
        for (int r : rs)
            for (const auto& q : qs) {
                Scalar total = 0;
                for (const auto& mu : partitions(n)) total += schur_normalized(mu, r, q) * static_cast<long>(count_standard(mu));
                report.add({"sum of s_(mu,r) f^mu is 1" + n_is(n) + ", r=" + std::to_string(r) + at(q),
                            ref::typeA_weights, total == 1, to_string(total)});
            }
    return report;
}

Report check_pieri(int max_n, const std::vector<int>& rs, const std::vector<Scalar>& qs) {
    Report report;
    for (int n = 0; n <= max_n; ++n)
        for (int r : rs)
            for (const auto& q : qs) {
                Tally tally;
                for (const auto& mu : partitions(n)) {
                    Scalar sum = 0;
                    for (const auto& s : one_box_successors({mu, Partition{}}))
                        if (s.second.empty()) sum += schur_normalized(s.first, r, q);
                    tally.record(schur_normalized(mu, r, q) == sum, [&] { return format_partition(mu); });
                }
                report.add(tally.check("s_(mu,r) is the sum over one-box successors" + n_is(n) + ", r=" +
                                           std::to_string(r) + at(q),
                                       ref::pieri));
            }
    return report;
}

Report check_typeA_markov(int max_n, int r, const std::vector<Scalar>& qs, std::size_t samples, std::uint64_t seed) {
    Report report;
    std::mt19937_64 rng(seed + 3);
    for (int n = 1; n <= max_n; ++n)
        for (const auto& q : qs) {
            const TypeAMarkovTrace tr(n, r, q);
            const Scalar one = tr(HeckeElement::identity(n));
            report.add({"type-A trace of 1 is 1" + n_is(n) + at(q), ref::typeA_weights, one == 1, to_string(one)});
            if (n < 2) continue;
            const HeckeWord g_last({Letter::g(n - 1)}, n);
            Tally tally;
            for (std::size_t s = 0; s <= samples; ++s) {
                const HeckeWord h = s == 0 ? HeckeWord({}, n) : sample_word(n - 1, n, rng, typeA_alphabet());
                tally.record(tr(h * g_last) == tr.z() * tr(h), [&] { return "h = '" + h.to_string() + "'"; });
            }
            report.add(tally.check("type-A tr(h g_(n-1)) = z tr(h)" + n_is(n) + ", r=" + std::to_string(r) + at(q),
                                   ref::typeA_weights));
        }
    return report;
}

Report check_typeD_inclusion(int max_n, int r1, int r2, const std::vector<Scalar>& qs) {
    Report report;
    for (int n = 1; n <= max_n; ++n)
        for (const auto& q : qs) {
            const auto shapes = double_partitions(n);
            const auto classes = typeD_weight_table(n, r1, r2, q);
            const auto G = typeD_inclusion_matrix(n);
            const auto point = typeD_point(q, std::max(n, r1 + r2));
            std::vector<Scalar> typeB;
            for (const auto& s : shapes) typeB.push_back(weight_B(s, r1, r2, point));
            Tally tally;
            Scalar total = 0;
            for (std::size_t i = 0; i < classes.size(); ++i) {
                Scalar image = 0;
                for (std::size_t j = 0; j < shapes.size(); ++j) image += G[i][j] * typeB[j];
                tally.record(image == classes[i].weight, [&] { return classes[i].label; });
                total += classes[i].weight * static_cast<unsigned long>(classes[i].dimension);
            }
            for (const auto& s : shapes) {
                const auto a = weight_D(s, r1, r2, q);
                const auto b = weight_D({s.second, s.first}, r1, r2, q);
                tally.record(a.front().weight == b.front().weight, [&] { return "symmetry of " + format_double(s); });
            }
            tally.record(total == 1, [&] { return "sum of weight times dimension is " + to_string(total); });
            report.add(tally.check("inclusion matrix maps type-B weights at Q=1 to type-D weights" + n_is(n) + at(q),
                                   ref::typeD_weights));
        }
    return report;
}

Report check_typeD_markov(int max_n, int r1, int r2, const std::vector<Scalar>& qs, std::size_t samples,
                          std::uint64_t seed) {
    Report report;
    std::mt19937_64 rng(seed + 4);
    for (int n = 3; n <= max_n; ++n)
        for (const auto& q : qs) {
            const MarkovTraceD tr(n, r1, r2, q);
            const Scalar z = markov_params(r1, r2, tr.typeB().table().point).z;
            const HeckeWord g_last({Letter::g(n - 1)}, n);
            Tally tally;
            for (std::size_t s = 0; s <= samples; ++s) {
                const HeckeWord h = s == 0 ? HeckeWord({}, n) : sample_word(n - 1, n, rng, typeD_alphabet());
                tally.record(tr(h * g_last) == z * tr(h), [&] { return "h = '" + h.to_string() + "'"; });
            }
            report.add(tally.check("type-D tr(h g_(n-1)) = z tr(h)" + n_is(n) + at(q), ref::typeD_markov));
        }
    return report;
}

Report check_typeD_relations(int max_n, int r1, int r2, const std::vector<Scalar>& qs, std::size_t samples,
                             std::uint64_t seed) {
    Report report;
    std::mt19937_64 rng(seed + 5);
    for (int n = 2; n <= max_n; ++n)
        for (const auto& q : qs) {
            const MarkovTraceD tr(n, r1, r2, q);
            auto word = [n](std::vector<Letter> letters) { return HeckeElement(HeckeWord(std::move(letters), n)); };
            const auto one = HeckeElement::identity(n);
            const auto u = word({Letter::u()});

            std::vector<std::tuple<std::string, HeckeElement, HeckeElement>> relations;
            for (int i = 1; i + 1 <= n - 1; ++i)
                relations.emplace_back("(D1) i=" + std::to_string(i), word({Letter::g(i), Letter::g(i + 1), Letter::g(i)}),
                                       word({Letter::g(i + 1), Letter::g(i), Letter::g(i + 1)}));
            for (int i = 1; i <= n - 1; ++i)
                for (int j = i + 2; j <= n - 1; ++j)
                    relations.emplace_back("(D2) i=" + std::to_string(i) + ", j=" + std::to_string(j),
                                           word({Letter::g(i), Letter::g(j)}), word({Letter::g(j), Letter::g(i)}));
            for (int i = 1; i <= n - 1; ++i) {
                const auto g = word({Letter::g(i)});
                relations.emplace_back("(D3) i=" + std::to_string(i), g * g, (q - 1) * g + q * one);
                if (i == 2)
                    relations.emplace_back("(D4) braid form u g_2 u = g_2 u g_2", u * g * u, g * u * g);
                else
                    relations.emplace_back("(D4) i=" + std::to_string(i), u * g, g * u);
            }
            relations.emplace_back("(D5)", u * u, (q - 1) * u + q * one);

            Tally tally;
            for (std::size_t s = 0; s <= samples; ++s) {
                const HeckeElement a = s == 0 ? one : HeckeElement(sample_word(n, n, rng, typeD_alphabet()));
                const HeckeElement b = s == 0 ? one : HeckeElement(sample_word(n, n, rng, typeD_alphabet()));
                for (const auto& [name, lhs, rhs] : relations)
                    tally.record(tr(a * lhs * b) == tr(a * rhs * b), [&, &name = name] { return name; });
            }
            report.add(tally.check("type-D relations hold as trace identities" + n_is(n) + at(q), ref::typeD_relations));

            if (n >= 3) {
                // u and g_2 do not commute, so the braid form above is the correct relation
                const auto point = typeD_point(q, n);
                bool separated = false;
                for (const auto& shape : double_partitions(n)) {
                    const auto rep = typeB_rep(shape, point);
                    const Matrix U = rep.letter_matrix(Letter::u());
                    if (!(U * rep.g(2) == rep.g(2) * U)) separated = true;
                }
                report.add({"u g_2 != g_2 u on some module" + n_is(n) + at(q), ref::typeD_relations, separated, ""});
            }
        }
    return report;
}

Report check_typeD_modules(int max_n, const std::vector<Scalar>& qs, std::size_t samples, std::uint64_t seed) {
    Report report;
    std::mt19937_64 rng(seed + 6);
    for (int n = 2; n <= max_n; ++n)
        for (const auto& q : qs) {
            const auto point = typeD_point(q, n);
            std::vector<HeckeWord> words{HeckeWord({}, n)};
            for (std::size_t s = 0; s < samples; ++s) words.push_back(sample_word(n, n, rng, typeD_alphabet()));
            std::map<DoublePartition, Representation> reps;
            for (const auto& shape : double_partitions(n)) reps.emplace(shape, typeB_rep(shape, point));

            Tally commutant;
            Tally swapped;
            for (const auto& [shape, rep] : reps) {
                std::vector<Matrix> gens{rep.letter_matrix(Letter::u())};
                for (const auto& g : rep.g_matrices()) gens.push_back(g);
                const std::size_t d = rep.dimension();
                const std::size_t dim = d * d - commutant_system(gens, d).rank();
                const std::size_t expected = shape.first == shape.second ? 2 : 1;
                commutant.record(dim == expected, [&, &shape = shape] {
                    return format_double(shape) + " has commutant dimension " + std::to_string(dim);
                });
                const auto& mirror = reps.at({shape.second, shape.first});
                for (const auto& w : words)
                    swapped.record(character(rep, w) == character(mirror, w),
                                   [&, &shape = shape] { return format_double(shape) + " on '" + w.to_string() + "'"; });
            }
            report.add(commutant.check("type-D restriction is simple, or splits in two when alpha = beta" + n_is(n) + at(q),
                                       ref::typeD_modules));
            report.add(swapped.check("(alpha,beta) and (beta,alpha) agree on type-D words" + n_is(n) + at(q),
                                     ref::typeD_modules));
        }
    return report;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"relations", "markov", "branching", "schur", "hom", "typeD", "all"};
    return names;
}

namespace {

std::vector<ParameterPoint> suite_points(const SuiteOptions& o, int r1, int r2) {
    return admissible_points(static_cast<std::size_t>(o.n), static_cast<std::size_t>(r1), static_cast<std::size_t>(r2),
                             o.seed, o.points);
}

Report suite_relations(const SuiteOptions& o) {
    const int n = o.n;
    const auto points = suite_points(o, n + 1, n + 1);
    const auto qs = sample_q_values(o.seed, o.points);
    Report r;
    r.append(check_typeA_relations(n, points));
    r.append(check_typeB_relations(n, points));
    r.append(check_skew_relations(n, qs));
    r.append(check_jucys_murphy(n, points));
    r.append(check_restriction(n, points, o.samples, o.seed));
    r.append(check_full_twist(n, qs));
    r.append(check_dimensions(n, n));
    r.append(check_coset_basis(std::min(n, 3), points.front()));
    return r;
}

Report suite_markov(const SuiteOptions& o) {
    const int n = o.n;
    const auto [r1, r2] = trace_rows(n);
    const auto points = suite_points(o, r1, r2);
    Report r;
    r.append(check_markov_property(n, points, o.samples, o.seed));
    r.append(check_tprime_property(n, points, o.samples, o.seed));
    r.append(check_tprime_products(n, points));
    r.append(check_double_cosets(n, points));
    r.append(check_trace_property(n, points, o.samples, o.seed));
    r.append(check_trace_of_t(4, o.points, o.seed));
    return r;
}

Report suite_branching(const SuiteOptions& o) {
    const int rows = std::max(5, o.n + 1);
    const auto points = suite_points(o, rows, rows);
    Report r;
    r.append(check_branching(o.n, rows, rows, points));
    r.append(check_weight_forms(o.n, rows, rows, points));
    r.append(check_normalization(o.n, rows, rows, points));
    return r;
}

Report suite_schur(const SuiteOptions& o) {
    const auto qs = sample_q_values(o.seed, o.points);
    Report r;
    r.append(check_rectangle_schur(4, qs));
    r.append(check_factorization(o.n, qs));
    r.append(check_typeA_normalization(o.n, {2, 3, 4}, qs));
    r.append(check_pieri(o.n, {2, 3, 4}, qs));
    r.append(check_typeA_markov(o.n, 3, qs, o.samples, o.seed));
    return r;
}

Report suite_hom(const SuiteOptions& o) {
    const auto qs = sample_q_values(o.seed, o.points);
    Report r;
    for (const auto& q : qs) r.append(rho_eigenvalue_report(2, 2, q));
    for (int n = 1; n <= o.n; ++n) {
        const int m = n + 1;
        for (const auto& q : qs) {
            r.append(rho_eigenvalue_report(m, m, q));
            r.append(character_match_report(n, m, m, q, o.samples, o.seed));
            for (int r2 : {n + 1, n + 2}) r.append(weight_ratio_report(n, m, m, r2, q));
            r.append(skew_structure_report(n, m, m, q));
        }
    }
    r.append(check_skew_matrices(o.n, qs));
    r.append(check_skew_relations(o.n, qs));
    return r;
}

Report suite_typeD(const SuiteOptions& o) {
    const int n = o.n;
    const auto [r1, r2] = trace_rows(n);
    const auto qs = sample_q_values(o.seed, o.points);
    Report r;
    r.append(check_typeD_inclusion(n, r1, r2, qs));
    r.append(check_typeD_markov(n, r1, r2, qs, o.samples, o.seed));
    r.append(check_typeD_relations(n, r1, r2, qs, o.samples, o.seed));
    r.append(check_typeD_modules(n, qs, o.samples, o.seed));
    return r;
}

}  // namespace

Report run_suite(const std::string& name, const SuiteOptions& options) {
    if (options.n < 1) throw Error("--n must be at least 1");
    if (options.points < 1) throw Error("--points must be at least 1");
    static const std::map<std::string, Report (*)(const SuiteOptions&)> suites{
        {"relations", suite_relations}, {"markov", suite_markov}, {"branching", suite_branching},
        {"schur", suite_schur},         {"hom", suite_hom},       {"typeD", suite_typeD},
    };
    if (name == "all") {
        Report r;
        for (const auto& s : suite_names())
            if (s != "all") r.append(suites.at(s)(options));
        return r;
    }
    auto it = suites.find(name);
    if (it == suites.end()) throw Error("unknown suite '" + name + "'");
    return it->second(options);
}

}  // namespace hecke

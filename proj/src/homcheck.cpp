#include "hecke/homcheck.hpp"

#include "hecke/reps.hpp"
#include "hecke/schur.hpp"
#include "hecke/traces.hpp"
#include "hecke/words.hpp"

#include <random>

namespace hecke {

namespace {

constexpr const char* kRhoRef = "Lemma 3.2";
constexpr const char* kOntoRef = "Theorem 3.3";
constexpr const char* kRatioRef = "Eq. (13)";
constexpr const char* kSkewDimRef = "Section 3.2 (skew dimension)";
constexpr const char* kTwistRef = "Lemma 3.1";

void require_hypothesis(int n, int m, int r1) {
    if (m <= n || r1 <= n) throw Error("need m > n and r1 > n");
}

Partition rectangle_plus(int m, int r1, int row) {
    std::vector<int> parts(static_cast<std::size_t>(r1), m);
    if (row > r1) parts.resize(static_cast<std::size_t>(row), 0);
    parts[static_cast<std::size_t>(row - 1)] += 1;
    return Partition(parts);
}

std::string tag(const DoublePartition& shape) { return format_double(shape); }

}  // namespace

Report rho_eigenvalue_report(int m, int r1, const Scalar& q, const std::optional<Partition>& gamma_override) {
    if (m < 2 || r1 < 2) throw Error("rho eigenvalue report needs m, r1 >= 2");
    Report report;
    const Scalar Q = -power(q, r1 + m);

    const Partition beta = rectangle_plus(m, r1, 1);
    const Partition gamma = gamma_override.value_or(rectangle_plus(m, r1, r1 + 1));
    const Scalar ratio = -full_twist_scalar(beta, q) / full_twist_scalar(gamma, q);
    report.add({"-alpha_beta/alpha_gamma = -q^(r1+m) (m=" + std::to_string(m) + ", r1=" + std::to_string(r1) + ")",
                kRhoRef, ratio == Q, "ratio " + to_string(ratio) + ", expected " + to_string(Q)});

    const auto first = skew_rep({Partition{1}, Partition{}}, m, r1, q);
    const auto second = skew_rep({Partition{}, Partition{1}}, m, r1, q);
    const Scalar t_first = (*first.t_matrix())(0, 0);
    const Scalar t_second = (*second.t_matrix())(0, 0);
    report.add({"rho(t) on V_([1],[]) is -q^(r1+m)", kRhoRef, t_first == Q, "got " + to_string(t_first)});
    report.add({"rho(t) on V_([],[1]) is -1", kRhoRef, t_second == -1, "got " + to_string(t_second)});
    return report;
}

Report character_match_report(int n, int m, int r1, const Scalar& q, std::size_t samples, std::uint64_t seed) {
    require_hypothesis(n, m, r1);
    Report report;
    const auto point = specialized_point(q, static_cast<std::size_t>(m), static_cast<std::size_t>(r1));
    const auto shapes = double_partitions(n);

    std::mt19937_64 rng(seed);
    std::vector<HeckeWord> words{HeckeWord({}, n)};
    WordAlphabet alphabet;
    alphabet.t_prime = true;
    for (std::size_t k = 0; k < samples; ++k) words.push_back(random_word(n, 1 + rng() % 8, rng, alphabet));

    std::vector<std::vector<Scalar>> skew_chars;
    for (const auto& shape : shapes) {
        const auto skew = skew_rep(shape, m, r1, q);
        const auto typeB = typeB_rep(shape, point);
        std::vector<Scalar> chars;
        std::size_t mismatches = 0;
        for (const auto& w : words) {
            const Scalar a = character(skew, HeckeElement(w));
            if (a != character(typeB, HeckeElement(w))) ++mismatches;
            chars.push_back(a);
        }
        skew_chars.push_back(std::move(chars));
        report.add({"skew and type-B characters agree for " + tag(shape) + " (n=" + std::to_string(n) + ")", kOntoRef,
                    mismatches == 0, std::to_string(mismatches) + " mismatches over " + std::to_string(words.size()) + " words"});
    }

    std::size_t unseparated = 0;
    std::string first_bad;
    for (std::size_t a = 0; a < shapes.size(); ++a)
        for (std::size_t b = a + 1; b < shapes.size(); ++b)
            if (skew_chars[a] == skew_chars[b]) {
                if (unseparated++ == 0) first_bad = tag(shapes[a]) + " vs " + tag(shapes[b]);
            }
    report.add({"distinct skew modules are separated by sampled words (n=" + std::to_string(n) + ")", kOntoRef,
                unseparated == 0, unseparated == 0 ? "all pairs separated" : "unseparated: " + first_bad});
    return report;
}

Report weight_ratio_report(int n, int m, int r1, int r2, const Scalar& q) {
    require_hypothesis(n, m, r1);
    Report report;
    const int r = r1 + r2;
    const auto point = specialized_point(q, static_cast<std::size_t>(m), static_cast<std::size_t>(r1));
    const Scalar rect = rectangle_schur(m, r1, r2, q);
    for (const auto& shape : double_partitions(n)) {
        const Scalar lhs = schur_normalized(embed_double(shape, m, r1), r, q) / rect;
        const Scalar rhs = weight_B(shape, r1, r2, point);
        report.add({"Schur ratio equals specialized weight for " + tag(shape), kRatioRef, lhs == rhs,
                    to_string(lhs) + " vs " + to_string(rhs)});
    }
    return report;
}

Report skew_structure_report(int n, int m, int r1, const Scalar& q) {
    require_hypothesis(n, m, r1);
    Report report;
    std::vector<int> gamma_parts(static_cast<std::size_t>(r1), m);
    gamma_parts.push_back(1);
    const Scalar alpha_gamma = full_twist_scalar(Partition(gamma_parts), q);
    for (const auto& shape : double_partitions(n)) {
        const auto rep = skew_rep(shape, m, r1, q);
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(shape.first.size()));
        const long long expected =
            binom.get_si() * count_standard(shape.first) * count_standard(shape.second);
        report.add({"skew dimension of " + tag(shape), kSkewDimRef,
                    static_cast<long long>(rep.dimension()) == expected,
                    std::to_string(rep.dimension()) + " vs " + std::to_string(expected)});

        bool diag_ok = rep.t_matrix()->is_diagonal();
        for (std::size_t k = 0; k < rep.dimension() && diag_ok; ++k) {
            const int row = embed_box(rep.basis()[k].box(1), m, r1).row;
            const Scalar expected_t = -full_twist_scalar(rectangle_plus(m, r1, row), q) / alpha_gamma;
            const Scalar expected_by_component =
                rep.basis()[k].box(1).component == Component::first ? -power(q, r1 + m) : Scalar(-1);
            diag_ok = (*rep.t_matrix())(k, k) == expected_t && expected_t == expected_by_component;
        }
        report.add({"rho(t) diagonal matches full-twist ratios for " + tag(shape), kTwistRef, diag_ok, ""});
    }
    return report;
}

}  // namespace hecke

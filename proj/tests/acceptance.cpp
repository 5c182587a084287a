// Acceptance run: one line per criterion, exit status 1 if any fails.

#include "hecke/homcheck.hpp"
#include "hecke/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace hecke;

namespace {

constexpr std::uint64_t kSeed = 2024;

struct Criterion {
    std::string name;
    double budget_seconds;
    std::function<Report()> run;
};

Report merge(std::initializer_list<Report> parts) {
    Report out;
    for (const auto& p : parts) out.append(p);
    return out;
}

}  // namespace

int main() {
    const auto points5 = admissible_points(5, 6, 5, kSeed, 5);
    const auto qs5 = sample_q_values(kSeed, 5);
    const auto qs3 = sample_q_values(kSeed, 3);

    const std::vector<Criterion> criteria{
        {"1 defining relations (A n<=5, B n<=4, skew n<=3)", 60,
         [&] {
             return merge({check_typeA_relations(5, points5), check_typeB_relations(4, points5),
                           check_skew_relations(3, qs5)});
         }},
        {"2 Markov property tr(h g_n) = z tr(h), n<=5", 120,
         [&] { return check_markov_property(5, points5, 20, kSeed); }},
        {"3 tr(h t'_n) = y tr(h) and t' products", 60,
         [&] { return merge({check_tprime_property(4, points5, 20, kSeed), check_tprime_products(4, points5)}); }},
        {"4 closed form of tr(t)", 30, [&] { return check_trace_of_t(4, 5, kSeed); }},
        {"5 weight branching rule", 30, [&] { return check_branching(4, 5, 5, points5); }},
        {"6 product and Schur forms of the weights", 30,
         [&] { return merge({check_weight_forms(4, 5, 5, points5), check_weight_forms(4, 3, 5, points5)}); }},
        {"7 Schur ratios equal specialized weights", 30,
         [&] {
             Report r;
             for (int n = 0; n <= 3; ++n)
                 for (int r2 : {n + 1, n + 2})
                     for (const auto& q : qs3) r.append(weight_ratio_report(n, n + 1, n + 1, r2, q));
             return r;
         }},
        {"8 skew and type-B characters agree at Q = -q^(r1+m)", 120,
         [&] {
             Report r;
             for (const auto& q : qs3) {
                 for (int n = 1; n <= 2; ++n) r.append(character_match_report(n, 3, 3, q, 20, kSeed));
                 r.append(character_match_report(3, 4, 4, q, 20, kSeed));
                 r.append(rho_eigenvalue_report(2, 2, q));
                 r.append(rho_eigenvalue_report(3, 2, q));
             }
             return r;
         }},
        {"9 full twist acts by the expected scalar", 30, [&] { return check_full_twist(4, qs5); }},
        {"10 module dimensions", 30, [&] { return check_dimensions(5, 4); }},
        {"11 type-D inclusion, trace and relations", 120,
         [&] {
             return merge({check_typeD_inclusion(3, 4, 3, qs3), check_typeD_markov(3, 4, 3, qs3, 20, kSeed),
                           check_typeD_relations(3, 4, 3, qs3, 20, kSeed), check_typeD_modules(3, qs3, 20, kSeed)});
         }},
        {"12 type-A weights and Markov trace", 60,
         [&] {
             return merge({check_typeA_normalization(5, {2, 3, 4}, qs5), check_typeA_markov(5, 3, qs3, 20, kSeed)});
         }},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Report report;
        std::string error;
        try {
            report = c.run();
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool within_budget = seconds <= c.budget_seconds;
        const bool pass = error.empty() && !report.checks.empty() && report.all_pass() && within_budget;
        if (!pass) ++failed;
        std::printf("%s  %-58s %4zu checks  %7.2fs (budget %.0fs)\n", pass ? "PASS" : "FAIL", c.name.c_str(),
                    report.checks.size(), seconds, c.budget_seconds);
        if (!error.empty()) std::printf("      error: %s\n", error.c_str());
        for (const auto& check : report.checks)
            if (!check.pass) {
                std::printf("      failed: %s: %s\n", check.name.c_str(), check.detail.c_str());
                break;
            }
        if (!within_budget) std::printf("      over time budget\n");
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}

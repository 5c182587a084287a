#include <doctest.h>

#include "hecke/schur.hpp"

#include <functional>

using namespace hecke;

namespace {

// s_alpha(1, q, ..., q^(r-1)) as a sum over semistandard fillings with
// entries 1..r, each contributing q^(sum of (entry - 1)).
Scalar monomial_expansion(const Partition& alpha, int r, const Scalar& q) {
    std::vector<std::pair<int, int>> cells;
    for (std::size_t i = 0; i < alpha.length(); ++i)
        for (int j = 0; j < alpha.part(i); ++j) cells.emplace_back(static_cast<int>(i), j);
    std::vector<std::vector<int>> fill(alpha.length());
    for (std::size_t i = 0; i < alpha.length(); ++i) fill[i].assign(static_cast<std::size_t>(alpha.part(i)), 0);
    Scalar total = 0;
    std::function<void(std::size_t, int)> rec = [&](std::size_t k, int exponent) {
        if (k == cells.size()) {
            total += power(q, exponent);
            return;
        }
        const auto [i, j] = cells[k];
        int lo = 1;
        if (j > 0) lo = std::max(lo, fill[i][j - 1]);
        if (i > 0) lo = std::max(lo, fill[i - 1][j] + 1);
        for (int v = lo; v <= r; ++v) {
            fill[i][j] = v;
            rec(k + 1, exponent + v - 1);
        }
    };
    rec(0, 0);
    return total;
}

Scalar det(std::vector<std::vector<Scalar>> m) {
    const std::size_t n = m.size();
    Scalar d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            d = -d;
        }
        d *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            const Scalar f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return d;
}

// a_{alpha+delta} / a_delta at x_i = q^(i-1).
Scalar bialternant(const Partition& alpha, int r, const Scalar& q) {
    std::vector<std::vector<Scalar>> num(static_cast<std::size_t>(r)), den(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            const Scalar x = power(q, i);
            num[i].push_back(power(x, alpha.part(static_cast<std::size_t>(j)) + r - 1 - j));
            den[i].push_back(power(x, r - 1 - j));
        }
    return det(num) / det(den);
}

const std::vector<Scalar> kQs{Scalar(2), Scalar(1, 3), Scalar(5, 4), Scalar(7, 3), Scalar(3, 5)};

}  // namespace

TEST_SUITE("schur") {

TEST_CASE("small principal specializations") {
    const Scalar q(3);
    CHECK(schur_principal(Partition{1}, 2, q) == 1 + q);
    CHECK(schur_principal(Partition{1, 1}, 2, q) == q);
    CHECK(schur_principal(Partition{2}, 2, q) == 1 + q + q * q);
    CHECK(schur_principal(Partition{}, 4, q) == 1);
    CHECK(schur_principal(Partition{1, 1, 1}, 2, q) == 0);
}

TEST_CASE("product formula matches semistandard enumeration") {
    for (const auto& q : kQs)
        for (int n = 0; n <= 5; ++n)
            for (const auto& alpha : partitions(n))
                for (int r = 1; r <= 4; ++r) CHECK(schur_principal(alpha, r, q) == monomial_expansion(alpha, r, q));
}

TEST_CASE("product formula matches the bialternant for up to three variables") {
    for (const auto& q : kQs)
        for (int n = 0; n <= 6; ++n)
            for (const auto& alpha : partitions(n))
                for (int r = 1; r <= 3; ++r)
                    if (static_cast<int>(alpha.length()) <= r) CHECK(schur_principal(alpha, r, q) == bialternant(alpha, r, q));
}

TEST_CASE("normalized values") {
    CHECK(schur_normalized(Partition{2}, 2, Scalar(2)) == Scalar(7, 9));
    for (const auto& q : kQs)
        for (int r = 1; r <= 5; ++r) {
            CHECK(schur_normalized(Partition{1}, r, q) == 1);
            CHECK(schur_normalized(Partition(std::vector<int>(static_cast<std::size_t>(r + 1), 1)), r, q) == 0);
        }
    CHECK_THROWS_AS(schur_principal(Partition{1}, 2, Scalar(1)), Error);
    CHECK_THROWS_AS(schur_principal(Partition{1}, 2, Scalar(-2)), Error);
}

TEST_CASE("rectangle closed form") {
    for (const auto& q : kQs) {
        CHECK(rectangle_schur(3, 1, 0, q) == 1);
        CHECK(rectangle_schur(1, 1, 1, q) == schur_normalized(Partition{1}, 2, q));
        CHECK(rectangle_schur(1, 1, 1, q) == 1);
        for (int m = 1; m <= 4; ++m)
            for (int r1 = 1; r1 <= 4; ++r1)
                for (int r2 = 1; r2 <= 4; ++r2) {
                    const Partition rect(std::vector<int>(static_cast<std::size_t>(r1), m));
                    CHECK(rectangle_schur(m, r1, r2, q) == schur_normalized(rect, r1 + r2, q));
                }
    }
    CHECK(rectangle_schur(2, 2, 1, Scalar(2)) == schur_normalized(Partition{2, 2}, 3, Scalar(2)));
}

TEST_CASE("factorized value of embedded shapes") {
    for (const auto& q : kQs)
        for (int n = 0; n <= 3; ++n) {
            const int m = n + 1;
            for (int r2 : {n + 1, n + 2})
                for (const auto& shape : double_partitions(n))
                    CHECK(schur_embedded_factorized(shape, m, m, r2, q) ==
                          schur_normalized(embed_double(shape, m, m), m + r2, q));
        }
}

TEST_CASE("type-A weights are normalized and satisfy the Pieri rule") {
    for (const auto& q : kQs)
        for (int r = 2; r <= 4; ++r)
            for (int n = 0; n <= 5; ++n) {
                Scalar total = 0;
                for (const auto& mu : partitions(n)) {
                    total += schur_normalized(mu, r, q) * static_cast<long>(count_standard(mu));
                    Scalar next = 0;
                    for (const auto& s : one_box_successors({mu, Partition{}}))
                        if (s.second.empty()) next += schur_normalized(s.first, r, q);
                    CHECK(schur_normalized(mu, r, q) == next);
                }
                CHECK(total == 1);
            }
}

}

#include <doctest.h>

#include "hecke/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <set>

using namespace hecke;

namespace {

struct Cell {
    int component;
    int row;
    int col;
};

std::vector<Cell> cells_of(const DoublePartition& shape) {
    std::vector<Cell> cells;
    const Partition* parts[2] = {&shape.first, &shape.second};
    for (int c = 0; c < 2; ++c)
        for (std::size_t r = 0; r < parts[c]->length(); ++r)
            for (int col = 1; col <= parts[c]->part(r); ++col) cells.push_back({c, static_cast<int>(r) + 1, col});
    return cells;
}

// Count fillings of the cells by 1..n increasing along rows and columns, by
// trying every permutation.
long long brute_force_standard(const DoublePartition& shape) {
    const auto cells = cells_of(shape);
    std::vector<int> filling(cells.size());
    std::iota(filling.begin(), filling.end(), 1);
    long long count = 0;
    do {
        bool ok = true;
        for (std::size_t a = 0; a < cells.size() && ok; ++a)
            for (std::size_t b = 0; b < cells.size() && ok; ++b) {
                if (cells[a].component != cells[b].component) continue;
                const bool right = cells[b].row == cells[a].row && cells[b].col == cells[a].col + 1;
                const bool below = cells[b].col == cells[a].col && cells[b].row == cells[a].row + 1;
                if ((right || below) && filling[b] < filling[a]) ok = false;
            }
        if (ok) ++count;
    } while (std::next_permutation(filling.begin(), filling.end()));
    return count;
}

bool is_standard(const DoubleTableau& t) {
    for (std::size_t e = 1; e <= t.size(); ++e) {
        const Box& b = t.box(e);
        for (std::size_t f = e + 1; f <= t.size(); ++f) {
            const Box& c = t.box(f);
            if (c.component != b.component) continue;
            if (c.row <= b.row && c.col <= b.col) return false;
        }
    }
    return true;
}

long long partition_count(int n) {
    // p(n) by the pentagonal recurrence
    std::vector<long long> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    for (int k = 1; k <= n; ++k)
        for (int j = 1;; ++j) {
            const int g1 = j * (3 * j - 1) / 2;
            const int g2 = j * (3 * j + 1) / 2;
            if (g1 > k) break;
            const long long sign = (j % 2) ? 1 : -1;
            p[static_cast<std::size_t>(k)] += sign * p[static_cast<std::size_t>(k - g1)];
            if (g2 <= k) p[static_cast<std::size_t>(k)] += sign * p[static_cast<std::size_t>(k - g2)];
        }
    return p[static_cast<std::size_t>(n)];
}

}  // namespace

TEST_SUITE("combinatorics") {

TEST_CASE("partition construction and order") {
    const Partition p{3, 1, 0, 0};
    CHECK(p.length() == 2);
    CHECK(p.size() == 4);
    CHECK(p.part(5) == 0);
    CHECK_THROWS_AS(Partition({1, 2}), Error);
    CHECK_THROWS_AS(Partition({2, -1}), Error);
    CHECK(Partition{2, 1}.contained_in(Partition{3, 1, 1}));
    CHECK_FALSE(Partition{1, 1, 1, 1}.contained_in(Partition{3, 1, 1}));
    CHECK(n_stat(Partition{2, 1}) == 1);
    CHECK(n_stat(Partition{1, 1, 1}) == 3);
    CHECK(n_stat(Partition{}) == 0);
}

TEST_CASE("partition and double partition counts") {
    for (int n = 0; n <= 8; ++n) {
        const auto ps = partitions(n);
        CHECK(static_cast<long long>(ps.size()) == partition_count(n));
        CHECK(std::set<Partition>(ps.begin(), ps.end()).size() == ps.size());
        for (const auto& p : ps) CHECK(p.size() == n);
        long long pairs = 0;
        for (int k = 0; k <= n; ++k) pairs += partition_count(k) * partition_count(n - k);
        CHECK(static_cast<long long>(double_partitions(n).size()) == pairs);
    }
    CHECK(double_partitions(2).size() == 5);
    CHECK(double_partitions(3).size() == 10);
    CHECK(partitions(3) == std::vector<Partition>{Partition{3}, Partition{2, 1}, Partition{1, 1, 1}});
}

TEST_CASE("standard tableaux against brute force") {
    for (int n = 0; n <= 6; ++n)
        for (const auto& shape : double_partitions(n)) {
            const auto tabs = standard_tableaux(shape);
            CHECK(static_cast<long long>(tabs.size()) == brute_force_standard(shape));
            CHECK(std::is_sorted(tabs.begin(), tabs.end()));
            CHECK(std::adjacent_find(tabs.begin(), tabs.end()) == tabs.end());
            for (const auto& t : tabs) CHECK(is_standard(t));
        }
}

TEST_CASE("hook length count agrees with enumeration") {
    for (int n = 0; n <= 7; ++n)
        for (const auto& p : partitions(n))
            CHECK(count_standard(p) == static_cast<long long>(standard_tableaux(p).size()));
}

TEST_CASE("sum of squared dimensions is 2^n n!") {
    long long factorial = 1;
    for (int n = 0; n <= 5; ++n) {
        if (n > 0) factorial *= n;
        long long total = 0;
        for (const auto& shape : double_partitions(n)) {
            const auto d = static_cast<long long>(standard_tableaux(shape).size());
            total += d * d;
        }
        CHECK(total == (1LL << n) * factorial);
    }
}

TEST_CASE("embedding into the rectangle is a bijection") {
    for (int n = 0; n <= 3; ++n) {
        const int m = n + 1, r1 = n + 1;
        const Partition rect(std::vector<int>(static_cast<std::size_t>(r1), m));
        std::set<Partition> image;
        for (const auto& shape : double_partitions(n)) {
            const Partition mu = embed_double(shape, m, r1);
            CHECK(mu.size() == n + m * r1);
            CHECK(split_embedded(mu, m, r1) == shape);
            image.insert(mu);
        }
        CHECK(image.size() == double_partitions(n).size());
        std::set<Partition> containing;
        for (const auto& mu : partitions(n + m * r1))
            if (rect.contained_in(mu)) containing.insert(mu);
        CHECK(image == containing);
    }
    CHECK(embed_double({Partition{1}, Partition{2}}, 3, 2) == Partition{4, 3, 2});
    CHECK_THROWS_AS(embed_double({Partition{1, 1, 1}, Partition{}}, 2, 2), Error);
    CHECK_THROWS_AS(embed_double({Partition{}, Partition{3}}, 2, 2), Error);
}

TEST_CASE("one-box successors match containment") {
    for (int n = 0; n <= 3; ++n)
        for (const auto& shape : double_partitions(n)) {
            const auto succ = one_box_successors(shape);
            std::set<DoublePartition> expected;
            for (const auto& bigger : double_partitions(n + 1))
                if (shape.contained_in(bigger)) expected.insert(bigger);
            CHECK(std::set<DoublePartition>(succ.begin(), succ.end()) == expected);
            CHECK(succ.size() == expected.size());
            for (const auto& s : succ) {
                const auto pred = one_box_predecessors(s);
                CHECK(std::find(pred.begin(), pred.end(), shape) != pred.end());
            }
        }
}

TEST_CASE("adjacent transpositions") {
    for (int n = 2; n <= 5; ++n)
        for (const auto& shape : double_partitions(n))
            for (const auto& t : standard_tableaux(shape))
                for (std::size_t i = 1; i < t.size(); ++i) {
                    const auto s = apply_transposition(t, i);
                    if (!s) {
                        const Box& a = t.box(i);
                        const Box& b = t.box(i + 1);
                        CHECK(a.component == b.component);
                        CHECK((a.row == b.row || a.col == b.col));
                        continue;
                    }
                    CHECK(is_standard(*s));
                    const auto back = apply_transposition(*s, i);
                    REQUIRE(back.has_value());
                    CHECK(*back == t);
                }
}

TEST_CASE("axial parameter") {
    const auto p = ParameterPoint::make(Scalar(2), Scalar(3), 4);
    const DoublePartition row{Partition{2}, Partition{}};
    CHECK(axial_parameter(standard_tableaux(row).front(), 1, p) == 2);
    const DoublePartition col{Partition{1, 1}, Partition{}};
    CHECK(axial_parameter(standard_tableaux(col).front(), 1, p) == Scalar(1, 2));
    const auto mixed = standard_tableaux(DoublePartition{Partition{1}, Partition{1}});
    REQUIRE(mixed.size() == 2);
    // entry 1 in the first component, entry 2 in the second: -q^0 / Q
    CHECK(axial_parameter(mixed[0], 1, p) == Scalar(-1, 3));
    CHECK(axial_parameter(mixed[1], 1, p) == -3);
}

TEST_CASE("specialized axial parameters are absolute content ratios") {
    for (const Scalar& q : {Scalar(2), Scalar(1, 3), Scalar(5, 4), Scalar(3, 7), Scalar(7, 2)})
        for (int n = 1; n <= 3; ++n) {
            const int m = n + 1, r1 = n + 1;
            const auto point = specialized_point(q, static_cast<std::size_t>(m), static_cast<std::size_t>(r1));
            for (const auto& shape : double_partitions(n))
                for (const auto& t : standard_tableaux(shape))
                    for (std::size_t i = 1; i < t.size(); ++i) {
                        const int d = embed_box(t.box(i + 1), m, r1).content() - embed_box(t.box(i), m, r1).content();
                        CHECK(axial_parameter(t, i, point) == power(q, d));
                    }
        }
}

TEST_CASE("box statistics") {
    const auto t = standard_tableaux(DoublePartition{Partition{2, 1}, Partition{1}}).back();
    for (std::size_t e = 1; e <= t.size(); ++e) {
        const auto s = box_stat(t, e);
        CHECK(s.content == t.box(e).col - t.box(e).row);
        CHECK(s.row == t.box(e).row);
        CHECK(s.component == t.box(e).component);
    }
    CHECK_THROWS_AS(t.box(0), Error);
    CHECK_THROWS_AS(t.box(5), Error);
    CHECK(embed_box({Component::second, 2, 1}, 3, 4).row == 6);
    CHECK(embed_box({Component::first, 1, 2}, 3, 4).col == 5);
}

TEST_CASE("text encoding round-trips") {
    for (int n = 0; n <= 4; ++n)
        for (const auto& shape : double_partitions(n)) CHECK(parse_double(format_double(shape)) == shape);
    CHECK(format_double({Partition{2, 1}, Partition{}}) == "[2,1]|[]");
    CHECK(parse_partition(" [3, 1] ") == Partition{3, 1});
    CHECK(parse_partition("[]").empty());
    CHECK_THROWS_AS(parse_partition("[1,2]"), Error);
    CHECK_THROWS_AS(parse_partition("3,1"), Error);
    CHECK_THROWS_AS(parse_partition("[a]"), Error);
    CHECK_THROWS_AS(parse_double("[1]"), Error);
}

}

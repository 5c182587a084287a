#include <doctest.h>

#include "hecke/traces.hpp"

#include <random>

using namespace hecke;

namespace {

HeckeElement word(const std::string& text, int n) { return HeckeElement(parse_word(text, n)); }

}  // namespace

TEST_SUITE("traces") {

TEST_CASE("one-strand weights and trace parameters") {
    const auto p = ParameterPoint::make(Scalar(2), Scalar(5), 2);
    const auto table = weight_table(1, 1, 1, p);
    REQUIRE(table.entries.size() == 2);
    CHECK(table.entries[0].shape == DoublePartition{Partition{1}, Partition{}});
    CHECK(table.entries[0].weight == Scalar(11, 18));
    CHECK(table.entries[1].weight == Scalar(7, 18));
    CHECK(table.z == Scalar(4, 3));
    CHECK(table.y == Scalar(8, 3));
    CHECK(table.normalization() == 1);
    const auto mp = markov_params(1, 1, p);
    CHECK(mp.z == table.z);
    CHECK(mp.y == table.y);
}

TEST_CASE("tables are normalized and both weight forms agree") {
    for (const auto& p : admissible_points(4, 3, 5, 21, 3)) {
        for (int n = 0; n <= 4; ++n)
            for (const auto& [r1, r2] : {std::pair{3, 5}, std::pair{5, 5}, std::pair{2, 2}}) {
                const auto table = weight_table(n, r1, r2, p);
                CHECK(table.normalization() == 1);
                for (const auto& e : table.entries) {
                    CHECK(e.weight == weight_B_schur_form(e.shape, r1, r2, p));
                    if (e.shape.first.length() > static_cast<std::size_t>(r1) ||
                        e.shape.second.length() > static_cast<std::size_t>(r2))
                        CHECK(e.weight == 0);
                }
            }
    }
    const auto p = ParameterPoint::make(Scalar(3), Scalar(2), 6);
    CHECK(weight_table(1, 2, 2, p).entries.size() == 2);
    CHECK(weight_table(2, 2, 2, p).entries.size() == 5);
    CHECK(weight_table(3, 2, 2, p).entries.size() == 10);
    CHECK_THROWS_AS(weight_table(2, 0, 2, p), Error);
}

TEST_CASE("weights branch along one-box successors") {
    const auto p = ParameterPoint::make(Scalar(5, 3), Scalar(-7, 2), 10);
    for (int n = 0; n <= 3; ++n)
        for (const auto& shape : double_partitions(n)) {
            Scalar next = 0;
            for (const auto& s : one_box_successors(shape)) next += weight_B(s, 4, 3, p);
            CHECK(weight_B(shape, 4, 3, p) == next);
        }
}

TEST_CASE("trace values on generators") {
    const auto p = ParameterPoint::make(Scalar(2), Scalar(5), 4);
    const auto mp = markov_params(2, 1, p);
    const MarkovTraceB tr(2, 2, 1, p);
    CHECK(tr(HeckeElement::identity(2)) == 1);
    CHECK(tr(word("t", 2)) == mp.y);
    CHECK(tr(word("g1", 2)) == mp.z);
    CHECK(tr(word("t'1", 2)) == mp.y);
    CHECK(tr(word("t t'1", 2)) == mp.y * mp.y);
    CHECK(tr(word("g1 g1", 2)) == (p.q() - 1) * mp.z + p.q());
    CHECK(markov_trace_B(word("g1", 2), 2, 2, 1, p) == mp.z);

    // H_0 is the ground field
    const MarkovTraceB empty(0, 2, 1, p);
    CHECK(empty(Scalar(3) * HeckeElement::identity(0)) == 3);
}

TEST_CASE("Markov properties on random words") {
    std::mt19937_64 rng(12);
    WordAlphabet alphabet;
    alphabet.t_prime = true;
    for (const auto& p : admissible_points(4, 4, 3, 5, 2)) {
        const auto mp = markov_params(4, 3, p);
        for (int n = 1; n <= 3; ++n) {
            const MarkovTraceB small(n, 4, 3, p), big(n + 1, 4, 3, p);
            for (int k = 0; k < 8; ++k) {
                const HeckeWord w = random_word(n, 5, rng, alphabet);
                const HeckeElement lifted = HeckeWord(w.letters(), n + 1);
                const Scalar base = small(w);
                CHECK(big(lifted) == base);
                CHECK(big(lifted * HeckeElement(HeckeWord({Letter::g(n)}, n + 1))) == mp.z * base);
                CHECK(big(lifted * HeckeElement(HeckeWord({Letter::t_prime(n)}, n + 1))) == mp.y * base);
                // tr(ab) = tr(ba)
                const HeckeElement b = random_word(n + 1, 4, rng, alphabet);
                CHECK(big(lifted * b) == big(b * lifted));
            }
        }
    }
}

TEST_CASE("type-A trace") {
    const Scalar q(3, 2);
    for (int r = 2; r <= 4; ++r) {
        const TypeAMarkovTrace tr2(2, r, q);
        CHECK(tr2(HeckeElement::identity(2)) == 1);
        CHECK(tr2(word("g1", 2)) == tr2.z());
        CHECK(tr2.z() == power(q, r) * (1 - q) / (1 - power(q, r)));
        const TypeAMarkovTrace tr3(3, r, q);
        CHECK(tr3(word("g1 g2", 3)) == tr2.z() * tr2.z());
        CHECK(tr3(word("g2 g1 g2", 3)) == tr3(word("g1 g2 g1", 3)));
        CHECK(typeA_markov_trace(word("g2", 3), 3, r, q) == tr2.z());
    }
    CHECK_THROWS_AS(TypeAMarkovTrace(2, 0, q), Error);
}

TEST_CASE("type-D weights") {
    const Scalar q(2);
    const auto split = weight_D({Partition{1}, Partition{1}}, 3, 3, q);
    REQUIRE(split.size() == 2);
    CHECK(split[0].label == "[1]|[1]_1");
    CHECK(split[1].label == "[1]|[1]_2");
    CHECK(split[0].weight == split[1].weight);
    CHECK(split[0].dimension == 1);

    const auto p = typeD_point(q, 6);
    const auto merged = weight_D({Partition{2}, Partition{}}, 3, 3, q);
    REQUIRE(merged.size() == 1);
    CHECK(merged[0].split == 0);
    CHECK(merged[0].weight == weight_B({Partition{2}, Partition{}}, 3, 3, p) + weight_B({Partition{}, Partition{2}}, 3, 3, p));
    CHECK(weight_D({Partition{}, Partition{2}}, 3, 3, q)[0].weight == merged[0].weight);

    for (int n = 1; n <= 4; ++n) {
        const auto table = typeD_weight_table(n, 3, 2, q);
        Scalar total = 0;
        for (const auto& w : table) total += w.weight * static_cast<long>(w.dimension);
        CHECK(total == 1);

        // each type-B module restricts to one merged class or two split halves
        const auto g = typeD_inclusion_matrix(n);
        REQUIRE(g.size() == table.size());
        const auto shapes = double_partitions(n);
        for (std::size_t j = 0; j < shapes.size(); ++j) {
            int hits = 0;
            std::size_t dim = 0;
            for (std::size_t i = 0; i < table.size(); ++i)
                if (g[i][j]) {
                    ++hits;
                    dim += table[i].dimension;
                }
            CHECK(hits == (shapes[j].first == shapes[j].second ? 2 : 1));
            CHECK(dim == standard_tableaux(shapes[j]).size());
        }
    }
}

TEST_CASE("type-D trace") {
    const Scalar q(3);
    const MarkovTraceD tr(3, 3, 2, q);
    const auto& inner = tr.typeB();
    CHECK(tr(word("u", 3)) == inner(word("t g1 t", 3)));
    CHECK(tr(word("u g2 u", 3)) == tr(word("g2 u g2", 3)));
    CHECK(tr(HeckeElement::identity(3)) == 1);
    CHECK_THROWS_AS(tr(word("t", 3)), Error);
    CHECK_THROWS_AS(tr(word("t'1", 3)), Error);
    CHECK_THROWS_AS(require_typeD_alphabet(word("g1 t", 2)), Error);
    CHECK_NOTHROW(require_typeD_alphabet(word("u G1 g2", 3)));

    // g_n scales by z on the type-D alphabet as well
    const auto mp = markov_params(3, 2, typeD_point(q, 6));
    CHECK(tr(word("u g1 g2", 3)) == mp.z * markov_trace_D(word("u g1", 2), 2, 3, 2, q));
}

}

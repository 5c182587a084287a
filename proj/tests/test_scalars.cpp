#include <doctest.h>

#include "hecke/scalars.hpp"

#include <random>

using namespace hecke;

TEST_SUITE("scalars") {

TEST_CASE("parse and print rationals") {
    CHECK(parse_rational("3/6") == Scalar(1, 2));
    CHECK(parse_rational("-4") == Scalar(-4));
    CHECK(parse_rational(" -7/14 ") == Scalar(-1, 2));
    CHECK_THROWS_AS(parse_rational("7/-14"), Error);
    CHECK(to_string(Scalar(6, 4)) == "3/2");
    CHECK(to_string(Scalar(-5)) == "-5");
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("abc"), Error);
    CHECK_THROWS_AS(parse_rational(""), Error);
    CHECK_THROWS_AS(parse_rational("1.5"), Error);
}

TEST_CASE("integer powers, including negative exponents") {
    CHECK(power(Scalar(2), 10) == 1024);
    CHECK(power(Scalar(2, 3), -2) == Scalar(9, 4));
    CHECK(power(Scalar(-3), 3) == -27);
    CHECK(power(Scalar(5), 0) == 1);
    CHECK_THROWS(power(Scalar(0), -1));
}

TEST_CASE("field axioms on random samples") {
    std::mt19937_64 rng(7);
    auto draw = [&] {
        const long num = static_cast<long>(rng() % 41) - 20;
        const long den = static_cast<long>(rng() % 15) + 1;
        return Scalar(num, den);
    };
    for (int k = 0; k < 200; ++k) {
        Scalar a = draw(), b = draw(), c = draw();
        a.canonicalize();
        b.canonicalize();
        c.canonicalize();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (a != 0) CHECK(a * (1 / a) == 1);
    }
}

TEST_CASE("parameter point guards") {
    const Scalar q(2);
    CHECK_NOTHROW(ParameterPoint::make(q, Scalar(5), 4));
    CHECK_THROWS_AS(ParameterPoint::make(Scalar(1), Scalar(5), 4), InadmissiblePoint);
    CHECK_THROWS_AS(ParameterPoint::make(Scalar(-2), Scalar(5), 4), InadmissiblePoint);
    CHECK_THROWS_AS(ParameterPoint::make(q, Scalar(0), 4), InadmissiblePoint);
    CHECK_THROWS_AS(ParameterPoint::make(q, Scalar(-1), 0), InadmissiblePoint);
    CHECK_THROWS_AS(ParameterPoint::make(q, Scalar(-1, 8), 3), InadmissiblePoint);
    // outside the guard window the same Q is allowed
    CHECK_NOTHROW(ParameterPoint::make(q, Scalar(-1, 8), 2));

    try {
        ParameterPoint::make(q, Scalar(-4), 4);
        FAIL("expected rejection");
    } catch (const InadmissiblePoint& e) {
        CHECK(std::string(e.what()).find("Q = -q^2 is excluded") != std::string::npos);
    }

    const auto p = ParameterPoint::make(q, Scalar(-16), 3);
    CHECK(p.avoids(-3, 3));
    CHECK_FALSE(p.avoids(0, 4));
    CHECK_THROWS_AS(p.require_avoids(-5, 5), InadmissiblePoint);
    CHECK(excluded_exponent(q, Scalar(-16), -10, 10) == 4);
    CHECK_FALSE(excluded_exponent(q, Scalar(16), -10, 10).has_value());
}

TEST_CASE("sampled points pass an independent scan") {
    for (std::uint64_t seed : {1u, 2u, 99u}) {
        const auto points = admissible_points(4, 5, 5, seed, 6);
        REQUIRE(points.size() == 6);
        for (std::size_t i = 0; i < points.size(); ++i) {
            const auto& p = points[i];
            CHECK(p.q() > Scalar(1, 4));
            CHECK(p.q() < 4);
            CHECK(p.q() != 1);
            CHECK(p.guard_bound() >= 10);
            Scalar qs = 1;
            for (int s = 0; s <= p.guard_bound(); ++s, qs *= p.q()) {
                CHECK(p.Q() + qs != 0);
                CHECK(p.Q() + 1 / qs != 0);
            }
            for (std::size_t j = i + 1; j < points.size(); ++j) CHECK_FALSE(points[i] == points[j]);
        }
        CHECK(admissible_points(4, 5, 5, seed, 6) == points);
    }
}

TEST_CASE("specialized point is Q = -q^(r1+m)") {
    const auto p = specialized_point(Scalar(2), 2, 2);
    CHECK(p.Q() == -16);
    CHECK(p.avoids(-3, 3));
    CHECK_THROWS_AS(specialized_point(Scalar(1), 2, 2), InadmissiblePoint);
}

TEST_CASE("matrix arithmetic") {
    std::mt19937_64 rng(3);
    auto random_matrix = [&](std::size_t r, std::size_t c) {
        Matrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) {
                m(i, j) = Scalar(static_cast<long>(rng() % 7) - 3, static_cast<long>(1 + rng() % 3));
                m(i, j).canonicalize();
            }
        return m;
    };
    for (int k = 0; k < 20; ++k) {
        const Matrix a = random_matrix(3, 4), b = random_matrix(4, 2), c = random_matrix(2, 3), d = random_matrix(4, 2);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + d) == a * b + a * d);
        CHECK((a * b - a * b).is_zero());
    }
    Matrix m = Matrix::identity(3);
    CHECK(m.trace() == 3);
    CHECK(m.is_diagonal());
    m(0, 2) = 5;
    CHECK_FALSE(m.is_diagonal());
    CHECK(m.rank() == 3);
    CHECK_THROWS(Matrix(2, 3) * Matrix(2, 3));
}

TEST_CASE("rank by elimination") {
    Matrix m(3, 3);
    int v = 1;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m(i, j) = v++;
    CHECK(m.rank() == 2);
    CHECK(Matrix(4, 2).rank() == 0);
    Matrix tall(4, 2);
    tall(3, 1) = Scalar(1, 3);
    tall(1, 0) = 2;
    CHECK(tall.rank() == 2);
}

}

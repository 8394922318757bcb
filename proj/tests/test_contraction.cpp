#include <catch2/catch_amalgamated.hpp>

#include "fcon/contraction.hpp"

using namespace fcon;

namespace {
GaussianRational g(long num, long den = 1) { return GaussianRational(ratFrom(num, den)); }
} // namespace

TEST_CASE("isContraction examples") {
    const Matrix rot(2, 2, {g(3, 5), g(4, 5), g(-4, 5), g(3, 5)});
    CHECK(isContraction(rot));
    CHECK_FALSE(isContraction(Matrix(1, 1, {g(2)})));
    // operator norm exactly 1: eigenvalues of A^dag A are 0 and 1
    const Matrix half(2, 2, {g(1, 2), g(1, 2), g(1, 2), g(1, 2)});
    CHECK(isContraction(half));
}

TEST_CASE("ConMorphism certifies at construction") {
    CHECK_THROWS_AS(ConMorphism(Matrix(1, 1, {g(2)})), NotContraction);
    const ConMorphism c(Matrix(1, 1, {g(1, 2)}));
    CHECK(c.certificate().psd);
    CHECK_FALSE(ConMorphism::tryFrom(Matrix(1, 1, {g(3)})).has_value());
    // structure ops preserve the certificate
    const ConMorphism d = conDsum(c, conIdentity(1));
    CHECK(d.matrix() == Matrix(2, 2, {g(1, 2), g(0), g(0), g(1)}));
    CHECK(conTensor(c, c).matrix() == Matrix(1, 1, {g(1, 4)}));
}

TEST_CASE("predicate examples") {
    const Matrix col(2, 1, {g(1), g(0)});
    CHECK(isDaggerMono(col));
    CHECK(isMono(col));
    CHECK_FALSE(isEpi(col));

    const Matrix row(1, 2, {g(1), g(1)});
    CHECK(isEpi(row));
    CHECK_FALSE(isDaggerEpi(row)); // A A^dag = [[2]]

    CHECK(isDaggerMono(Matrix::identity(3)));
    CHECK(isDaggerEpi(Matrix::identity(3)));
    CHECK(isMono(Matrix::identity(3)));
    CHECK(isEpi(Matrix::identity(3)));
}

TEST_CASE("daggerFiniteCheck") {
    const Matrix rot(2, 2, {g(3, 5), g(4, 5), g(-4, 5), g(3, 5)});
    CHECK(daggerFiniteCheck(rot));
    // vacuous case: f^dag f = diag(1, 0) != I
    const Matrix shiftish(2, 2, {g(0), g(0), g(1), g(0)});
    CHECK(daggerFiniteCheck(shiftish));
    CHECK_THROWS_AS(daggerFiniteCheck(Matrix(1, 2, {g(1), g(0)})), NotSquare);
}

TEST_CASE("dagger finiteness sweep over generated exact isometries") {
    Rng rng(53);
    for (int t = 0; t < 1000; ++t) {
        const std::size_t n = 1 + rng.below(4);
        const Matrix u = randomUnitary(rng, n);
        REQUIRE(isDaggerMono(u));
        CHECK(daggerFiniteCheck(u));
        CHECK(u * dagger(u) == Matrix::identity(n));
    }
}

TEST_CASE("positivityWitness") {
    Rng rng(59);
    const Matrix x(1, 2, {g(1), g(0)});
    SECTION("x = y gives identity") {
        const auto f = positivityWitness(x, x);
        REQUIRE(f.has_value());
        CHECK(*f == Matrix::identity(1));
    }
    SECTION("unitary translate is recovered") {
        for (int t = 0; t < 100; ++t) {
            const std::size_t a = 2 + rng.below(2), b = 1 + rng.below(2);
            Matrix e = randomMatrix(rng, b, a);
            if (!isEpi(e)) continue;
            const Matrix u = randomUnitary(rng, b);
            const auto f = positivityWitness(e, u * e);
            REQUIRE(f.has_value());
            CHECK(*f * e == u * e);
            CHECK(rank(*f) == b); // isomorphism
        }
    }
    SECTION("different Gram matrices give none") {
        const Matrix y(1, 2, {g(2), g(0)});
        CHECK_FALSE(positivityWitness(x, y).has_value());
    }
    SECTION("non-epi input is rejected") {
        CHECK_THROWS_AS(positivityWitness(Matrix::zero(2, 2), Matrix::zero(2, 2)), NotEpi);
    }
}

TEST_CASE("scaleToContraction always certifies") {
    Rng rng(61);
    for (int t = 0; t < 200; ++t) {
        const Matrix m = randomMatrix(rng, 1 + rng.below(3), 1 + rng.below(3), 6, 3);
        const auto [scaled, c] = scaleToContraction(m);
        CHECK(isContraction(scaled));
        CHECK(c > 0);
        CHECK(c <= 1);
    }
}

TEST_CASE("contraction agrees with sampled inner products") {
    // |<Ax, y>| <= 1 for unit x, y iff A is a contraction; exact version:
    // for rational x, y with x^dag x <= 1 and y^dag y <= 1, |<Ax,y>|^2 <= 1.
    Rng rng(67);
    const Matrix half(2, 2, {g(1, 2), g(1, 2), g(1, 2), g(1, 2)});
    for (int t = 0; t < 200; ++t) {
        Matrix x = randomMatrix(rng, 2, 1);
        Matrix y = randomMatrix(rng, 2, 1);
        const Rational nx = frobeniusSq(x), ny = frobeniusSq(y);
        if (nx == 0 || ny == 0) continue;
        // scale to the unit sphere's inside exactly
        x = scale(GaussianRational(Rational(1) / sqrtUpperBound(nx)), x);
        y = scale(GaussianRational(Rational(1) / sqrtUpperBound(ny)), y);
        const GaussianRational ip = innerProduct(y, half * x);
        CHECK(normSq(ip) <= 1);
    }
}

#include <catch2/catch_amalgamated.hpp>

#include "fcon/fraction.hpp"

using namespace fcon;

namespace {
GaussianRational g(long num, long den = 1) { return GaussianRational(ratFrom(num, den)); }

Fraction frac(const Matrix& m, const GaussianRational& d) {
    return Fraction(ConMorphism(m), DiskScalar(d));
}

Fraction randomFraction(Rng& rng, std::size_t rows, std::size_t cols) {
    GaussianRational d = rng.gaussian(2, 3);
    while (!inDisk(d) || d.isZero()) d = rng.gaussian(2, 3);
    return Fraction(randomContraction(rng, rows, cols), DiskScalar(d));
}
} // namespace

TEST_CASE("fracEquiv examples") {
    CHECK(fracEquiv(frac(Matrix(1, 1, {g(1, 2)}), g(1, 2)), frac(Matrix::identity(1), g(1))));
    CHECK(fracEquiv(frac(Matrix::zero(2, 2), g(1, 3)), frac(Matrix::zero(2, 2), g(2, 3))));
    CHECK_FALSE(fracEquiv(frac(Matrix(1, 1, {g(1, 2)}), g(1)), frac(Matrix(1, 1, {g(1, 3)}), g(1))));
    CHECK_THROWS_AS(fracEquiv(frac(Matrix::zero(1, 1), g(1)), frac(Matrix::zero(2, 1), g(1))),
                    DimensionMismatch);
}

TEST_CASE("fracEquiv is an equivalence relation") {
    Rng rng(97);
    for (int t = 0; t < 1000; ++t) {
        const std::size_t r = 1 + rng.below(2), c = 1 + rng.below(2);
        const Fraction p = randomFraction(rng, r, c), q = randomFraction(rng, r, c),
                       s = randomFraction(rng, r, c);
        CHECK(fracEquiv(p, p));
        if (fracEquiv(p, q)) CHECK(fracEquiv(q, p));
        if (fracEquiv(p, q) && fracEquiv(q, s)) CHECK(fracEquiv(p, s));
        // scaled representatives are always equivalent
        const GaussianRational lam = g(1, 2);
        const Fraction scaled(ConMorphism(scale(lam, p.numerator().matrix())),
                              DiskScalar(lam * p.denominator().value()));
        CHECK(fracEquiv(p, scaled));
    }
}

TEST_CASE("dsum of fractions follows the localisation formula") {
    // (1/2)/(1/2) (+) (1/3)/(1/3) ~ diag(1/6,1/6)/(1/6) ~ embed(identity(2))
    const Fraction p = frac(Matrix(1, 1, {g(1, 2)}), g(1, 2));
    const Fraction q = frac(Matrix(1, 1, {g(1, 3)}), g(1, 3));
    const Fraction d = fracDsum(p, q);
    CHECK(d.numerator().matrix() == Matrix::diagonal({g(1, 6), g(1, 6)}));
    CHECK(d.denominator().value() == g(1, 6));
    CHECK(fracEquiv(d, embed(conIdentity(2))));
}

TEST_CASE("dagger and tensor are involutive and functorial") {
    Rng rng(101);
    for (int t = 0; t < 200; ++t) {
        const Fraction p = randomFraction(rng, 1 + rng.below(2), 1 + rng.below(2));
        CHECK(fracEquiv(fracDagger(fracDagger(p)), p));
    }
    for (int t = 0; t < 200; ++t) {
        const ConMorphism f = randomContraction(rng, 2, 2), h = randomContraction(rng, 2, 2);
        CHECK(fracEquiv(fracTensor(embed(f), embed(h)), embed(conTensor(f, h))));
        CHECK(fracEquiv(fracCompose(embed(f), embed(h)), embed(conCompose(f, h))));
        CHECK(fracEquiv(fracDagger(embed(f)), embed(conDagger(f))));
    }
}

TEST_CASE("embed is faithful") {
    Rng rng(103);
    CHECK(fracEquiv(embed(conZero(2, 2)), frac(Matrix::zero(2, 2), g(1))));
    for (int t = 0; t < 300; ++t) {
        const ConMorphism f = randomContraction(rng, 2, 2), h = randomContraction(rng, 2, 2);
        CHECK(fracEquiv(embed(f), embed(h)) == (f.matrix() == h.matrix()));
    }
    // embedding the identity acts as the unit of composition
    for (int t = 0; t < 100; ++t) {
        const Fraction p = randomFraction(rng, 2, 2);
        CHECK(fracEquiv(fracCompose(embed(conIdentity(2)), p), p));
        CHECK(fracEquiv(fracCompose(p, embed(conIdentity(2))), p));
    }
}

TEST_CASE("operations are congruences for fracEquiv") {
    Rng rng(107);
    for (int t = 0; t < 1000; ++t) {
        const Fraction p = randomFraction(rng, 2, 2);
        const Fraction q = randomFraction(rng, 2, 2);
        // equivalent representative of p
        GaussianRational lam = rng.gaussian(2, 3);
        while (lam.isZero() || !inDisk(lam)) lam = rng.gaussian(2, 3);
        const Fraction p2(ConMorphism(scale(lam, p.numerator().matrix())),
                          DiskScalar(lam * p.denominator().value()));
        REQUIRE(fracEquiv(p, p2));
        CHECK(fracEquiv(fracDagger(p), fracDagger(p2)));
        CHECK(fracEquiv(fracCompose(p, q), fracCompose(p2, q)));
        CHECK(fracEquiv(fracTensor(p, q), fracTensor(p2, q)));
        CHECK(fracEquiv(fracDsum(p, q), fracDsum(p2, q)));
    }
}

TEST_CASE("nonzero scalars become invertible") {
    Rng rng(109);
    for (int t = 0; t < 200; ++t) {
        GaussianRational a = rng.gaussian(2, 3);
        while (a.isZero() || !inDisk(a)) a = rng.gaussian(2, 3);
        const Fraction aFrac = embed(ConMorphism(Matrix::scalar(a)));
        const Fraction aInv = frac(Matrix::identity(1), a);
        CHECK(fracEquiv(fracCompose(aFrac, aInv), embed(conIdentity(1))));
        CHECK(fracEquiv(fracCompose(aInv, aFrac), embed(conIdentity(1))));
    }
}

TEST_CASE("resolve and toFraction") {
    SECTION("column-norm example [[3]]") {
        const Fraction f = toFraction({Matrix(1, 1, {g(3)})});
        CHECK(f.denominator().value().re <= ratFrom(1, 3));
        CHECK(resolve(f) == FieldMorphism{Matrix(1, 1, {g(3)})});
    }
    SECTION("certified contractions embed with denominator one") {
        const Matrix m(2, 2, {g(1, 2), g(0), g(0), g(1, 2)});
        const Fraction f = toFraction({m});
        CHECK(f.denominator().value() == g(1));
        CHECK(f.numerator().matrix() == m);
    }
    SECTION("round trip on random matrices") {
        Rng rng(113);
        for (int t = 0; t < 1000; ++t) {
            const Matrix m = randomMatrix(rng, 1 + rng.below(3), 1 + rng.below(3), 6, 3);
            const FieldMorphism fm{m};
            CHECK(resolve(toFraction(fm)) == fm);
        }
    }
    SECTION("resolve respects the four operations") {
        Rng rng(127);
        for (int t = 0; t < 200; ++t) {
            const Fraction p = randomFraction(rng, 2, 2), q = randomFraction(rng, 2, 2);
            CHECK(resolve(fracCompose(p, q)).matrix == resolve(p).matrix * resolve(q).matrix);
            CHECK(resolve(fracTensor(p, q)).matrix
                  == tensor(resolve(p).matrix, resolve(q).matrix));
            CHECK(resolve(fracDsum(p, q)).matrix == dsum(resolve(p).matrix, resolve(q).matrix));
            CHECK(resolve(fracDagger(p)).matrix == dagger(resolve(p).matrix));
        }
    }
}

TEST_CASE("comesFromD") {
    CHECK(comesFromD({Matrix(1, 1, {g(1, 2)})}));
    CHECK_FALSE(comesFromD({Matrix(1, 1, {g(2)})}));
    CHECK(comesFromD({Matrix(2, 2, {g(1, 2), g(1, 2), g(1, 2), g(1, 2)})}));
}

TEST_CASE("scalar field of resolved morphisms is Q(i)") {
    Rng rng(131);
    for (int t = 0; t < 300; ++t) {
        const GaussianRational a = rng.gaussian(6, 4);
        const FieldMorphism m{Matrix::scalar(a)};
        CHECK(resolve(toFraction(m)) == m);
    }
}

TEST_CASE("zero object is terminal and initial among resolved morphisms") {
    // unique maps to and from dimension zero
    const FieldMorphism toO{Matrix::zero(0, 3)};
    const FieldMorphism fromO{Matrix::zero(3, 0)};
    CHECK(toO.matrix.isZeroObjectMap());
    CHECK(fromO.matrix.isZeroObjectMap());
    CHECK(toFraction(toO).numerator().matrix() == Matrix::zero(0, 3));
    // any composite through O is the zero morphism
    CHECK(fromO.matrix * toO.matrix == Matrix::zero(3, 3));
}

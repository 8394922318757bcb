#include <catch2/catch_amalgamated.hpp>

#include "fcon/factor.hpp"

using namespace fcon;

namespace {
GaussianRational g(long num, long den = 1) { return GaussianRational(ratFrom(num, den)); }
GaussianRational gi(long re, long im) { return {Rational(re), Rational(im)}; }

bool near(const ApproxMatrix& a, const ApproxMatrix& b, unsigned bits) {
    return withinTolerance(a, b, bits);
}
bool nearIdentity(const ApproxMatrix& a, unsigned bits) {
    return deviationFromIdentity(a) <= BigReal::ulp(bits);
}
} // namespace

TEST_CASE("jacobi diagonalises exact Hermitian matrices") {
    Rng rng(71);
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = 1 + rng.below(4);
        Matrix m = randomMatrix(rng, n, n);
        m = m + dagger(m);
        const ApproxMatrix h = ApproxMatrix::fromExact(m, 48);
        const JacobiResult eig = jacobiHermitian(h, 48);
        CHECK(nearIdentity(dagger(eig.vectors) * eig.vectors, 40));
        ApproxMatrix d(n, n, 48);
        for (std::size_t i = 0; i < n; ++i) d(i, i) = BigComplex(eig.values[i]);
        CHECK(near(eig.vectors * d * dagger(eig.vectors), h, 40));
    }
}

TEST_CASE("matrixSqrtPSD examples") {
    CHECK(nearIdentity(matrixSqrtPSD(Matrix::identity(3), 40), 40));

    const ApproxMatrix d = matrixSqrtPSD(Matrix::diagonal({g(4), g(9)}), 40);
    CHECK(near(d, ApproxMatrix::fromExact(Matrix::diagonal({g(2), g(3)}), 40), 38));

    // [[2,1],[1,2]]: eigenvalues 1 and 3; the square of the result must
    // reproduce the input within tolerance, and the root must be Hermitian.
    const Matrix p(2, 2, {g(2), g(1), g(1), g(2)});
    const ApproxMatrix r = matrixSqrtPSD(p, 44);
    CHECK(near(r, dagger(r), 42));
    CHECK(near(r * r, ApproxMatrix::fromExact(p, 44), 40));

    CHECK_THROWS_AS(matrixSqrtPSD(Matrix::diagonal({g(-1)}), 40), NotPSD);
    CHECK_THROWS_AS(matrixSqrtPSD(Matrix(1, 2, {g(1), g(1)}), 40), NotHermitian);
}

TEST_CASE("matrixSqrtPSD on singular PSD matrices") {
    Rng rng(73);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = 1 + rng.below(3);
        const Matrix b = randomMatrix(rng, n, 1 + rng.below(n));
        const Matrix p = b * dagger(b); // usually singular PSD
        const ApproxMatrix r = matrixSqrtPSD(p, 44);
        CHECK(near(r * r, ApproxMatrix::fromExact(p, 44), 38));
        CHECK(near(r, dagger(r), 40));
    }
}

TEST_CASE("daggerKernel examples") {
    CHECK(daggerKernel(Matrix::identity(3), 40).cols() == 0);

    const ApproxMatrix full = daggerKernel(Matrix::zero(1, 2), 40);
    CHECK(full.cols() == 2);
    CHECK(nearIdentity(dagger(full) * full, 38));

    const ApproxMatrix k = daggerKernel(Matrix(1, 2, {g(1), g(-1)}), 40);
    REQUIRE(k.cols() == 1);
    // single column ~ (1/sqrt2)(1,1)^T up to phase; check normalisation and membership
    CHECK(nearIdentity(dagger(k) * k, 38));
    const ApproxMatrix img = ApproxMatrix::fromExact(Matrix(1, 2, {g(1), g(-1)}), 40) * k;
    CHECK(maxAbsEntry(img) <= BigReal::ulp(38));
    const BigReal ratio = k(0, 0).re - k(1, 0).re; // components equal
    CHECK(ratio.abs() <= BigReal::ulp(38));
}

TEST_CASE("daggerEqualiser examples and universal property") {
    const Matrix f = Matrix::identity(2);
    SECTION("equal morphisms have identity-sized equaliser") {
        const ApproxMatrix e = daggerEqualiser(f, f, 40);
        CHECK(e.cols() == 2);
        CHECK(nearIdentity(dagger(e) * e, 38));
    }
    SECTION("diag(1,-1) against identity") {
        const Matrix gmat = Matrix::diagonal({g(1), g(-1)});
        const ApproxMatrix e = daggerEqualiser(f, gmat, 40);
        REQUIRE(e.cols() == 1);
        // e ~ (1, 0)^T
        CHECK((e(0, 0).re - BigReal::fromInt(1)).abs() <= BigReal::ulp(38));
        CHECK(absUpper(e(1, 0)) <= BigReal::ulp(38));
    }
    SECTION("disjoint scalars equalise through the zero object") {
        const ApproxMatrix e = daggerEqualiser(Matrix(1, 1, {g(1)}), Matrix(1, 1, {g(-1)}), 40);
        CHECK(e.cols() == 0);
    }
    SECTION("universal property on sampled cones") {
        Rng rng(79);
        const Matrix gmat = Matrix::diagonal({g(1), g(1), g(-1)});
        const Matrix id3 = Matrix::identity(3);
        const ApproxMatrix e = daggerEqualiser(id3, gmat, 44);
        REQUIRE(e.cols() == 2);
        for (int t = 0; t < 100; ++t) {
            // any h with f h = g h factors as h = e (e^dag h)
            Matrix h = randomMatrix(rng, 3, 2);
            for (std::size_t j = 0; j < h.cols(); ++j) h(2, j) = g(0); // force into the equaliser
            const ApproxMatrix ha = ApproxMatrix::fromExact(h, 44);
            CHECK(near(e * (dagger(e) * ha), ha, 40));
        }
    }
}

TEST_CASE("epiDaggerMonoFactorise") {
    SECTION("dagger mono factors as itself") {
        const Matrix m(2, 1, {g(3, 5), g(4, 5)});
        const EpiMonoFactorisation f = epiDaggerMonoFactorise(m, 40);
        CHECK(f.innerDim == 1);
        CHECK(near(f.mono * f.epi, ApproxMatrix::fromExact(m, 40), 38));
        CHECK(nearIdentity(dagger(f.mono) * f.mono, 38));
    }
    SECTION("zero factors through the zero object") {
        const EpiMonoFactorisation f = epiDaggerMonoFactorise(Matrix::zero(2, 2), 40);
        CHECK(f.innerDim == 0);
    }
    SECTION("(1,1)^T gives m ~ (1/sqrt2)(1,1)^T and e ~ [sqrt2]") {
        const Matrix a(2, 1, {g(1), g(1)});
        const EpiMonoFactorisation f = epiDaggerMonoFactorise(a, 40);
        REQUIRE(f.innerDim == 1);
        const BigReal sqrt2 = sqrtPos(Rational(2), 48);
        CHECK((f.epi(0, 0).re - sqrt2).abs() <= BigReal::ulp(36));
        CHECK(near(f.mono * f.epi, ApproxMatrix::fromExact(a, 40), 38));
    }
    SECTION("random recomposition and rank") {
        Rng rng(83);
        for (int t = 0; t < 60; ++t) {
            const Matrix a = randomMatrix(rng, 1 + rng.below(3), 1 + rng.below(3));
            const EpiMonoFactorisation f = epiDaggerMonoFactorise(a, 44);
            CHECK(f.innerDim == rank(a));
            CHECK(near(f.mono * f.epi, ApproxMatrix::fromExact(a, 44), 40));
            if (f.innerDim > 0) CHECK(nearIdentity(dagger(f.mono) * f.mono, 40));
        }
    }
}

TEST_CASE("orthonormalDecompose") {
    SECTION("empty system on dim 2") {
        const ApproxMatrix u = orthonormalDecompose({}, 2, 40);
        CHECK(nearIdentity(dagger(u) * u, 38));
        CHECK(nearIdentity(u * dagger(u), 38));
    }
    SECTION("standard basis gives the identity") {
        const Matrix e1(2, 1, {g(1), g(0)});
        const Matrix e2(2, 1, {g(0), g(1)});
        const ApproxMatrix u = orthonormalDecompose({e1, e2}, 2, 40);
        CHECK(nearIdentity(u, 38));
    }
    SECTION("Pythagorean vector completes to its orthogonal complement") {
        const Matrix v(2, 1, {g(3, 5), g(4, 5)});
        const ApproxMatrix u = orthonormalDecompose({v}, 2, 40);
        CHECK(nearIdentity(dagger(u) * u, 36));
        CHECK(nearIdentity(u * dagger(u), 36));
        // second row of u is the complement (-4/5, 3/5) up to sign
        const BigReal a = u(1, 0).re.abs(), b = u(1, 1).re.abs();
        CHECK((a - BigReal::fromRational(ratFrom(4, 5), 48)).abs() <= BigReal::ulp(34));
        CHECK((b - BigReal::fromRational(ratFrom(3, 5), 48)).abs() <= BigReal::ulp(34));
    }
    SECTION("non-orthonormal input is rejected") {
        const Matrix bad(2, 1, {g(1), g(1)});
        CHECK_THROWS_AS(orthonormalDecompose({bad}, 2, 40), NotOrthonormalSystem);
    }
}

TEST_CASE("halmosDilation examples") {
    SECTION("f = [[1/2]]") {
        const Dilation d = halmosDilation(ConMorphism(Matrix(1, 1, {g(1, 2)})), 40);
        CHECK(d.unitary.rows() == 2);
        // U ~ [[1/2, sqrt3/2],[sqrt3/2, -1/2]]
        const BigReal s32 = sqrtPos(ratFrom(3, 4), 48);
        CHECK((d.unitary(0, 0).re - BigReal::fromRational(ratFrom(1, 2), 48)).abs()
              <= BigReal::ulp(36));
        CHECK((d.unitary(0, 1).re - s32).abs() <= BigReal::ulp(36));
        CHECK((d.unitary(1, 0).re - s32).abs() <= BigReal::ulp(36));
        CHECK((d.unitary(1, 1).re + BigReal::fromRational(ratFrom(1, 2), 48)).abs()
              <= BigReal::ulp(36));
    }
    SECTION("f = [[0]] swaps the summands") {
        const Dilation d = halmosDilation(conZero(1, 1), 40);
        CHECK(near(d.unitary, ApproxMatrix::fromExact(Matrix(2, 2, {g(0), g(1), g(1), g(0)}), 40),
                   38));
    }
    SECTION("unitary f has vanishing defects") {
        const Matrix u(2, 2, {g(3, 5), g(4, 5), g(-4, 5), g(3, 5)});
        const Dilation d = halmosDilation(ConMorphism(u), 40);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                CHECK(absUpper(d.unitary(i, 2 + j)) <= BigReal::ulp(36));
    }
    SECTION("random contractions dilate to unitaries with e.m ~ f") {
        Rng rng(89);
        for (int t = 0; t < 40; ++t) {
            const ConMorphism f = randomContraction(rng, 1 + rng.below(3), 1 + rng.below(3));
            const Dilation d = halmosDilation(f, 44);
            CHECK(nearIdentity(dagger(d.unitary) * d.unitary, 35));
            CHECK(nearIdentity(d.unitary * dagger(d.unitary), 35));
            CHECK(near(d.epi * d.mono, ApproxMatrix::fromExact(f.matrix(), 44), 35));
            CHECK(nearIdentity(dagger(d.mono) * d.mono, 44));
            CHECK(nearIdentity(d.epi * dagger(d.epi), 35));
        }
    }
    SECTION("complex entries work") {
        const Dilation d = halmosDilation(ConMorphism(Matrix(1, 1, {gi(0, 1)})), 40);
        CHECK(nearIdentity(dagger(d.unitary) * d.unitary, 36));
    }
}

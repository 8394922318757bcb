#include <catch2/catch_amalgamated.hpp>

#include "fcon/matrix.hpp"

using namespace fcon;

namespace {
GaussianRational g(long num, long den = 1) { return GaussianRational(ratFrom(num, den)); }
GaussianRational gi(long re, long im) { return {Rational(re), Rational(im)}; }
} // namespace

TEST_CASE("dagger examples") {
    Matrix m(1, 1, {gi(0, 1)});
    CHECK(dagger(m) == Matrix(1, 1, {gi(0, -1)}));
    CHECK(dagger(Matrix::identity(3)) == Matrix::identity(3));
    Matrix r(2, 2, {g(1), g(2), g(3), g(4)});
    CHECK(dagger(r) == Matrix(2, 2, {g(1), g(3), g(2), g(4)}));
}

TEST_CASE("tensor and dsum basics") {
    CHECK(tensor(Matrix(1, 1, {g(2)}), Matrix(1, 1, {g(3)})) == Matrix(1, 1, {g(6)}));
    const Matrix d = dsum(Matrix(1, 1, {g(5)}), Matrix(1, 1, {g(7)}));
    CHECK(d == Matrix(2, 2, {g(5), g(0), g(0), g(7)}));
}

TEST_CASE("dagger laws on random triples") {
    Rng rng(23);
    for (int i = 0; i < 1000; ++i) {
        const std::size_t m = 1 + rng.below(3), n = 1 + rng.below(3), k = 1 + rng.below(3);
        const Matrix a = randomMatrix(rng, m, n);
        const Matrix b = randomMatrix(rng, n, k);
        CHECK(dagger(dagger(a)) == a);
        CHECK(dagger(a * b) == dagger(b) * dagger(a));
        CHECK(dagger(tensor(a, b)) == tensor(dagger(a), dagger(b)));
        CHECK(dagger(dsum(a, b)) == dsum(dagger(a), dagger(b)));
    }
}

TEST_CASE("biproduct equations p_j f i_k = f_jk") {
    Rng rng(29);
    for (int i = 0; i < 200; ++i) {
        const std::size_t x = 1 + rng.below(3), y = 1 + rng.below(3);
        const Matrix f = randomMatrix(rng, x, x);
        const Matrix gmat = randomMatrix(rng, y, y);
        const Matrix d = dsum(f, gmat);
        CHECK(proj1(x, y) * d * inj1(x, y) == f);
        CHECK(proj2(x, y) * d * inj2(x, y) == gmat);
        CHECK(proj1(x, y) * d * inj2(x, y) == Matrix::zero(x, y));
        // matrix-of-blocks round trip
        const Matrix rebuilt = inj1(x, y) * f * proj1(x, y) + inj2(x, y) * gmat * proj2(x, y);
        CHECK(rebuilt == d);
    }
}

TEST_CASE("distributors are permutations in the skeletal model") {
    Rng rng(31);
    // left distributor is literally the identity on entries
    const Matrix a = randomMatrix(rng, 2, 2), b = randomMatrix(rng, 3, 2),
                 c = randomMatrix(rng, 2, 3);
    CHECK(tensor(dsum(a, b), c) == dsum(tensor(a, c), tensor(b, c)));

    // right distributor: explicit permutation conjugation
    const std::size_t ca = 2, aa = 2, bb = 3;
    const Matrix p = rightDistributor(ca, aa, bb);
    CHECK(p * dagger(p) == Matrix::identity(ca * (aa + bb)));
    const Matrix lhs = tensor(randomMatrix(rng, ca, ca), dsum(Matrix::identity(aa), Matrix::identity(bb)));
    (void)lhs;
    const Matrix cm = randomMatrix(rng, ca, ca);
    const Matrix am = randomMatrix(rng, aa, aa);
    const Matrix bm = randomMatrix(rng, bb, bb);
    const Matrix viaTensor = tensor(cm, dsum(am, bm));
    const Matrix viaSum = dsum(tensor(cm, am), tensor(cm, bm));
    CHECK(p * viaTensor * dagger(p) == viaSum);
}

TEST_CASE("rank, kernel, inverse, solve") {
    const Matrix a(2, 3, {g(1), g(2), g(3), g(2), g(4), g(6)});
    CHECK(rank(a) == 1);
    const Matrix k = kernelBasis(a);
    CHECK(k.cols() == 2);
    CHECK((a * k).isZero());

    const Matrix u(2, 2, {g(3, 5), g(4, 5), g(-4, 5), g(3, 5)});
    const auto inv = inverse(u);
    REQUIRE(inv.has_value());
    CHECK(*inv * u == Matrix::identity(2));
    const Matrix epi(2, 3, {g(1), g(0), g(1), g(0), g(1), g(2)});
    CHECK(inverse(epi * dagger(epi)).has_value());
    CHECK_FALSE(inverse(Matrix(2, 2, {g(1), g(2), g(2), g(4)})).has_value());

    const Matrix b(2, 1, {g(1), g(2)});
    const auto x = solve(a, b);
    REQUIRE(x.has_value());
    CHECK(a * *x == b);
    const auto none = solve(Matrix(2, 1, {g(1), g(2)}), Matrix(2, 1, {g(1), g(3)}));
    CHECK_FALSE(none.has_value());

    const Matrix wide(1, 2, {g(1), g(1)});
    const Matrix ln = solveLeastNorm(wide, Matrix(1, 1, {g(2)}));
    CHECK(wide * ln == Matrix(1, 1, {g(2)}));
    CHECK(ln == Matrix(2, 1, {g(1), g(1)}));
}

TEST_CASE("exact LDL decides PSD") {
    // diagonal PSD
    CHECK(isPSD(Matrix::diagonal({g(1), g(0), g(3)})));
    // indefinite
    CHECK_FALSE(isPSD(Matrix::diagonal({g(1), g(-1)})));
    // PSD rank 1
    const Matrix ones(2, 2, {g(1), g(1), g(1), g(1)});
    const LdlResult r = ldlPSD(ones);
    CHECK(r.psd);
    CHECK(r.rank == 1);
    // zero diagonal with off-diagonal entry is not PSD
    const Matrix offd(2, 2, {g(0), g(1), g(1), g(0)});
    const LdlResult bad = ldlPSD(offd);
    CHECK_FALSE(bad.psd);
    REQUIRE(bad.negativeWitness.has_value());
    const Matrix v = *bad.negativeWitness;
    const GaussianRational q = innerProduct(v, offd * v);
    CHECK(q.isReal());
    CHECK(q.re < 0);
}

namespace {
GaussianRational det(const Matrix& m) { // cofactor expansion, fine for n <= 4
    const std::size_t n = m.rows();
    if (n == 0) return g(1);
    if (n == 1) return m(0, 0);
    GaussianRational acc;
    for (std::size_t j = 0; j < n; ++j) {
        Matrix sub(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                sub(r - 1, cc++) = m(r, c);
            }
        }
        const GaussianRational term = m(0, j) * det(sub);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

// independent PSD oracle: every principal minor is nonnegative
bool psdOracle(const Matrix& m) {
    const std::size_t n = m.rows();
    for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t(1) << i)) idx.push_back(i);
        Matrix sub(idx.size(), idx.size());
        for (std::size_t r = 0; r < idx.size(); ++r)
            for (std::size_t c = 0; c < idx.size(); ++c) sub(r, c) = m(idx[r], idx[c]);
        const GaussianRational d = det(sub);
        if (!d.isReal() || d.re < 0) return false;
    }
    return true;
}
} // namespace

TEST_CASE("LDL agrees with the principal-minor oracle") {
    // regression: a zero maximum diagonal must not mask negative diagonals
    CHECK_FALSE(isPSD(Matrix::diagonal({g(-4), g(0)})));
    CHECK_FALSE(isPSD(Matrix::diagonal({g(0), g(-4)})));

    Rng rng(151);
    int psdCount = 0, indefCount = 0;
    for (int t = 0; t < 400; ++t) {
        const std::size_t n = 1 + rng.below(3);
        Matrix m = randomMatrix(rng, n, n, 2, 2);
        m = m + dagger(m);
        if (rng.coin()) m = m * dagger(m); // bias towards PSD half the time
        const bool viaLdl = isPSD(m);
        CHECK(viaLdl == psdOracle(m));
        (viaLdl ? psdCount : indefCount)++;
    }
    CHECK(psdCount > 50);
    CHECK(indefCount > 50);
}

TEST_CASE("LDL reconstruction P M P^dag = L D L^dag, exact") {
    Rng rng(37);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 1 + rng.below(4);
        const Matrix b = randomMatrix(rng, n, 1 + rng.below(4));
        const Matrix m = b * dagger(b); // PSD by construction
        const LdlResult r = ldlPSD(m);
        REQUIRE(r.psd);
        CHECK(r.rank == rank(m));
        Matrix perm(n, n);
        for (std::size_t i = 0; i < n; ++i) perm(i, r.perm[i]) = g(1);
        Matrix d(n, n);
        for (std::size_t i = 0; i < r.pivots.size(); ++i) {
            CHECK(r.pivots[i] >= 0);
            d(i, i) = GaussianRational(r.pivots[i]);
        }
        CHECK(perm * m * dagger(perm) == r.lower * d * dagger(r.lower));
    }
}

TEST_CASE("negative witness is found for random indefinite matrices") {
    Rng rng(41);
    int found = 0;
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 2 + rng.below(3);
        Matrix m = randomMatrix(rng, n, n);
        m = m + dagger(m); // Hermitian, usually indefinite
        const LdlResult r = ldlPSD(m);
        if (r.psd) continue;
        ++found;
        REQUIRE(r.negativeWitness.has_value());
        const GaussianRational q = innerProduct(*r.negativeWitness, m * *r.negativeWitness);
        CHECK(q.isReal());
        CHECK(q.re < 0);
    }
    CHECK(found > 50);
}

TEST_CASE("orthogonalColumns yields exact pairwise-orthogonal spanning set") {
    Rng rng(43);
    for (int t = 0; t < 100; ++t) {
        const Matrix m = randomMatrix(rng, 3, 1 + rng.below(4));
        const Matrix b = orthogonalColumns(m);
        CHECK(b.cols() == rank(m));
        for (std::size_t i = 0; i < b.cols(); ++i)
            for (std::size_t j = i + 1; j < b.cols(); ++j)
                CHECK(innerProduct(column(b, i), column(b, j)).isZero());
    }
}

TEST_CASE("random unitaries are exactly unitary") {
    Rng rng(47);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 1 + rng.below(4);
        const Matrix u = randomUnitary(rng, n);
        CHECK(dagger(u) * u == Matrix::identity(n));
        CHECK(u * dagger(u) == Matrix::identity(n));
    }
}

TEST_CASE("zero-dimensional object maps") {
    const Matrix toO = Matrix::zero(0, 3);
    const Matrix fromO = Matrix::zero(3, 0);
    CHECK(toO.isZeroObjectMap());
    CHECK((fromO * toO) == Matrix::zero(3, 3));
    CHECK((toO * fromO) == Matrix::zero(0, 0));
    CHECK(rank(toO) == 0);
}

#pragma once

#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "fcon/errors.hpp"
#include "fcon/random.hpp"
#include "fcon/rational.hpp"

namespace fcon {

/// Exact matrix over Q(i). Objects of the skeletal model are dimensions;
/// the zero-dimensional object is any matrix with rows = 0 or cols = 0.
/// Entries are row-major.
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<GaussianRational> entries)
        : rows_(rows), cols_(cols), e_(std::move(entries)) {
        if (e_.size() != rows_ * cols_)
            throw DimensionMismatch("entry count does not match rows*cols");
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = GaussianRational(Rational(1));
        return m;
    }
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

    /// Column vector from rationals.
    static Matrix columnVector(const std::vector<Rational>& v) {
        Matrix m(v.size(), 1);
        for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = GaussianRational(v[i]);
        return m;
    }
    static Matrix scalar(const GaussianRational& a) {
        Matrix m(1, 1);
        m(0, 0) = a;
        return m;
    }
    static Matrix diagonal(const std::vector<GaussianRational>& d) {
        Matrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool isZeroObjectMap() const { return rows_ == 0 || cols_ == 0; }

    GaussianRational& operator()(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const GaussianRational& operator()(std::size_t r, std::size_t c) const {
        return e_[r * cols_ + c];
    }
    const std::vector<GaussianRational>& entries() const { return e_; }

    bool isZero() const {
        for (const auto& x : e_)
            if (!x.isZero()) return false;
        return true;
    }
    bool isSquare() const { return rows_ == cols_; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

  private:
    std::size_t rows_, cols_;
    std::vector<GaussianRational> e_;
};

inline Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("matrix addition shape mismatch");
    Matrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) + b(i, j);
    return r;
}

inline Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("matrix subtraction shape mismatch");
    Matrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) - b(i, j);
    return r;
}

/// Composition A after B reads as the matrix product A*B.
inline Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shape mismatch");
    Matrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).isZero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                r(i, j) = r(i, j) + a(i, k) * b(k, j);
        }
    return r;
}

inline Matrix compose(const Matrix& a, const Matrix& b) { return a * b; }

/// Scalar action a . f as entrywise scaling; the unitor lambda is the
/// identity in the skeletal model.
inline Matrix scale(const GaussianRational& s, const Matrix& m) {
    Matrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = s * m(i, j);
    return r;
}

/// Conjugate transpose.
inline Matrix dagger(const Matrix& m) {
    Matrix r(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(j, i) = conj(m(i, j));
    return r;
}

/// Kronecker product; the monoidal product on morphisms.
inline Matrix tensor(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return r;
}

/// Block diagonal sum; the biproduct on morphisms.
inline Matrix dsum(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, a.cols() + j) = b(i, j);
    return r;
}

/// Biproduct injections and projections for X (+) Y.
inline Matrix inj1(std::size_t x, std::size_t y) {
    Matrix m(x + y, x);
    for (std::size_t i = 0; i < x; ++i) m(i, i) = GaussianRational(Rational(1));
    return m;
}
inline Matrix inj2(std::size_t x, std::size_t y) {
    Matrix m(x + y, y);
    for (std::size_t i = 0; i < y; ++i) m(x + i, i) = GaussianRational(Rational(1));
    return m;
}
inline Matrix proj1(std::size_t x, std::size_t y) { return dagger(inj1(x, y)); }
inline Matrix proj2(std::size_t x, std::size_t y) { return dagger(inj2(x, y)); }

/// Stack blocks horizontally [a | b] and vertically [a ; b].
inline Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw DimensionMismatch("hstack row mismatch");
    Matrix r(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
    }
    return r;
}
inline Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw DimensionMismatch("vstack col mismatch");
    Matrix r(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(a.rows() + i, j) = b(i, j);
    return r;
}

inline Matrix column(const Matrix& m, std::size_t j) {
    Matrix c(m.rows(), 1);
    for (std::size_t i = 0; i < m.rows(); ++i) c(i, 0) = m(i, j);
    return c;
}

/// The right distributor C (x) (A (+) B) -> (C (x) A) (+) (C (x) B) as a
/// concrete permutation matrix. The left distributor is the identity
/// because Kronecker blocks of a block-diagonal matrix are already block
/// diagonal in row-major order.
inline Matrix rightDistributor(std::size_t c, std::size_t a, std::size_t b) {
    const std::size_t n = c * (a + b);
    Matrix p(n, n);
    for (std::size_t i = 0; i < c; ++i) {
        for (std::size_t j = 0; j < a; ++j)
            p(i * a + j, i * (a + b) + j) = GaussianRational(Rational(1));
        for (std::size_t j = 0; j < b; ++j)
            p(c * a + i * b + j, i * (a + b) + a + j) = GaussianRational(Rational(1));
    }
    return p;
}

/// Squared Frobenius norm: sum of normSq of entries, exact.
inline Rational frobeniusSq(const Matrix& m) {
    Rational s(0);
    for (const auto& x : m.entries()) s += normSq(x);
    return s;
}

/// x^dag y for column vectors.
inline GaussianRational innerProduct(const Matrix& x, const Matrix& y) {
    if (x.cols() != 1 || y.cols() != 1 || x.rows() != y.rows())
        throw DimensionMismatch("inner product expects equal-length columns");
    GaussianRational s;
    for (std::size_t i = 0; i < x.rows(); ++i) s = s + conj(x(i, 0)) * y(i, 0);
    return s;
}

namespace detail {

/// Row echelon elimination in place; returns pivot columns. Destroys m.
inline std::vector<std::size_t> echelon(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m(sel, col).isZero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
        const GaussianRational inv = inverse(m(row, col));
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = inv * m(row, j);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).isZero()) continue;
            const GaussianRational f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m(i, j) = m(i, j) - f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace detail

inline std::size_t rank(const Matrix& m) {
    Matrix copy = m;
    return detail::echelon(copy).size();
}

/// Basis of ker m as matrix columns (cols = nullity). Exact.
inline Matrix kernelBasis(const Matrix& m) {
    Matrix red = m;
    const std::vector<std::size_t> pivots = detail::echelon(red);
    std::vector<bool> isPivot(m.cols(), false);
    for (std::size_t p : pivots) isPivot[p] = true;
    std::vector<std::size_t> freeCols;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (!isPivot[j]) freeCols.push_back(j);
    Matrix basis(m.cols(), freeCols.size());
    for (std::size_t k = 0; k < freeCols.size(); ++k) {
        const std::size_t f = freeCols[k];
        basis(f, k) = GaussianRational(Rational(1));
        for (std::size_t r = 0; r < pivots.size(); ++r)
            basis(pivots[r], k) = -red(r, f);
    }
    return basis;
}

/// Gauss-Jordan inverse; empty when singular or non-square.
inline std::optional<Matrix> inverse(const Matrix& m) {
    if (!m.isSquare()) return std::nullopt;
    const std::size_t n = m.rows();
    Matrix aug = hstack(m, Matrix::identity(n));
    const auto pivots = detail::echelon(aug);
    if (pivots.size() != n) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i)
        if (pivots[i] != i) return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

/// One exact solution of A x = b, or empty when inconsistent. Deterministic
/// (free variables are set to zero).
inline std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw DimensionMismatch("solve shape mismatch");
    Matrix aug = hstack(a, b);
    const auto pivots = detail::echelon(aug);
    for (std::size_t p : pivots)
        if (p >= a.cols()) return std::nullopt; // pivot in the rhs block
    Matrix x(a.cols(), b.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (std::size_t j = 0; j < b.cols(); ++j) x(pivots[r], j) = aug(r, a.cols() + j);
    return x;
}

/// Least-norm solution x = A^dag (A A^dag)^{-1} b for full-row-rank A.
inline Matrix solveLeastNorm(const Matrix& a, const Matrix& b) {
    const Matrix gram = a * dagger(a);
    const auto inv = inverse(gram);
    if (!inv) throw NotEpi("solveLeastNorm requires full row rank");
    return dagger(a) * (*inv * b);
}

/// Hermitian check, exact.
inline bool isHermitian(const Matrix& m) {
    if (!m.isSquare()) return false;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != conj(m(j, i))) return false;
    return true;
}

/// Exact LDL^dag decomposition with full symmetric pivoting of a Hermitian
/// matrix. When it exists with nonnegative pivots it certifies positive
/// semidefiniteness; a witness vector v with v^dag M v < 0 certifies the
/// opposite.
struct LdlResult {
    bool psd = false;
    std::vector<std::size_t> perm;  // perm[k] = original index of step-k pivot
    std::vector<Rational> pivots;   // nonnegative when psd
    Matrix lower;                   // unit lower triangular in permuted order
    std::size_t rank = 0;
    std::optional<Matrix> negativeWitness; // column v with v^dag M v < 0
};

inline LdlResult ldlPSD(const Matrix& m) {
    if (!isHermitian(m)) throw NotHermitian("ldlPSD expects a Hermitian matrix");
    const std::size_t n = m.rows();
    LdlResult res;
    Matrix w = m;
    // E accumulates the congruence: w = E * m * E^dag at every step.
    Matrix e = Matrix::identity(n);
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    Matrix l = Matrix::identity(n);
    std::size_t k = 0;
    for (; k < n; ++k) {
        // pick the largest remaining diagonal entry
        std::size_t best = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (w(i, i).re > w(best, best).re) best = i;
        const Rational d = w(best, best).re;
        if (d < 0) {
            // diagonal already negative: e^dag basis vector is a witness
            Matrix v(n, 1);
            v(best, 0) = GaussianRational(Rational(1));
            res.negativeWitness = dagger(e) * v;
            return res;
        }
        if (d == 0) {
            // remaining diagonals are all <= 0; a strictly negative one is
            // itself a witness, and with an all-zero diagonal any nonzero
            // off-diagonal entry makes a 2x2 indefinite block
            for (std::size_t i = k; i < n; ++i) {
                if (w(i, i).re >= 0) continue;
                Matrix v(n, 1);
                v(i, 0) = GaussianRational(Rational(1));
                res.negativeWitness = dagger(e) * v;
                return res;
            }
            for (std::size_t i = k; i < n; ++i)
                for (std::size_t j = k; j < n; ++j) {
                    if (i == j || w(i, j).isZero()) continue;
                    Matrix v(n, 1);
                    v(i, 0) = -w(i, j);
                    v(j, 0) = GaussianRational(Rational(1));
                    res.negativeWitness = dagger(e) * v;
                    return res;
                }
            break; // remaining block is zero: PSD with rank k
        }
        if (best != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(w(k, j), w(best, j));
            for (std::size_t i = 0; i < n; ++i) std::swap(w(i, k), w(i, best));
            for (std::size_t j = 0; j < n; ++j) std::swap(e(k, j), e(best, j));
            for (std::size_t j = 0; j < k; ++j) std::swap(l(k, j), l(best, j));
            std::swap(order[k], order[best]);
        }
        res.pivots.push_back(d);
        const GaussianRational dInv(Rational(1) / d);
        for (std::size_t i = k + 1; i < n; ++i) {
            const GaussianRational f = w(i, k) * dInv;
            l(i, k) = f;
            if (f.isZero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                w(i, j) = w(i, j) - f * w(k, j);
                e(i, j) = e(i, j) - f * e(k, j);
            }
            for (std::size_t r = 0; r < n; ++r) w(r, i) = w(r, i) - conj(f) * w(r, k);
        }
    }
    res.psd = true;
    res.rank = res.pivots.size();
    res.perm = order;
    res.lower = l;
    return res;
}

/// Exact PSD decision for a Hermitian matrix.
inline bool isPSD(const Matrix& m) { return ldlPSD(m).psd; }

/// Orthogonalise the columns of m by exact Gram-Schmidt, dropping zero
/// residuals. Output columns are pairwise orthogonal but not normalised
/// (normalisation leaves Q(i)).
inline Matrix orthogonalColumns(const Matrix& m) {
    std::vector<Matrix> basis;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        Matrix v = column(m, j);
        for (const Matrix& b : basis) {
            const GaussianRational coeff = innerProduct(b, v) / GaussianRational(frobeniusSq(b));
            v = v - scale(coeff, b);
        }
        if (!v.isZero()) basis.push_back(v);
    }
    Matrix out(m.rows(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i) out(i, j) = basis[j](i, 0);
    return out;
}

/// Random matrix with entries from the rng.
inline Matrix randomMatrix(Rng& rng, std::size_t rows, std::size_t cols, long maxNum = 3,
                           long maxDen = 3) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.gaussian(maxNum, maxDen);
    return m;
}

/// Exact unitary built from permutations, unit-scalar diagonals and
/// Pythagorean plane rotations.
inline Matrix randomUnitary(Rng& rng, std::size_t n, std::size_t steps = 6) {
    Matrix u = Matrix::identity(n);
    if (n == 0) return u;
    for (std::size_t s = 0; s < steps; ++s) {
        switch (rng.below(3)) {
            case 0: { // transposition
                const std::size_t i = rng.below(n), j = rng.below(n);
                Matrix p = Matrix::identity(n);
                if (i != j) {
                    p(i, i) = p(j, j) = GaussianRational();
                    p(i, j) = p(j, i) = GaussianRational(Rational(1));
                }
                u = p * u;
                break;
            }
            case 1: { // unit-scalar phase on one coordinate
                const std::size_t i = rng.below(n);
                Matrix d = Matrix::identity(n);
                d(i, i) = rng.unitScalar();
                u = d * u;
                break;
            }
            default: { // Pythagorean rotation in a random plane
                if (n == 1) {
                    Matrix d = Matrix::identity(1);
                    d(0, 0) = rng.unitScalar();
                    u = d * u;
                    break;
                }
                std::size_t i = rng.below(n), j = rng.below(n);
                if (i == j) j = (i + 1) % n;
                auto [c, sn] = rng.pythagorean();
                Matrix g = Matrix::identity(n);
                g(i, i) = GaussianRational(c);
                g(j, j) = GaussianRational(c);
                g(i, j) = GaussianRational(sn);
                g(j, i) = GaussianRational(-sn);
                u = g * u;
                break;
            }
        }
    }
    return u;
}

inline std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << "[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            os << toString(m(i, j));
            if (j + 1 < m.cols()) os << ", ";
        }
        os << "]";
        if (i + 1 < m.rows()) os << ", ";
    }
    return os << "]";
}

} // namespace fcon

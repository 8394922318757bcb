#pragma once

#include <utility>
#include <vector>

#include "fcon/bigreal.hpp"
#include "fcon/matrix.hpp"

namespace fcon {

/// Matrix over complex dyadics. Produced only by the operations that need
/// square roots; everything decidable stays in the exact Matrix. The prec
/// field records the bits of the guaranteed entrywise tolerance 2^-prec.
class ApproxMatrix {
  public:
    ApproxMatrix() : rows_(0), cols_(0), prec_(BigReal::kDefaultPrecision) {}
    ApproxMatrix(std::size_t rows, std::size_t cols, unsigned prec)
        : rows_(rows), cols_(cols), prec_(prec), e_(rows * cols) {}

    static ApproxMatrix fromExact(const Matrix& m, unsigned prec) {
        ApproxMatrix r(m.rows(), m.cols(), prec);
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                r(i, j) = BigComplex::fromGaussian(m(i, j), prec + 8);
        return r;
    }
    static ApproxMatrix identity(std::size_t n, unsigned prec) {
        ApproxMatrix r(n, n, prec);
        for (std::size_t i = 0; i < n; ++i) r(i, i) = BigComplex(BigReal::fromInt(1));
        return r;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    unsigned precision() const { return prec_; }
    BigReal tolerance() const { return BigReal::ulp(prec_); }

    BigComplex& operator()(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const BigComplex& operator()(std::size_t r, std::size_t c) const {
        return e_[r * cols_ + c];
    }

    /// Exact rational snapshot (dyadic entries are rationals).
    Matrix toExact() const {
        Matrix m(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                m(i, j) = GaussianRational((*this)(i, j).re.toRational(),
                                           (*this)(i, j).im.toRational());
        return m;
    }

    ApproxMatrix rounded(unsigned prec) const {
        ApproxMatrix r(rows_, cols_, prec);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = round(e_[i], prec);
        return r;
    }

  private:
    std::size_t rows_, cols_;
    unsigned prec_;
    std::vector<BigComplex> e_;
};

inline ApproxMatrix operator*(const ApproxMatrix& a, const ApproxMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("approx product shape mismatch");
    const unsigned prec = std::min(a.precision(), b.precision());
    ApproxMatrix r(a.rows(), b.cols(), prec);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            for (std::size_t j = 0; j < b.cols(); ++j)
                r(i, j) = r(i, j) + a(i, k) * b(k, j);
    return r;
}

inline ApproxMatrix operator+(const ApproxMatrix& a, const ApproxMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("approx sum shape mismatch");
    ApproxMatrix r(a.rows(), a.cols(), std::min(a.precision(), b.precision()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) + b(i, j);
    return r;
}

inline ApproxMatrix operator-(const ApproxMatrix& a, const ApproxMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("approx difference shape mismatch");
    ApproxMatrix r(a.rows(), a.cols(), std::min(a.precision(), b.precision()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) - b(i, j);
    return r;
}

inline ApproxMatrix dagger(const ApproxMatrix& m) {
    ApproxMatrix r(m.cols(), m.rows(), m.precision());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(j, i) = conj(m(i, j));
    return r;
}

inline ApproxMatrix scale(const ApproxMatrix& m, const BigReal& s) {
    ApproxMatrix r(m.rows(), m.cols(), m.precision());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = scale(m(i, j), s);
    return r;
}

inline ApproxMatrix hstack(const ApproxMatrix& a, const ApproxMatrix& b) {
    if (a.rows() != b.rows()) throw DimensionMismatch("approx hstack row mismatch");
    ApproxMatrix r(a.rows(), a.cols() + b.cols(), std::min(a.precision(), b.precision()));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
    }
    return r;
}

/// max entrywise |.| upper bound (|re| + |im| overestimate).
inline BigReal maxAbsEntry(const ApproxMatrix& m) {
    BigReal best;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            BigReal v = absUpper(m(i, j));
            if (v > best) best = v;
        }
    return best;
}

inline BigReal maxDeviation(const ApproxMatrix& a, const ApproxMatrix& b) {
    return maxAbsEntry(a - b);
}
inline BigReal deviationFromIdentity(const ApproxMatrix& a) {
    return maxDeviation(a, ApproxMatrix::identity(a.rows(), a.precision()));
}

/// True when every entry of a - b is within 2^-bits.
inline bool withinTolerance(const ApproxMatrix& a, const ApproxMatrix& b, unsigned bits) {
    return maxDeviation(a, b) <= BigReal::ulp(bits);
}

/// Gauss-Jordan inverse in dyadic arithmetic with partial pivoting.
inline ApproxMatrix approxInverse(const ApproxMatrix& m) {
    if (m.rows() != m.cols()) throw NotSquare("approxInverse expects a square matrix");
    const std::size_t n = m.rows();
    const unsigned guard = m.precision() + 24;
    ApproxMatrix a = m.rounded(guard);
    ApproxMatrix inv = ApproxMatrix::identity(n, guard);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t best = k;
        BigReal bestMag = normSq(a(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const BigReal mag = normSq(a(i, k));
            if (mag > bestMag) {
                best = i;
                bestMag = mag;
            }
        }
        if (bestMag.isZero()) throw NotEpi("approxInverse: singular matrix");
        if (best != k)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(k, j), a(best, j));
                std::swap(inv(k, j), inv(best, j));
            }
        // scale row k by 1/a(k,k)
        const BigComplex piv = a(k, k);
        const BigReal pivNormSq = normSq(piv);
        const BigComplex pivInv{BigReal::divRel(piv.re, pivNormSq, guard),
                                -BigReal::divRel(piv.im, pivNormSq, guard)};
        for (std::size_t j = 0; j < n; ++j) {
            a(k, j) = round(a(k, j) * pivInv, guard);
            inv(k, j) = round(inv(k, j) * pivInv, guard);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a(i, k).isZero()) continue;
            const BigComplex factor = a(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) = round(a(i, j) - factor * a(k, j), guard);
                inv(i, j) = round(inv(i, j) - factor * inv(k, j), guard);
            }
        }
    }
    return inv.rounded(m.precision());
}

/// Right pseudoinverse b^dag (b b^dag)^{-1} for full-row-rank b.
inline ApproxMatrix approxPinvRight(const ApproxMatrix& b) {
    return dagger(b) * approxInverse(b * dagger(b));
}

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
/// rotations in dyadic arithmetic. Returns (V, d) with V^dag H V ~ diag(d)
/// and V unitary within the working tolerance.
struct JacobiResult {
    ApproxMatrix vectors;      // columns are eigenvectors
    std::vector<BigReal> values;
};

inline JacobiResult jacobiHermitian(const ApproxMatrix& h0, unsigned prec) {
    if (h0.rows() != h0.cols()) throw NotSquare("jacobiHermitian expects a square matrix");
    const std::size_t n = h0.rows();
    const unsigned guard = prec + 32;
    ApproxMatrix h = h0.rounded(guard);
    ApproxMatrix v = ApproxMatrix::identity(n, guard);
    if (n <= 1) {
        JacobiResult r{v, {}};
        if (n == 1) r.values.push_back(h(0, 0).re);
        return r;
    }
    const BigReal thresholdSq = BigReal::ulp(2 * (prec + 16));
    const BigReal one = BigReal::fromInt(1);

    for (unsigned sweep = 0; sweep < 64; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const BigComplex apq = h(p, q);
                if (normSq(apq) <= thresholdSq) continue;
                rotated = true;
                // phase that makes the pivot entry real: apq = |apq| * phi.
                // Relative-precision sqrt and div keep the rotation unitary
                // even when |apq| is far below 1.
                const BigReal mag = BigReal::sqrtRel(normSq(apq), guard);
                const BigComplex phi{BigReal::divRel(apq.re, mag, guard),
                                     BigReal::divRel(apq.im, mag, guard)};
                // real symmetric rotation on the transformed 2x2 block
                const BigReal app = h(p, p).re, aqq = h(q, q).re;
                const BigReal theta = BigReal::divRel(aqq - app, mag + mag, guard);
                // t = sign(theta) / (|theta| + sqrt(theta^2 + 1))
                const BigReal root = BigReal::sqrt(theta * theta + one, guard);
                BigReal t = BigReal::div(one, theta.abs() + root, guard);
                if (theta.sign() < 0) t = -t;
                const BigReal c = BigReal::div(one, BigReal::sqrt(t * t + one, guard), guard);
                const BigReal s = (t * c).round(guard);
                // columns: col_p' = c*col_p - s*conj(phi)*col_q ; col_q' = s*phi*col_p + c*col_q
                const BigComplex sPhi = scale(phi, s);
                const BigComplex sPhiConj = scale(conj(phi), s);
                for (std::size_t i = 0; i < n; ++i) {
                    const BigComplex hp = h(i, p), hq = h(i, q);
                    h(i, p) = round(scale(hp, c) - sPhiConj * hq, guard);
                    h(i, q) = round(sPhi * hp + scale(hq, c), guard);
                    const BigComplex vp = v(i, p), vq = v(i, q);
                    v(i, p) = round(scale(vp, c) - sPhiConj * vq, guard);
                    v(i, q) = round(sPhi * vp + scale(vq, c), guard);
                }
                for (std::size_t j = 0; j < n; ++j) {
                    const BigComplex hp = h(p, j), hq = h(q, j);
                    h(p, j) = round(scale(hp, c) - conj(sPhiConj) * hq, guard);
                    h(q, j) = round(conj(sPhi) * hp + scale(hq, c), guard);
                }
            }
        }
        if (!rotated) break;
    }
    JacobiResult r{v.rounded(prec + 8), {}};
    for (std::size_t i = 0; i < n; ++i) r.values.push_back(h(i, i).re.round(prec + 8));
    return r;
}

/// Hermitian square root of an exactly-PSD matrix. The PSD precondition is
/// checked exactly; the result satisfies result ~ result^dag and
/// result^2 ~ P within 2^-precision.
inline ApproxMatrix matrixSqrtPSD(const Matrix& p, unsigned precision) {
    if (!isHermitian(p)) throw NotHermitian("matrixSqrtPSD expects a Hermitian matrix");
    if (!isPSD(p)) throw NotPSD("matrixSqrtPSD expects a PSD matrix");
    const unsigned guard = precision + 24;
    const JacobiResult eig = jacobiHermitian(ApproxMatrix::fromExact(p, guard), guard);
    const std::size_t n = p.rows();
    ApproxMatrix d(n, n, guard);
    for (std::size_t i = 0; i < n; ++i) {
        BigReal lambda = eig.values[i];
        if (lambda.sign() < 0) lambda = BigReal(); // exact-PSD input: only rounding noise
        d(i, i) = BigComplex(BigReal::sqrt(lambda, guard));
    }
    return (eig.vectors * d * dagger(eig.vectors)).rounded(precision);
}

} // namespace fcon

#pragma once

#include <optional>
#include <utility>

#include "fcon/matrix.hpp"

namespace fcon {

/// Exact contraction decision: A is a morphism of the contraction category
/// iff I - A^dag A is positive semidefinite. The LDL certificate doubles as
/// the PSD witness.
inline LdlResult contractionCertificate(const Matrix& a) {
    const Matrix gap = Matrix::identity(a.cols()) - dagger(a) * a;
    return ldlPSD(gap);
}

inline bool isContraction(const Matrix& a) { return contractionCertificate(a).psd; }

/// Matrix together with an exact PSD certificate for I - A^dag A.
class ConMorphism {
  public:
    explicit ConMorphism(Matrix m) : matrix_(std::move(m)), cert_(contractionCertificate(matrix_)) {
        if (!cert_.psd)
            throw NotContraction("matrix is not a contraction (I - A^dag A not PSD)");
    }

    static std::optional<ConMorphism> tryFrom(Matrix m) {
        LdlResult c = contractionCertificate(m);
        if (!c.psd) return std::nullopt;
        return ConMorphism(std::move(m), std::move(c));
    }

    const Matrix& matrix() const { return matrix_; }
    const LdlResult& certificate() const { return cert_; }
    std::size_t rows() const { return matrix_.rows(); }
    std::size_t cols() const { return matrix_.cols(); }

    friend bool operator==(const ConMorphism& a, const ConMorphism& b) {
        return a.matrix_ == b.matrix_;
    }

  private:
    ConMorphism(Matrix m, LdlResult c) : matrix_(std::move(m)), cert_(std::move(c)) {}
    Matrix matrix_;
    LdlResult cert_;
};

inline ConMorphism conIdentity(std::size_t n) { return ConMorphism(Matrix::identity(n)); }
inline ConMorphism conZero(std::size_t rows, std::size_t cols) {
    return ConMorphism(Matrix::zero(rows, cols));
}

/// Structure-preserving operations stay contractions; certificates are
/// recomputed exactly.
inline ConMorphism conCompose(const ConMorphism& a, const ConMorphism& b) {
    return ConMorphism(a.matrix() * b.matrix());
}
inline ConMorphism conTensor(const ConMorphism& a, const ConMorphism& b) {
    return ConMorphism(tensor(a.matrix(), b.matrix()));
}
inline ConMorphism conDsum(const ConMorphism& a, const ConMorphism& b) {
    return ConMorphism(dsum(a.matrix(), b.matrix()));
}
inline ConMorphism conDagger(const ConMorphism& a) { return ConMorphism(dagger(a.matrix())); }

// Rank-based predicates, all exact.
inline bool isDaggerMono(const Matrix& a) {
    return dagger(a) * a == Matrix::identity(a.cols());
}
inline bool isDaggerEpi(const Matrix& a) {
    return a * dagger(a) == Matrix::identity(a.rows());
}
inline bool isMono(const Matrix& a) { return rank(a) == a.cols(); }
inline bool isEpi(const Matrix& a) { return rank(a) == a.rows(); }
inline bool isDaggerIso(const Matrix& a) { return isDaggerMono(a) && isDaggerEpi(a); }

/// Dagger finiteness of the object at a square endomorphism: if f^dag f = 1
/// then f f^dag = 1. True for every exact square matrix by the rank
/// argument; the check exists to validate that on generated instances.
inline bool daggerFiniteCheck(const Matrix& f) {
    if (!f.isSquare()) throw NotSquare("daggerFiniteCheck expects an endomorphism");
    if (!isDaggerMono(f)) return true; // vacuous
    return isDaggerEpi(f);
}

/// Witness for the positivity axiom: for epis x, y with common domain,
/// x^dag x = y^dag y exactly iff there is an isomorphism f with y = f x,
/// in which case f = y x^dag (x x^dag)^{-1}.
inline std::optional<Matrix> positivityWitness(const Matrix& x, const Matrix& y) {
    if (x.cols() != y.cols()) throw DimensionMismatch("positivityWitness domain mismatch");
    if (!isEpi(x)) throw NotEpi("positivityWitness: x is not epic");
    if (!isEpi(y)) throw NotEpi("positivityWitness: y is not epic");
    if (dagger(x) * x != dagger(y) * y) return std::nullopt;
    const auto gramInv = inverse(x * dagger(x));
    // x epi makes x x^dag invertible
    Matrix f = y * dagger(x) * (*gramInv);
    if (f * x != y) return std::nullopt; // cannot happen when the Gram identity holds
    return f;
}

/// Frobenius-scaled copy of m that is certifiably a contraction: c = 1 when
/// m already is one, otherwise 1/ceil(sqrt(frobeniusSq)).
inline std::pair<Matrix, Rational> scaleToContraction(const Matrix& m) {
    if (isContraction(m)) return {m, Rational(1)};
    const Rational bound = sqrtUpperBound(frobeniusSq(m));
    const Rational c = Rational(1) / bound;
    return {scale(GaussianRational(c), m), c};
}

inline ConMorphism randomContraction(Rng& rng, std::size_t rows, std::size_t cols) {
    const Matrix m = randomMatrix(rng, rows, cols);
    return ConMorphism(scaleToContraction(m).first);
}

} // namespace fcon

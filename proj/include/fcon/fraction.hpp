#pragma once

#include <utility>

#include "fcon/contraction.hpp"

namespace fcon {

/// Morphism of the localised category in resolved form: an unrestricted
/// matrix over Q(i).
struct FieldMorphism {
    Matrix matrix;
    friend bool operator==(const FieldMorphism&, const FieldMorphism&) = default;
};

/// Fraction f/a: a contraction f over a nonzero disk scalar a. Equality is
/// the localisation equivalence, never structural; fractions are not
/// normalised.
class Fraction {
  public:
    Fraction(ConMorphism numerator, DiskScalar denominator)
        : num_(std::move(numerator)), den_(std::move(denominator)) {
        if (den_.isZero()) throw ZeroDenominator("fraction denominator must be nonzero");
    }

    const ConMorphism& numerator() const { return num_; }
    const DiskScalar& denominator() const { return den_; }
    std::size_t rows() const { return num_.rows(); }
    std::size_t cols() const { return num_.cols(); }

  private:
    ConMorphism num_;
    DiskScalar den_;
};

/// (f, a) ~ (g, b) iff b.f = a.g, entrywise exact.
inline bool fracEquiv(const Fraction& p, const Fraction& q) {
    if (p.rows() != q.rows() || p.cols() != q.cols())
        throw DimensionMismatch("fracEquiv expects a common shape");
    return scale(q.denominator().value(), p.numerator().matrix())
        == scale(p.denominator().value(), q.numerator().matrix());
}

/// The embedding f -> f/1 of the contraction category.
inline Fraction embed(ConMorphism f) { return Fraction(std::move(f), DiskScalar::one()); }

inline Fraction fracDagger(const Fraction& p) {
    return Fraction(conDagger(p.numerator()),
                    DiskScalar(conj(p.denominator().value())));
}

inline Fraction fracCompose(const Fraction& p, const Fraction& q) {
    return Fraction(conCompose(p.numerator(), q.numerator()),
                    DiskScalar(p.denominator().value() * q.denominator().value()));
}

inline Fraction fracTensor(const Fraction& p, const Fraction& q) {
    return Fraction(conTensor(p.numerator(), q.numerator()),
                    DiskScalar(p.denominator().value() * q.denominator().value()));
}

/// (f/a) (+) (g/b) = (b.f (+) a.g) / ab.
inline Fraction fracDsum(const Fraction& p, const Fraction& q) {
    const Matrix top = scale(q.denominator().value(), p.numerator().matrix());
    const Matrix bottom = scale(p.denominator().value(), q.numerator().matrix());
    return Fraction(ConMorphism(dsum(top, bottom)),
                    DiskScalar(p.denominator().value() * q.denominator().value()));
}

/// Evaluate f . a^{-1} in the resolved model.
inline FieldMorphism resolve(const Fraction& p) {
    return {scale(inverse(p.denominator().value()), p.numerator().matrix())};
}

/// Admissible fraction representing an arbitrary matrix: scale by a rational
/// c with 0 < c <= 1 below the inverse of a rational operator-norm bound.
/// The Frobenius norm is used as the bound; it is exactly computable and
/// dominates the operator norm. Contractions embed with denominator one.
inline Fraction toFraction(const FieldMorphism& m) {
    auto maybe = ConMorphism::tryFrom(m.matrix);
    if (maybe) return embed(std::move(*maybe));
    const Rational c = Rational(1) / sqrtUpperBound(frobeniusSq(m.matrix));
    return Fraction(ConMorphism(scale(GaussianRational(c), m.matrix)),
                    DiskScalar(GaussianRational(c)));
}

/// A resolved morphism comes from the contraction category exactly when
/// I - M^dag M is PSD; for a column vector this is 1 >= x^dag x.
inline bool comesFromD(const FieldMorphism& m) { return isContraction(m.matrix); }

} // namespace fcon

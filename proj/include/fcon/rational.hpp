#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <ostream>
#include <string>

#include "fcon/errors.hpp"

namespace fcon {

/// Arbitrary-precision integers and rationals. cpp_rational keeps the
/// canonical reduced form (positive denominator, gcd 1), so exact equality
/// is structural equality.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline Rational ratFrom(long long num, long long den = 1) {
    if (den == 0) throw ZeroDenominator("rational with zero denominator");
    return Rational(Int(num), Int(den));
}

/// Smallest rational b = ceil(sqrt(p*q))/q satisfying b*b >= p/q >= 0.
inline Rational sqrtUpperBound(const Rational& r) {
    if (r < 0) throw NegativeInput("sqrtUpperBound of negative rational");
    const Int p = numerator(r), q = denominator(r);
    const Int pq = p * q;
    Int s = boost::multiprecision::sqrt(pq); // floor sqrt
    if (s * s < pq) ++s;
    return Rational(s, q);
}

/// Whether r is the square of a rational; if so that square root (>= 0).
inline bool rationalSqrt(const Rational& r, Rational& out) {
    if (r < 0) return false;
    const Int p = numerator(r), q = denominator(r);
    const Int sp = boost::multiprecision::sqrt(p), sq = boost::multiprecision::sqrt(q);
    if (sp * sp != p || sq * sq != q) return false;
    out = Rational(sp, sq);
    return true;
}

/// Element of Q(i) with componentwise canonical form. Conjugation is the
/// involution; self-adjoint elements are exactly those with im = 0.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool isZero() const { return re == 0 && im == 0; }
    bool isReal() const { return im == 0; }

    friend bool operator==(const GaussianRational&, const GaussianRational&) = default;
};

inline GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
}
inline GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
}
inline GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
inline GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

inline GaussianRational conj(const GaussianRational& a) { return {a.re, -a.im}; }

inline Rational normSq(const GaussianRational& a) { return a.re * a.re + a.im * a.im; }

inline GaussianRational inverse(const GaussianRational& a) {
    if (a.isZero()) throw ZeroDenominator("inverse of zero Gaussian rational");
    const Rational n = normSq(a);
    return {a.re / n, -a.im / n};
}
inline GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    return a * inverse(b);
}

inline bool inDisk(const GaussianRational& a) { return normSq(a) <= 1; }

inline std::string toString(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

inline std::string toString(const GaussianRational& a) {
    if (a.im == 0) return toString(a.re);
    if (a.re == 0) return toString(a.im) + "i";
    std::string s = toString(a.re);
    s += (a.im > 0) ? " + " : " - ";
    Rational m = a.im > 0 ? a.im : Rational(-a.im);
    return s + toString(m) + "i";
}

inline std::ostream& operator<<(std::ostream& os, const GaussianRational& a) {
    return os << toString(a);
}

/// A scalar of the contraction category: an element of the closed unit disk.
/// Construction checks membership exactly.
class DiskScalar {
  public:
    explicit DiskScalar(GaussianRational v) : value_(std::move(v)) {
        if (!inDisk(value_)) throw NotInDisk("scalar outside the unit disk: " + toString(value_));
    }
    static DiskScalar one() { return DiskScalar(GaussianRational(Rational(1))); }

    const GaussianRational& value() const { return value_; }
    bool isZero() const { return value_.isZero(); }

    friend bool operator==(const DiskScalar&, const DiskScalar&) = default;

  private:
    GaussianRational value_;
};

} // namespace fcon

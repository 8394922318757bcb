#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <string>

#include "fcon/rational.hpp"

namespace fcon {

/// Binary fixed-precision real: value = mantissa * 2^exponent, with the
/// precision field recording the target quantum 2^(-precision). Addition,
/// subtraction and multiplication are exact (dyadics are closed under
/// them); division, square root and explicit round() introduce an absolute
/// error of at most 2^(-precision).
class BigReal {
  public:
    BigReal() : mant_(0), exp_(0), prec_(kDefaultPrecision) {}
    BigReal(Int mantissa, long exponent, unsigned precision = kDefaultPrecision)
        : mant_(std::move(mantissa)), exp_(exponent), prec_(precision) {
        normalise();
    }

    static constexpr unsigned kDefaultPrecision = 40;

    static BigReal fromInt(long long v, unsigned prec = kDefaultPrecision) {
        return BigReal(Int(v), 0, prec);
    }
    static BigReal fromRational(const Rational& r, unsigned prec) {
        // floor(r * 2^prec) * 2^-prec, error < 2^-prec
        Int scaled = (numerator(r) << prec) / denominator(r);
        if (r < 0 && scaled * denominator(r) != (numerator(r) << prec)) --scaled; // floor
        return BigReal(scaled, -static_cast<long>(prec), prec);
    }
    /// Exact when the denominator is a power of two; otherwise throws.
    static BigReal fromDyadicExact(const Rational& r, unsigned prec = kDefaultPrecision) {
        Int den = denominator(r);
        long e = 0;
        while (den > 1) {
            if (den % 2 != 0) throw std::invalid_argument("not a dyadic rational");
            den >>= 1;
            --e;
        }
        return BigReal(numerator(r), e, prec);
    }

    const Int& mantissa() const { return mant_; }
    long exponent() const { return exp_; }
    unsigned precision() const { return prec_; }
    bool isZero() const { return mant_ == 0; }
    int sign() const { return mant_ == 0 ? 0 : (mant_ > 0 ? 1 : -1); }

    /// Exact rational value of this dyadic number.
    Rational toRational() const {
        if (exp_ >= 0) return Rational(mant_ << exp_);
        return Rational(mant_, Int(1) << static_cast<unsigned long>(-exp_));
    }

    friend BigReal operator+(const BigReal& a, const BigReal& b) {
        auto [ma, mb, e] = aligned(a, b);
        return BigReal(ma + mb, e, std::max(a.prec_, b.prec_));
    }
    friend BigReal operator-(const BigReal& a, const BigReal& b) {
        auto [ma, mb, e] = aligned(a, b);
        return BigReal(ma - mb, e, std::max(a.prec_, b.prec_));
    }
    friend BigReal operator*(const BigReal& a, const BigReal& b) {
        return BigReal(a.mant_ * b.mant_, a.exp_ + b.exp_, std::max(a.prec_, b.prec_));
    }
    BigReal operator-() const { return BigReal(-mant_, exp_, prec_); }

    BigReal abs() const { return BigReal(mant_ < 0 ? Int(-mant_) : mant_, exp_, prec_); }

    /// Truncate so the quantum is at least 2^-prec; |rounded - this| <= 2^-prec.
    BigReal round(unsigned prec) const {
        if (exp_ >= -static_cast<long>(prec)) {
            BigReal r = *this;
            r.prec_ = prec;
            return r;
        }
        const long shift = -static_cast<long>(prec) - exp_;
        return BigReal(mant_ >> static_cast<unsigned long>(shift), -static_cast<long>(prec), prec);
    }

    /// Quotient with absolute error at most 2^-prec. b must be nonzero.
    static BigReal div(const BigReal& a, const BigReal& b, unsigned prec) {
        if (b.isZero()) throw ZeroDenominator("BigReal division by zero");
        // a/b = (ma / mb) * 2^(ea - eb); scale numerator so the result
        // quantum 2^(ea - eb - s) is at most 2^-prec.
        long s = static_cast<long>(prec) + a.exp_ - b.exp_;
        if (s < 0) s = 0;
        const Int num = a.mant_ << static_cast<unsigned long>(s);
        return BigReal(num / b.mant_, a.exp_ - b.exp_ - s, prec);
    }

    BigReal inv(unsigned prec) const { return div(fromInt(1, prec), *this, prec); }

    /// Quotient with relative error at most 2^-bits (needed where operands
    /// may be far below 1). b must be nonzero.
    static BigReal divRel(const BigReal& a, const BigReal& b, unsigned bits) {
        if (b.isZero()) throw ZeroDenominator("BigReal division by zero");
        if (a.isZero()) return BigReal(Int(0), 0, bits);
        const long gap = static_cast<long>(b.msbIndex()) - static_cast<long>(a.msbIndex());
        long s = static_cast<long>(bits) + gap + 4;
        if (s < 0) s = 0;
        const Int num = a.mant_ << static_cast<unsigned long>(s);
        return BigReal(num / b.mant_, a.exp_ - b.exp_ - s, bits);
    }

    /// Nonnegative square root with relative error at most 2^-bits.
    static BigReal sqrtRel(const BigReal& a, unsigned bits) {
        if (a.sign() < 0) throw NegativeInput("BigReal sqrt of negative value");
        if (a.isZero()) return BigReal(Int(0), 0, bits);
        long e = a.exp_;
        unsigned shift = 2 * bits;
        if ((e & 1) != 0) { // make the exponent even
            ++shift;
            --e;
        }
        const Int n = a.mant_ << shift;
        // result = isqrt(n) * 2^(e/2 - bits); n >= 2^(2 bits) makes the
        // floor-sqrt relative error at most 2^-bits
        return BigReal(boost::multiprecision::sqrt(n), e / 2 - static_cast<long>(bits), bits);
    }

    std::size_t msbIndex() const {
        return boost::multiprecision::msb(mant_ < 0 ? Int(-mant_) : mant_);
    }

    /// Nonnegative square root with |r*r - a| <= 2^-prec * max(1, a).
    static BigReal sqrt(const BigReal& a, unsigned prec) {
        if (a.sign() < 0) throw NegativeInput("BigReal sqrt of negative value");
        if (a.isZero()) return BigReal(Int(0), 0, prec);
        const long t = static_cast<long>(prec) + 4;
        // N = floor(a * 2^(2t)); r = floor(sqrt(N)) * 2^-t
        const long sh = 2 * t + a.exp_;
        Int n;
        if (sh >= 0) n = a.mant_ << static_cast<unsigned long>(sh);
        else n = a.mant_ >> static_cast<unsigned long>(-sh);
        if (n < 0) n = 0;
        return BigReal(boost::multiprecision::sqrt(n), -t, prec);
    }

    friend int cmp(const BigReal& a, const BigReal& b) {
        auto [ma, mb, e] = aligned(a, b);
        (void)e;
        if (ma < mb) return -1;
        if (ma > mb) return 1;
        return 0;
    }
    friend bool operator==(const BigReal& a, const BigReal& b) { return cmp(a, b) == 0; }
    friend bool operator<(const BigReal& a, const BigReal& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const BigReal& a, const BigReal& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const BigReal& a, const BigReal& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const BigReal& a, const BigReal& b) { return cmp(a, b) >= 0; }

    /// 2^-k as a comparison threshold.
    static BigReal ulp(unsigned k) { return BigReal(Int(1), -static_cast<long>(k), k); }

    std::string str(unsigned decimals = 12) const {
        // decimal rendering of mant * 2^exp, truncated
        Int ip, fp;
        bool neg = mant_ < 0;
        Int m = neg ? Int(-mant_) : mant_;
        Int pow10 = 1;
        for (unsigned i = 0; i < decimals; ++i) pow10 *= 10;
        Int scaled;
        if (exp_ >= 0) scaled = (m << static_cast<unsigned long>(exp_)) * pow10;
        else scaled = (m * pow10) >> static_cast<unsigned long>(-exp_);
        ip = scaled / pow10;
        fp = scaled % pow10;
        std::string f = fp.str();
        f.insert(f.begin(), decimals - f.size(), '0');
        while (f.size() > 1 && f.back() == '0') f.pop_back();
        return (neg ? "-" : "") + ip.str() + "." + f;
    }

  private:
    void normalise() {
        if (mant_ == 0) {
            exp_ = 0;
            return;
        }
        while ((mant_ & 1) == 0) {
            mant_ >>= 1;
            ++exp_;
        }
    }

    struct Aligned {
        Int ma, mb;
        long e;
    };
    static Aligned aligned(const BigReal& a, const BigReal& b) {
        if (a.exp_ == b.exp_) return {a.mant_, b.mant_, a.exp_};
        if (a.exp_ > b.exp_)
            return {a.mant_ << static_cast<unsigned long>(a.exp_ - b.exp_), b.mant_, b.exp_};
        return {a.mant_, b.mant_ << static_cast<unsigned long>(b.exp_ - a.exp_), a.exp_};
    }

    Int mant_;
    long exp_;
    unsigned prec_;
};

inline std::ostream& operator<<(std::ostream& os, const BigReal& r) { return os << r.str(); }

/// sqrt of a nonnegative rational as a BigReal; |result^2 - r| <= 2^-precision * max(1, r).
inline BigReal sqrtPos(const Rational& r, unsigned precision) {
    if (r < 0) throw NegativeInput("sqrtPos of negative rational: " + toString(r));
    return BigReal::sqrt(BigReal::fromRational(r, precision + 8), precision);
}

/// Complex dyadic number.
struct BigComplex {
    BigReal re;
    BigReal im;

    BigComplex() = default;
    BigComplex(BigReal r) : re(std::move(r)) {}
    BigComplex(BigReal r, BigReal i) : re(std::move(r)), im(std::move(i)) {}

    static BigComplex fromGaussian(const GaussianRational& a, unsigned prec) {
        return {BigReal::fromRational(a.re, prec), BigReal::fromRational(a.im, prec)};
    }

    bool isZero() const { return re.isZero() && im.isZero(); }

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    BigComplex operator-() const { return {-re, -im}; }
    friend bool operator==(const BigComplex& a, const BigComplex& b) {
        return a.re == b.re && a.im == b.im;
    }
};

inline BigComplex conj(const BigComplex& a) { return {a.re, -a.im}; }
inline BigReal normSq(const BigComplex& a) { return a.re * a.re + a.im * a.im; }
inline BigComplex round(const BigComplex& a, unsigned prec) {
    return {a.re.round(prec), a.im.round(prec)};
}
inline BigReal absUpper(const BigComplex& a) { return a.re.abs() + a.im.abs(); }
inline BigComplex scale(const BigComplex& a, const BigReal& s) { return {a.re * s, a.im * s}; }

inline std::ostream& operator<<(std::ostream& os, const BigComplex& a) {
    return os << a.re.str() << (a.im.sign() < 0 ? " - " : " + ") << a.im.abs().str() << "i";
}

} // namespace fcon

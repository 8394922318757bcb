#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <utility>

#include "fcon/contraction.hpp"
#include "fcon/semifield.hpp"

namespace fcon {

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}
inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e > 0) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}
inline std::uint64_t isqrt64(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

/// x^2 + y^2 = p for a prime p with p = 2 or p = 1 (mod 4), by the
/// Hermite-Serret gcd descent from a square root of -1 mod p.
inline std::pair<std::uint64_t, std::uint64_t> primeTwoSquares(std::uint64_t p) {
    if (p == 2) return {1, 1};
    std::uint64_t s = 0;
    for (std::uint64_t a = 2; a < p; ++a) {
        const std::uint64_t t = powmod(a, (p - 1) / 4, p);
        if (mulmod(t, t, p) == p - 1) {
            s = t;
            break;
        }
    }
    std::uint64_t a = p, b = s;
    const std::uint64_t bound = isqrt64(p);
    while (b > bound) {
        const std::uint64_t r = a % b;
        a = b;
        b = r;
    }
    return {b, isqrt64(p - b * b)};
}

/// Sum of two squares for c < 2^62 via factorisation: representable iff
/// every prime = 3 (mod 4) divides c to an even power. nullopt on
/// unrepresentable c or when trial division would run past its budget.
inline std::optional<std::pair<Int, Int>> twoSquares(std::uint64_t c) {
    if (c == 0) return std::make_pair(Int(0), Int(0));
    long long x = 1, y = 0;
    std::uint64_t scalar = 1;
    auto compose = [&](std::uint64_t a, std::uint64_t b) {
        const __int128 nx = static_cast<__int128>(x) * static_cast<long long>(a)
                            - static_cast<__int128>(y) * static_cast<long long>(b);
        const __int128 ny = static_cast<__int128>(x) * static_cast<long long>(b)
                            + static_cast<__int128>(y) * static_cast<long long>(a);
        x = static_cast<long long>(nx < 0 ? -nx : nx);
        y = static_cast<long long>(ny < 0 ? -ny : ny);
    };
    std::uint64_t rem = c;
    for (std::uint64_t p = 2; p * p <= rem; p += (p == 2 ? 1 : 2)) {
        if (p > 3000000) return std::nullopt; // factorisation budget
        if (rem % p != 0) continue;
        unsigned e = 0;
        while (rem % p == 0) {
            rem /= p;
            ++e;
        }
        if (p % 4 == 3) {
            if (e % 2 != 0) return std::nullopt;
            for (unsigned i = 0; i < e / 2; ++i) scalar *= p;
        } else {
            const auto [pa, pb] = primeTwoSquares(p);
            for (unsigned i = 0; i < e; ++i) compose(pa, pb);
        }
    }
    if (rem > 1) {
        if (rem % 4 == 3) return std::nullopt;
        const auto [pa, pb] = primeTwoSquares(rem);
        compose(pa, pb);
    }
    return std::make_pair(Int(static_cast<std::uint64_t>(x) * scalar),
                          Int(static_cast<std::uint64_t>(y) * scalar));
}

/// m = x^2 + y^2 + z^2 when m is not of the excluded form 4^a (8b + 7):
/// strip fours, skip the excluded residue, then descend on the largest
/// square and finish with the two-square factorisation.
inline std::optional<std::array<Int, 3>> threeSquares(std::uint64_t m) {
    if (m == 0) return std::array<Int, 3>{0, 0, 0};
    std::uint64_t twoPow = 1;
    while (m % 4 == 0) {
        m /= 4;
        twoPow *= 2;
    }
    if (m % 8 == 7) return std::nullopt;
    const std::uint64_t top = isqrt64(m);
    for (std::uint64_t xt = 0; xt <= top && xt < 20000; ++xt) {
        const std::uint64_t x = top - xt;
        const auto yz = twoSquares(m - x * x);
        if (yz)
            return std::array<Int, 3>{Int(x * twoPow), yz->first * twoPow,
                                      yz->second * twoPow};
    }
    return std::nullopt;
}

/// n = a^2 + b^2 + c^2 + d^2. Exists for every n >= 0 (Lagrange); residuals
/// are kept inside 64 bits, so only astronomically large n can fail.
inline std::optional<std::array<Int, 4>> fourSquares(const Int& n0) {
    if (n0 < 0) return std::nullopt;
    if (n0 == 0) return std::array<Int, 4>{0, 0, 0, 0};
    Int n = n0;
    Int twoPow = 1;
    while (n % 4 == 0) {
        n >>= 2;
        twoPow <<= 1;
    }
    Int w = boost::multiprecision::sqrt(n);
    for (int wt = 0; wt < 128 && w >= 0; ++wt, --w) {
        const Int m = n - w * w;
        if (m >= (Int(1) << 62)) continue;
        const auto xyz = threeSquares(static_cast<std::uint64_t>(m));
        if (xyz)
            return std::array<Int, 4>{w * twoPow, (*xyz)[0] * twoPow, (*xyz)[1] * twoPow,
                                      (*xyz)[2] * twoPow};
    }
    return std::nullopt;
}

} // namespace detail

/// A positive scalar: the squared norm x^dag x of a witness column vector
/// over Q(i). The value determines the scalar; the witness realises it.
struct PosScalar {
    Matrix witness; // column vector
    Rational value; // witness^dag witness

    static PosScalar fromWitness(Matrix col) {
        if (col.cols() > 1) throw DimensionMismatch("positive scalar witness must be a column");
        PosScalar p;
        p.value = frobeniusSq(col);
        p.witness = std::move(col);
        return p;
    }

    /// Synthesise a witness for a nonnegative rational: p/q = (a^2 + b^2 +
    /// c^2 + d^2)/q^2 gives a two-dimensional Gaussian witness. The four-
    /// square search is capped, so synthesis is partial.
    static std::optional<PosScalar> fromValue(const Rational& v) {
        if (v < 0) return std::nullopt;
        if (v == 0) return fromWitness(Matrix::zero(1, 1));
        const Int p = numerator(v), q = denominator(v);
        const auto sq = detail::fourSquares(p * q);
        if (!sq) return std::nullopt;
        Matrix w(2, 1);
        w(0, 0) = GaussianRational{Rational((*sq)[0], q), Rational((*sq)[1], q)};
        w(1, 0) = GaussianRational{Rational((*sq)[2], q), Rational((*sq)[3], q)};
        PosScalar out = fromWitness(std::move(w));
        // the decomposition is exact, so the value matches by construction
        return out;
    }

    bool isZero() const { return value == 0; }
};

struct PosScalarOrder {
    bool holds = false;
    std::optional<ConMorphism> contraction; // f with f . (larger) = (smaller)
};

/// p >= q in the positive-scalar order iff some contraction maps p's
/// witness to q's witness. Decided by the value comparison; when true the
/// rank-one witness f = y x^dag / (x^dag x) is returned, verified exactly
/// to be a contraction with f x = y.
inline PosScalarOrder posScalarGeq(const PosScalar& p, const PosScalar& q) {
    PosScalarOrder out;
    if (p.isZero()) {
        if (!q.isZero()) return out;
        out.holds = true;
        out.contraction = conZero(q.witness.rows(), p.witness.rows());
        return out;
    }
    if (q.value > p.value) return out;
    const Matrix f =
        scale(GaussianRational(Rational(1) / p.value), q.witness * dagger(p.witness));
    if (f * p.witness != q.witness) return out; // cannot happen
    out.holds = true;
    out.contraction = ConMorphism(f);
    return out;
}

inline bool posScalarLeq(const PosScalar& p, const PosScalar& q) {
    return posScalarGeq(q, p).holds;
}

/// The partially ordered strict semifield R+ of positive scalars. Addition
/// and multiplication act on witnesses through the direct-sum-with-diagonal
/// and tensor constructions, so every element stays realised by a vector.
struct PosScalars {
    using Elem = PosScalar;
    using Raw = Rational;

    std::string name() const { return "posscalars"; }
    Elem zero() const { return PosScalar::fromWitness(Matrix::zero(1, 1)); }
    Elem one() const { return PosScalar::fromWitness(Matrix::identity(1)); }
    /// (x (+) y) . Delta with Delta = (1; 1): the stacked witness.
    Elem add(const Elem& a, const Elem& b) const {
        return compress(PosScalar::fromWitness(vstack(a.witness, b.witness)));
    }
    /// x (x) y: the Kronecker witness (the unitor is the identity here).
    Elem mul(const Elem& a, const Elem& b) const {
        return compress(PosScalar::fromWitness(tensor(a.witness, b.witness)));
    }
    /// Witnesses grow under stacking and Kronecker products; a positive
    /// scalar is determined by its value, so oversized witnesses are
    /// replaced by freshly synthesised small ones when synthesis succeeds.
    static Elem compress(Elem e) {
        if (e.witness.rows() <= 8) return e;
        if (auto small = PosScalar::fromValue(e.value)) return *small;
        return e;
    }
    Elem inv(const Elem& a) const {
        if (a.isZero()) throw ZeroDenominator("inverse of zero positive scalar");
        return PosScalar::fromWitness(
            scale(GaussianRational(Rational(1) / a.value), a.witness));
    }
    bool eq(const Elem& a, const Elem& b) const { return a.value == b.value; }
    Ord compare(const Elem& a, const Elem& b) const {
        if (a.value == b.value) return Ord::Equal;
        return a.value < b.value ? Ord::Less : Ord::Greater;
    }
    std::optional<Elem> trySubtract(const Elem& a, const Elem& b) const {
        if (a.value < b.value) return std::nullopt;
        return PosScalar::fromValue(a.value - b.value);
    }
    Ord coneCompare(const Elem& a, const Rational& r) const {
        if (a.value == r) return Ord::Equal;
        return a.value < r ? Ord::Less : Ord::Greater;
    }
    bool approximate() const { return false; }
    bool closeEnough(const Elem& a, const Elem& b) const { return eq(a, b); }
    Elem sample(Rng& rng) const {
        if (rng.below(8) == 0) return zero();
        return PosScalar::fromWitness(randomMatrix(rng, 1 + rng.below(3), 1, 3, 3));
    }
    std::string show(const Elem& a) const {
        return toString(a.value) + " (witness dim " + std::to_string(a.witness.rows()) + ")";
    }

    Raw rawOf(const Elem& a) const { return a.value; }
    Raw rawAdd(const Raw& a, const Raw& b) const { return a + b; }
    Raw rawMul(const Raw& a, const Raw& b) const { return a * b; }
    std::optional<Raw> rawInv(const Raw& a) const {
        if (a == 0) return std::nullopt;
        return Rational(1) / a;
    }
    Elem infFromRaw(const Raw& r) const {
        auto e = PosScalar::fromValue(r);
        if (!e) throw std::invalid_argument("no witness synthesised for limit value");
        return *e;
    }
    Elem supFromRaw(const Raw& r) const { return infFromRaw(r); }
};

/// Supremum of a bounded increasing sequence of positive scalars, with the
/// preservation clause a + sup(b_n) = sup(a + b_n) asserted exactly.
inline Report supPreservedByAdd(const PosScalars& s, const PosScalar& a,
                                const MonotoneSeq<PosScalars>& b, const PosScalar& bound) {
    Report rep;
    rep.title = "suprema preserved by a + (.)";
    const PosScalar supB = supIncreasing(s, b, bound).value;
    const PosScalar lhs = s.add(a, supB);

    MonotoneSeq<PosScalars> shifted;
    shifted.gen = [&s, &a, &b](std::size_t n) { return s.add(a, b.gen(n)); };
    shifted.dir = Direction::Increasing;
    shifted.budget = b.budget;
    if (b.stabilisation) shifted.stabilisation = b.stabilisation;
    if (const auto raw = detail::rawLimitOf(s, b))
        shifted.rawLimit = s.rawAdd(s.rawOf(a), *raw);
    shifted.limit = lhs; // the same witness realises the shifted supremum
    const PosScalar supShifted = supIncreasing(s, shifted, s.add(a, bound)).value;

    rep.check("a + sup b_n = sup(a + b_n)", s.eq(lhs, supShifted),
              "lhs=" + s.show(lhs) + " rhs=" + s.show(supShifted));
    return rep;
}

} // namespace fcon

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "fcon/rational.hpp"

namespace fcon {

/// Deterministic source of test data. mt19937_64 output is specified by the
/// standard, and all derived draws below avoid std::uniform_*_distribution
/// so that the same seed yields the same stream on every platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t raw() { return eng_(); }

    /// Uniform in [0, n) by rejection-free modulo; n small in practice.
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : raw() % n; }

    long intIn(long lo, long hi) { // inclusive bounds
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (raw() & 1) != 0; }

    Rational rational(long maxAbsNum = 8, long maxDen = 8) {
        const long num = intIn(-maxAbsNum, maxAbsNum);
        const long den = intIn(1, maxDen);
        return Rational(Int(num), Int(den));
    }

    Rational positiveRational(long maxNum = 8, long maxDen = 8) {
        const long num = intIn(1, maxNum);
        const long den = intIn(1, maxDen);
        return Rational(Int(num), Int(den));
    }

    GaussianRational gaussian(long maxAbsNum = 4, long maxDen = 4) {
        return {rational(maxAbsNum, maxDen), rational(maxAbsNum, maxDen)};
    }

    /// Unit-modulus Gaussian rational from a Pythagorean triple, e.g. (3+4i)/5.
    GaussianRational unitScalar() {
        switch (below(6)) {
            case 0: return GaussianRational(Rational(1));
            case 1: return GaussianRational(Rational(-1));
            case 2: return {Rational(0), Rational(1)};
            case 3: return {Rational(0), Rational(-1)};
            default: {
                auto [c, s] = pythagorean();
                return coin() ? GaussianRational{c, s} : GaussianRational{c, -s};
            }
        }
    }

    /// Exact cos/sin pair with c^2 + s^2 = 1 from a random Pythagorean triple.
    std::pair<Rational, Rational> pythagorean() {
        const long m = intIn(2, 6);
        const long n = intIn(1, m - 1);
        const long a = m * m - n * n, b = 2 * m * n, c = m * m + n * n;
        return {Rational(Int(a), Int(c)), Rational(Int(b), Int(c))};
    }

  private:
    std::mt19937_64 eng_;
};

} // namespace fcon

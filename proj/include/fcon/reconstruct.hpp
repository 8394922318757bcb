#pragma once

#include <functional>
#include <optional>
#include <string>

#include "fcon/bigreal.hpp"
#include "fcon/rational.hpp"
#include "fcon/report.hpp"

namespace fcon {

/// An involutive field presented through callables, so the same machinery
/// runs over Q(i) with conjugation and over the approximate reals with the
/// trivial involution.
template <class E>
struct InvolutiveFieldModel {
    std::string name;
    std::function<E(const E&, const E&)> add, sub, mul;
    std::function<E(const E&)> invert, involution;
    std::function<bool(const E&, const E&)> eq;
    std::function<E(long long)> constant;
    std::function<E(const Rational&)> fromRational;
    // exact rational value of a self-adjoint element, when the model is exact
    std::function<std::optional<Rational>(const E&)> toRationalIfExact;
    std::function<bool(const E&)> isSelfAdjoint;
    std::function<std::string(const E&)> show;
};

inline InvolutiveFieldModel<GaussianRational> gaussianFieldModel() {
    InvolutiveFieldModel<GaussianRational> m;
    m.name = "gaussian-rationals";
    m.add = [](const GaussianRational& a, const GaussianRational& b) { return a + b; };
    m.sub = [](const GaussianRational& a, const GaussianRational& b) { return a - b; };
    m.mul = [](const GaussianRational& a, const GaussianRational& b) { return a * b; };
    m.invert = [](const GaussianRational& a) { return inverse(a); };
    m.involution = [](const GaussianRational& a) { return conj(a); };
    m.eq = [](const GaussianRational& a, const GaussianRational& b) { return a == b; };
    m.constant = [](long long v) { return GaussianRational(Rational(v)); };
    m.fromRational = [](const Rational& r) { return GaussianRational(r); };
    m.toRationalIfExact = [](const GaussianRational& a) -> std::optional<Rational> {
        if (!a.isReal()) return std::nullopt;
        return a.re;
    };
    m.isSelfAdjoint = [](const GaussianRational& a) { return a.isReal(); };
    m.show = [](const GaussianRational& a) { return toString(a); };
    return m;
}

inline InvolutiveFieldModel<Rational> rationalFieldModel() {
    InvolutiveFieldModel<Rational> m;
    m.name = "rationals";
    m.add = [](const Rational& a, const Rational& b) { return Rational(a + b); };
    m.sub = [](const Rational& a, const Rational& b) { return Rational(a - b); };
    m.mul = [](const Rational& a, const Rational& b) { return Rational(a * b); };
    m.invert = [](const Rational& a) { return Rational(Rational(1) / a); };
    m.involution = [](const Rational& a) { return a; };
    m.eq = [](const Rational& a, const Rational& b) { return a == b; };
    m.constant = [](long long v) { return Rational(v); };
    m.fromRational = [](const Rational& r) { return r; };
    m.toRationalIfExact = [](const Rational& a) -> std::optional<Rational> { return a; };
    m.isSelfAdjoint = [](const Rational&) { return true; };
    m.show = [](const Rational& a) { return toString(a); };
    return m;
}

inline InvolutiveFieldModel<BigReal> approxRealFieldModel(unsigned prec = 48) {
    InvolutiveFieldModel<BigReal> m;
    m.name = "approx-reals";
    m.add = [](const BigReal& a, const BigReal& b) { return a + b; };
    m.sub = [](const BigReal& a, const BigReal& b) { return a - b; };
    m.mul = [prec](const BigReal& a, const BigReal& b) { return (a * b).round(2 * prec); };
    m.invert = [prec](const BigReal& a) { return BigReal::divRel(BigReal::fromInt(1), a, 2 * prec); };
    m.involution = [](const BigReal& a) { return a; };
    m.eq = [prec](const BigReal& a, const BigReal& b) {
        return (a - b).abs() <= BigReal::ulp(prec);
    };
    m.constant = [](long long v) { return BigReal::fromInt(v); };
    m.fromRational = [prec](const Rational& r) { return BigReal::fromRational(r, 2 * prec); };
    m.toRationalIfExact = [](const BigReal& a) -> std::optional<Rational> {
        return a.toRational(); // dyadics are exact rationals
    };
    m.isSelfAdjoint = [](const BigReal&) { return true; };
    m.show = [](const BigReal& a) { return a.str(); };
    return m;
}

/// Membership and evaluation for a positive cone inside a field model: the
/// cone contains 0, 1 and every a^dag a, and phi maps it order-embeddingly
/// into the nonnegative reals.
template <class E>
struct PositiveConeOracle {
    std::function<bool(const E&)> membership;
    std::function<BigReal(const E&)> phi;
    std::function<E(const BigReal&)> phiInverse; // optional; empty when unavailable
};

/// The extension of phi from the cone to all self-adjoint elements:
/// 4 psi(a) = phi((a + 2)^2) - phi(a^2 + 4).
template <class E>
std::function<BigReal(const E&)> buildPsi(const InvolutiveFieldModel<E>& f,
                                          const PositiveConeOracle<E>& cone) {
    return [f, cone](const E& a) {
        const E two = f.constant(2), four = f.constant(4);
        const E left = f.mul(f.add(a, two), f.add(a, two));
        const E right = f.add(f.mul(a, a), four);
        if (!cone.membership(left) || !cone.membership(right))
            throw ConeViolation("(a+2)^2 or a^2+4 rejected by the cone");
        const BigReal diff = cone.phi(left) - cone.phi(right);
        return BigReal::div(diff, BigReal::fromInt(4), 96);
    };
}

/// The inverse-direction map 4 upsilon(a) = phi^{-1}((a+2)^2) - phi^{-1}(a^2+4),
/// available when the oracle supplies phi^{-1}.
template <class E>
std::function<E(const BigReal&)> buildUpsilon(const InvolutiveFieldModel<E>& f,
                                              const PositiveConeOracle<E>& cone) {
    if (!cone.phiInverse) throw ConeViolation("upsilon needs phi^{-1}");
    return [f, cone](const BigReal& a) {
        const BigReal two = BigReal::fromInt(2), four = BigReal::fromInt(4);
        const E left = cone.phiInverse((a + two) * (a + two));
        const E right = cone.phiInverse(a * a + four);
        const E diff = f.sub(left, right);
        return f.mul(diff, f.invert(f.constant(4)));
    };
}

/// The two exact polynomial identities behind additivity and
/// multiplicativity of psi, checked over the rationals.
inline Report polyIdentityCheck(const std::vector<std::pair<Rational, Rational>>& samples) {
    Report rep;
    rep.title = "psi homomorphism identities over Q";
    bool additive = true, multiplicative = true;
    std::string witness;
    for (const auto& [a, b] : samples) {
        const Rational lhsAdd = (a + b + 2) * (a + b + 2) + (a * a + 4) + (b * b + 4);
        const Rational rhsAdd =
            (a + 2) * (a + 2) + (b + 2) * (b + 2) + (a + b) * (a + b) + Rational(4);
        if (lhsAdd != rhsAdd) {
            additive = false;
            witness = "a=" + toString(a) + " b=" + toString(b);
        }
        const Rational ab = a * b;
        const Rational lhsMul = Rational(4) * (ab + 2) * (ab + 2)
                                + (a + 2) * (a + 2) * (b * b + 4)
                                + (a * a + 4) * (b + 2) * (b + 2);
        const Rational rhsMul = (a + 2) * (a + 2) * (b + 2) * (b + 2)
                                + (a * a + 4) * (b * b + 4)
                                + Rational(4) * (ab * ab + 4);
        if (lhsMul != rhsMul) {
            multiplicative = false;
            witness = "a=" + toString(a) + " b=" + toString(b);
        }
    }
    rep.check("(a+b+2)^2 + (a^2+4) + (b^2+4) = (a+2)^2 + (b+2)^2 + (a+b)^2 + 4", additive,
              witness);
    rep.check("4(ab+2)^2 + (a+2)^2(b^2+4) + (a^2+4)(b+2)^2 = "
              "(a+2)^2(b+2)^2 + (a^2+4)(b^2+4) + 4(a^2 b^2+4)",
              multiplicative, witness);
    return rep;
}

/// Field order from a positive cone: a <= b iff b - a in P. Checks the
/// partial-order laws and the five partially-ordered-field axioms on
/// samples, including the decomposition a = (a + 1/2)^2 - (a^2 + 1/4).
template <class E>
Report fieldOrderFromCone(const InvolutiveFieldModel<E>& f,
                          const std::function<bool(const E&)>& inCone,
                          const std::vector<E>& samples) {
    Report rep;
    rep.title = "partially ordered field from the cone: " + f.name;
    auto leq = [&](const E& a, const E& b) { return inCone(f.sub(b, a)); };
    const E zero = f.constant(0), one = f.constant(1);

    bool reflexive = true, antisymmetric = true, transitive = true;
    bool addCompat = true, mulCompat = true, invCompat = true, decomposition = true;
    std::string witness;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const E& a = samples[i];
        const E& b = samples[(i * 7 + 1) % samples.size()];
        const E& c = samples[(i * 13 + 2) % samples.size()];
        if (!leq(a, a)) { reflexive = false; witness = f.show(a); }
        if (leq(a, b) && leq(b, a) && !f.eq(a, b)) { antisymmetric = false; witness = f.show(a); }
        if (leq(a, b) && leq(b, c) && !leq(a, c)) { transitive = false; witness = f.show(a); }
        if (leq(a, b) && !leq(f.add(a, c), f.add(b, c))) { addCompat = false; witness = f.show(a); }
        if (leq(zero, a) && leq(zero, b) && !leq(zero, f.mul(a, b))) {
            mulCompat = false;
            witness = f.show(a);
        }
        if (leq(zero, a) && !f.eq(a, zero) && !leq(zero, f.invert(a))) {
            invCompat = false;
            witness = f.show(a);
        }
        // a = (a + 1/2)^2 - (a^2 + 1/4) with both parts in the cone
        const E half = f.mul(one, f.invert(f.constant(2)));
        const E quarter = f.invert(f.constant(4));
        const E p = f.mul(f.add(a, half), f.add(a, half));
        const E q = f.add(f.mul(a, a), quarter);
        if (!inCone(p) || !inCone(q) || !f.eq(a, f.sub(p, q))) {
            decomposition = false;
            witness = f.show(a);
        }
    }
    rep.check("reflexive", reflexive, witness);
    rep.check("antisymmetric", antisymmetric, witness);
    rep.check("transitive", transitive, witness);
    rep.check("(i) a <= b implies a + c <= b + c", addCompat, witness);
    rep.check("(ii) products of positives are positive", mulCompat, witness);
    rep.check("(iii) 0 <= 1", leq(zero, one), "");
    rep.check("(iv) inverses of positives are positive", invCompat, witness);
    rep.check("(v) a = (a + 1/2)^2 - (a^2 + 1/4) splits over the cone", decomposition, witness);
    return rep;
}

/// a in P iff a + 2^-k in P for each k up to the budget (with the numeric
/// margin carried by the model's equality).
template <class E>
Report epsilonClosureCheck(const InvolutiveFieldModel<E>& f,
                           const std::function<bool(const E&)>& inCone,
                           const std::vector<E>& samples, unsigned budget = 20) {
    Report rep;
    rep.title = "epsilon closure of the cone: " + f.name;
    bool pass = true;
    std::string witness;
    for (const E& a : samples) {
        if (!f.isSelfAdjoint(a)) continue;
        bool allShifted = true;
        E eps = f.invert(f.constant(2));
        for (unsigned k = 1; k <= budget; ++k) {
            if (!inCone(f.add(a, eps))) {
                allShifted = false;
                break;
            }
            eps = f.mul(eps, f.invert(f.constant(2)));
        }
        if (allShifted != inCone(a)) {
            pass = false;
            witness = f.show(a);
            break;
        }
    }
    rep.check("a in P iff a + 2^-k in P for k <= " + std::to_string(budget), pass, witness);
    return rep;
}

/// Result of complexification: the imaginary unit constructed from a
/// non-self-adjoint u, the self-adjoint coordinates of each element, and
/// the extension psiC(a + b i) = phi(a) + phi(b) i.
template <class E>
struct Complexification {
    E imaginaryUnit;
    std::optional<E> r; // the scalar with i = (u - u^dag)/r, when exact
    std::function<std::pair<E, E>(const E&)> decompose;
    std::function<BigComplex(const E&)> psiC;
};

/// Complexify a field model whose involution is nontrivial at u. For the
/// Gaussian rationals the square root r = sqrt((u - u^dag)^dag (u - u^dag))
/// is exactly rational, so everything stays exact.
template <class E>
Complexification<E> complexify(const InvolutiveFieldModel<E>& f, const E& u,
                               const std::function<BigReal(const E&)>& phi, unsigned precision) {
    if (f.eq(u, f.involution(u)))
        throw SelfAdjointInput("complexify expects u with u != u^dag");
    const E d = f.sub(u, f.involution(u)); // anti-self-adjoint, nonzero
    const E dNormSq = f.mul(f.involution(d), d);

    Complexification<E> out;
    // the exact route: r rational with r^2 = d^dag d (always available over
    // the Gaussian rationals, where d^dag d = 4 im(u)^2)
    const std::optional<Rational> exact = f.toRationalIfExact(dNormSq);
    Rational rExact;
    if (exact && rationalSqrt(*exact, rExact)) {
        const E r = f.fromRational(rExact);
        out.r = r;
        out.imaginaryUnit = f.mul(d, f.invert(r));
    } else {
        // approximate route: pull the BigReal square root of phi(d^dag d)
        // back as a dyadic rational at the working precision
        const BigReal r = BigReal::sqrtRel(phi(dNormSq), precision + 16);
        out.imaginaryUnit = f.mul(d, f.invert(f.fromRational(r.toRational())));
    }
    const E i = out.imaginaryUnit;
    const E two = f.constant(2);
    auto decompose = [f, i, two](const E& a) {
        const E p = f.mul(f.add(a, f.involution(a)), f.invert(two));               // (a + a^dag)/2
        const E q = f.mul(f.mul(f.sub(a, f.involution(a)), f.invert(two)),
                          f.invert(i)); // (a - a^dag)/(2i)
        return std::make_pair(p, q);
    };
    out.decompose = decompose;
    out.psiC = [phi, decompose](const E& a) {
        const auto [p, q] = decompose(a);
        return BigComplex{phi(p), phi(q)};
    };
    return out;
}

} // namespace fcon

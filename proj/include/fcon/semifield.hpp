#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fcon/bigreal.hpp"
#include "fcon/random.hpp"
#include "fcon/rational.hpp"
#include "fcon/report.hpp"

namespace fcon {

enum class Ord { Less, Equal, Greater, Incomparable };

inline bool leqOrd(Ord o) { return o == Ord::Less || o == Ord::Equal; }
inline bool geqOrd(Ord o) { return o == Ord::Greater || o == Ord::Equal; }

/// A partially ordered strict semifield instance provides
///   Elem                  carrier elements
///   Raw                   unrestricted limit data (componentwise reals)
/// together with zero/one/add/mul/inv/eq/compare/trySubtract on elements,
/// the same operations rawAdd/rawMul/rawInv on raw data (no carrier
/// restriction), and infFromRaw/supFromRaw encoding the instance's rule for
/// turning a componentwise real limit into the carrier extremum. The pair
/// semifield pinches mixed limits like (1, 0) to (0, 0); that pinch is what
/// breaks infima compatibility there.

// ---------------------------------------------------------------------------
// Rational semifield Q+
// ---------------------------------------------------------------------------

struct QPlus {
    using Elem = Rational;
    using Raw = Rational;

    std::string name() const { return "qplus"; }
    Elem zero() const { return Rational(0); }
    Elem one() const { return Rational(1); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw ZeroDenominator("inverse of zero");
        return Rational(1) / a;
    }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    Ord compare(const Elem& a, const Elem& b) const {
        if (a == b) return Ord::Equal;
        return a < b ? Ord::Less : Ord::Greater;
    }
    std::optional<Elem> trySubtract(const Elem& a, const Elem& b) const {
        if (a < b) return std::nullopt;
        return a - b;
    }
    Ord coneCompare(const Elem& a, const Rational& r) const { return compare(a, r); }
    bool approximate() const { return false; }
    bool closeEnough(const Elem& a, const Elem& b) const { return a == b; }
    Elem sample(Rng& rng) const { return rng.coin() ? rng.positiveRational() : Rational(0); }
    std::string show(const Elem& a) const { return toString(a); }

    Raw rawOf(const Elem& a) const { return a; }
    Raw rawAdd(const Raw& a, const Raw& b) const { return a + b; }
    Raw rawMul(const Raw& a, const Raw& b) const { return a * b; }
    std::optional<Raw> rawInv(const Raw& a) const {
        if (a == 0) return std::nullopt;
        return Rational(1) / a;
    }
    Elem infFromRaw(const Raw& r) const { return r; }
    Elem supFromRaw(const Raw& r) const { return r; }
};

// ---------------------------------------------------------------------------
// Approximate real semifield R+ over exact dyadics
// ---------------------------------------------------------------------------

struct RPlusApprox {
    unsigned prec = 40;

    using Elem = BigReal;
    using Raw = Rational;

    std::string name() const { return "rplus"; }
    Elem zero() const { return BigReal(); }
    Elem one() const { return BigReal::fromInt(1); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem mul(const Elem& a, const Elem& b) const { return (a * b).round(2 * prec); }
    Elem inv(const Elem& a) const {
        if (a.isZero()) throw ZeroDenominator("inverse of zero");
        return BigReal::divRel(one(), a, 2 * prec);
    }
    bool eq(const Elem& a, const Elem& b) const { return cmp(a, b) == 0; }
    Ord compare(const Elem& a, const Elem& b) const {
        const int c = cmp(a, b);
        return c == 0 ? Ord::Equal : (c < 0 ? Ord::Less : Ord::Greater);
    }
    std::optional<Elem> trySubtract(const Elem& a, const Elem& b) const {
        if (a < b) return std::nullopt;
        return a - b;
    }
    Ord coneCompare(const Elem& a, const Rational& r) const {
        const Rational d = a.toRational() - r;
        if (d == 0) return Ord::Equal;
        return d < 0 ? Ord::Less : Ord::Greater;
    }
    bool approximate() const { return true; }
    bool closeEnough(const Elem& a, const Elem& b) const {
        return (a - b).abs() <= BigReal::ulp(prec);
    }
    Elem sample(Rng& rng) const {
        return BigReal::fromRational(rng.positiveRational(16, 16), prec + 8);
    }
    std::string show(const Elem& a) const { return a.str(); }

    Raw rawOf(const Elem& a) const { return a.toRational(); }
    Raw rawAdd(const Raw& a, const Raw& b) const { return a + b; }
    Raw rawMul(const Raw& a, const Raw& b) const { return a * b; }
    std::optional<Raw> rawInv(const Raw& a) const {
        if (a == 0) return std::nullopt;
        return Rational(1) / a;
    }
    Elem infFromRaw(const Raw& r) const { return BigReal::fromRational(r, 2 * prec); }
    Elem supFromRaw(const Raw& r) const { return BigReal::fromRational(r, 2 * prec); }
};

// ---------------------------------------------------------------------------
// Tropical semifield TR+: usual multiplication and order, addition is max
// ---------------------------------------------------------------------------

struct Tropical {
    using Elem = Rational; // rational carrier of the tropical positive reals
    using Raw = Rational;

    std::string name() const { return "tropical"; }
    Elem zero() const { return Rational(0); }
    Elem one() const { return Rational(1); }
    Elem add(const Elem& a, const Elem& b) const { return a > b ? a : b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw ZeroDenominator("inverse of zero");
        return Rational(1) / a;
    }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    Ord compare(const Elem& a, const Elem& b) const {
        if (a == b) return Ord::Equal;
        return a < b ? Ord::Less : Ord::Greater;
    }
    std::optional<Elem> trySubtract(const Elem& a, const Elem& b) const {
        // max(b, x) = a: solvable iff b <= a, canonical solution a
        if (b > a) return std::nullopt;
        return a;
    }
    Ord coneCompare(const Elem& a, const Rational& r) const { return compare(a, r); }
    bool approximate() const { return false; }
    bool closeEnough(const Elem& a, const Elem& b) const { return a == b; }
    Elem sample(Rng& rng) const { return rng.coin() ? rng.positiveRational() : Rational(0); }
    std::string show(const Elem& a) const { return toString(a); }

    Raw rawOf(const Elem& a) const { return a; }
    Raw rawAdd(const Raw& a, const Raw& b) const { return a > b ? a : b; }
    Raw rawMul(const Raw& a, const Raw& b) const { return a * b; }
    std::optional<Raw> rawInv(const Raw& a) const {
        if (a == 0) return std::nullopt;
        return Rational(1) / a;
    }
    Elem infFromRaw(const Raw& r) const { return r; }
    Elem supFromRaw(const Raw& r) const { return r; }
};

// ---------------------------------------------------------------------------
// The pair semifield S: {(x, y) : x, y > 0} + {(0, 0)}, componentwise
// operations and order. Monotone sequentially complete and suprema
// compatible but not infima compatible, and it embeds in no field.
// ---------------------------------------------------------------------------

struct PairElement {
    Rational x;
    Rational y;

    PairElement() : x(0), y(0) {}
    PairElement(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {
        const bool positive = x > 0 && y > 0;
        const bool zero = x == 0 && y == 0;
        if (!positive && !zero)
            throw std::invalid_argument("pair element needs x,y > 0 or x = y = 0");
    }
    bool isZero() const { return x == 0; }
    friend bool operator==(const PairElement&, const PairElement&) = default;
};

struct PairSemifield {
    using Elem = PairElement;
    using Raw = std::pair<Rational, Rational>; // unrestricted componentwise data

    std::string name() const { return "pairs"; }
    Elem zero() const { return {}; }
    Elem one() const { return {Rational(1), Rational(1)}; }
    Elem add(const Elem& a, const Elem& b) const { return {a.x + b.x, a.y + b.y}; }
    Elem mul(const Elem& a, const Elem& b) const { return {a.x * b.x, a.y * b.y}; }
    Elem inv(const Elem& a) const {
        if (a.isZero()) throw ZeroDenominator("inverse of zero");
        return {Rational(1) / a.x, Rational(1) / a.y};
    }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    Ord compare(const Elem& a, const Elem& b) const {
        if (a == b) return Ord::Equal;
        if (a.x <= b.x && a.y <= b.y) return Ord::Less;
        if (a.x >= b.x && a.y >= b.y) return Ord::Greater;
        return Ord::Incomparable;
    }
    std::optional<Elem> trySubtract(const Elem& a, const Elem& b) const {
        const Rational dx = a.x - b.x, dy = a.y - b.y;
        if ((dx > 0 && dy > 0) || (dx == 0 && dy == 0)) return PairElement{dx, dy};
        return std::nullopt;
    }
    Ord coneCompare(const Elem& a, const Rational& r) const {
        return compare(a, r == 0 ? zero() : Elem{r, r});
    }
    bool approximate() const { return false; }
    bool closeEnough(const Elem& a, const Elem& b) const { return a == b; }
    Elem sample(Rng& rng) const {
        if (rng.below(8) == 0) return zero();
        return {rng.positiveRational(), rng.positiveRational()};
    }
    std::string show(const Elem& a) const {
        return "(" + toString(a.x) + ", " + toString(a.y) + ")";
    }

    Raw rawOf(const Elem& a) const { return {a.x, a.y}; }
    Raw rawAdd(const Raw& a, const Raw& b) const {
        return {a.first + b.first, a.second + b.second};
    }
    Raw rawMul(const Raw& a, const Raw& b) const {
        return {a.first * b.first, a.second * b.second};
    }
    std::optional<Raw> rawInv(const Raw& a) const {
        if (a.first == 0 || a.second == 0) return std::nullopt;
        return Raw{Rational(1) / a.first, Rational(1) / a.second};
    }
    /// The greatest lower bound within the carrier: a componentwise limit
    /// with any zero (or mixed) component collapses to (0, 0).
    Elem infFromRaw(const Raw& r) const {
        if (r.first > 0 && r.second > 0) return {r.first, r.second};
        return {};
    }
    Elem supFromRaw(const Raw& r) const { return {r.first, r.second}; }
};

// ---------------------------------------------------------------------------
// Generic helpers
// ---------------------------------------------------------------------------

/// n-fold sum of one by double-and-add.
template <class S>
typename S::Elem fromNat(const S& s, unsigned long long n) {
    typename S::Elem acc = s.zero();
    typename S::Elem doubling = s.one();
    while (n > 0) {
        if (n & 1) acc = s.add(acc, doubling);
        doubling = s.add(doubling, doubling);
        n >>= 1;
    }
    return acc;
}

template <class S>
typename S::Elem power(const S& s, const typename S::Elem& a, unsigned long long n) {
    typename S::Elem acc = s.one();
    typename S::Elem sq = a;
    while (n > 0) {
        if (n & 1) acc = s.mul(acc, sq);
        sq = s.mul(sq, sq);
        n >>= 1;
    }
    return acc;
}

// tolerance pad for the approximate instance; zero elsewhere
template <class S>
typename S::Elem orderTolerance(const S& s) {
    return s.zero();
}
inline BigReal orderTolerance(const RPlusApprox& s) { return BigReal::ulp(s.prec); }

// ---------------------------------------------------------------------------
// Monotone sequences and their extrema
// ---------------------------------------------------------------------------

enum class Direction { Increasing, Decreasing };

/// Finite truncation of a monotone sequence (1-based index). Exact
/// instances need a stabilisation index, an explicit limit element, or a
/// generator-supplied raw limit (the componentwise real limit, which the
/// instance converts by its own extremum rule); the approximate real
/// instance may instead detect a Cauchy tail. Budget exhaustion never
/// guesses.
template <class S>
struct MonotoneSeq {
    std::function<typename S::Elem(std::size_t)> gen;
    Direction dir = Direction::Decreasing;
    std::size_t budget = 64;
    std::optional<std::size_t> stabilisation;
    std::optional<typename S::Elem> limit;
    std::optional<typename S::Raw> rawLimit;
};

enum class LimitKind { Stabilised, ClosedForm, CauchyApprox };

template <class S>
struct LimitValue {
    typename S::Elem value;
    LimitKind kind;
};

namespace detail {

template <class S>
void checkMonotone(const S& s, const MonotoneSeq<S>& seq) {
    for (std::size_t n = 1; n + 1 <= seq.budget; ++n) {
        const Ord o = s.compare(seq.gen(n + 1), seq.gen(n));
        const bool ok = seq.dir == Direction::Decreasing ? leqOrd(o) : geqOrd(o);
        if (!ok)
            throw NotMonotone("sequence not monotone at index " + std::to_string(n) + " ("
                              + s.show(seq.gen(n)) + " -> " + s.show(seq.gen(n + 1)) + ")");
    }
}

template <class S>
std::optional<LimitValue<S>> detectLimit(const S& s, const MonotoneSeq<S>& seq) {
    const bool dec = seq.dir == Direction::Decreasing;
    auto boundHalf = [&](const typename S::Elem& candidate) {
        for (std::size_t n = 1; n <= seq.budget; ++n) {
            const Ord o = s.compare(candidate, seq.gen(n));
            if (!(dec ? leqOrd(o) : geqOrd(o))) return false;
        }
        return true;
    };
    if (seq.stabilisation) {
        const std::size_t k = std::min(*seq.stabilisation, seq.budget);
        const typename S::Elem v = seq.gen(k);
        bool stable = true;
        for (std::size_t n = k; n <= seq.budget && stable; ++n)
            if (!s.eq(seq.gen(n), v)) stable = false;
        if (stable) return LimitValue<S>{v, LimitKind::Stabilised};
    }
    if (seq.limit && boundHalf(*seq.limit))
        return LimitValue<S>{*seq.limit, LimitKind::ClosedForm};
    if (seq.rawLimit) {
        try {
            const typename S::Elem v =
                dec ? s.infFromRaw(*seq.rawLimit) : s.supFromRaw(*seq.rawLimit);
            if (boundHalf(v)) return LimitValue<S>{v, LimitKind::ClosedForm};
        } catch (const std::invalid_argument&) {
            // raw limit outside the carrier and no instance rule for it
        }
    }
    { // spontaneous exact stabilisation over the tail half
        const typename S::Elem v = seq.gen(seq.budget);
        bool stable = true;
        for (std::size_t n = std::max<std::size_t>(1, seq.budget / 2); n < seq.budget && stable;
             ++n)
            if (!s.eq(seq.gen(n), v)) stable = false;
        if (stable) return LimitValue<S>{v, LimitKind::Stabilised};
    }
    if (s.approximate()
        && s.closeEnough(seq.gen(seq.budget), seq.gen(std::max<std::size_t>(1, seq.budget / 2))))
        return LimitValue<S>{seq.gen(seq.budget), LimitKind::CauchyApprox};
    return std::nullopt;
}

/// Raw limit of a sequence: explicit raw, or the raw of an explicit or
/// stabilised limit.
template <class S>
std::optional<typename S::Raw> rawLimitOf(const S& s, const MonotoneSeq<S>& seq) {
    if (seq.rawLimit) return seq.rawLimit;
    if (seq.limit) return s.rawOf(*seq.limit);
    if (seq.stabilisation) return s.rawOf(seq.gen(std::min(*seq.stabilisation, seq.budget)));
    return std::nullopt;
}

} // namespace detail

/// Infimum of a decreasing sequence; throws NotMonotone or
/// NoLimitWithinBudget. Never guesses.
template <class S>
LimitValue<S> infDecreasing(const S& s, const MonotoneSeq<S>& seq) {
    if (seq.dir != Direction::Decreasing)
        throw NotMonotone("infDecreasing expects a decreasing sequence");
    detail::checkMonotone(s, seq);
    const auto lim = detail::detectLimit(s, seq);
    if (!lim)
        throw NoLimitWithinBudget("no stabilisation, closed form, or Cauchy tail within budget "
                                  + std::to_string(seq.budget));
    return *lim;
}

/// Supremum of a bounded increasing sequence.
template <class S>
LimitValue<S> supIncreasing(const S& s, const MonotoneSeq<S>& seq,
                            const typename S::Elem& bound) {
    if (seq.dir != Direction::Increasing)
        throw NotMonotone("supIncreasing expects an increasing sequence");
    detail::checkMonotone(s, seq);
    for (std::size_t n = 1; n <= seq.budget; ++n)
        if (!leqOrd(s.compare(seq.gen(n), s.add(bound, orderTolerance(s)))))
            throw NotBounded("sequence exceeds the bound at index " + std::to_string(n));
    const auto lim = detail::detectLimit(s, seq);
    if (!lim)
        throw NoLimitWithinBudget("no stabilisation, closed form, or Cauchy tail within budget "
                                  + std::to_string(seq.budget));
    return *lim;
}

// ---------------------------------------------------------------------------
// Axiom checking
// ---------------------------------------------------------------------------

template <class S>
Report checkSemifieldAxioms(const S& s, Rng& rng, std::size_t samples = 1000) {
    Report rep;
    rep.title = "semifield axioms: " + s.name();
    using E = typename S::Elem;
    const E zero = s.zero(), one = s.one();

    bool addComm = true, addAssoc = true, addUnit = true;
    bool mulComm = true, mulAssoc = true, mulUnit = true;
    bool distrib = true, annihil = true, invLaw = true, strict = true;
    bool addMono = true, mulMono = true, orderLaws = true;
    std::string witness;

    auto note = [&](const E& a, const E& b, const E& c) {
        return "a=" + s.show(a) + " b=" + s.show(b) + " c=" + s.show(c);
    };
    // approximate instances round their products, so their laws hold at
    // the instance tolerance rather than exactly
    auto same = [&](const E& a, const E& b) {
        return s.approximate() ? s.closeEnough(a, b) : s.eq(a, b);
    };

    for (std::size_t t = 0; t < samples; ++t) {
        const E a = s.sample(rng), b = s.sample(rng), c = s.sample(rng);
        if (!same(s.add(a, b), s.add(b, a))) { addComm = false; witness = note(a, b, c); }
        if (!same(s.add(s.add(a, b), c), s.add(a, s.add(b, c)))) { addAssoc = false; witness = note(a, b, c); }
        if (!same(s.add(a, zero), a)) { addUnit = false; witness = note(a, b, c); }
        if (!same(s.mul(a, b), s.mul(b, a))) { mulComm = false; witness = note(a, b, c); }
        if (!same(s.mul(s.mul(a, b), c), s.mul(a, s.mul(b, c)))) { mulAssoc = false; witness = note(a, b, c); }
        if (!same(s.mul(a, one), a)) { mulUnit = false; witness = note(a, b, c); }
        if (!same(s.mul(a, s.add(b, c)), s.add(s.mul(a, b), s.mul(a, c)))) { distrib = false; witness = note(a, b, c); }
        if (!same(s.mul(a, zero), zero)) { annihil = false; witness = note(a, b, c); }
        if (!s.eq(a, zero)) {
            if (!same(s.mul(a, s.inv(a)), one)) { invLaw = false; witness = s.show(a); }
        }
        if (s.eq(s.add(one, a), zero)) { strict = false; witness = s.show(a); }
        // order axioms on the sampled triple
        const Ord ab = s.compare(a, b);
        if (leqOrd(ab)) {
            if (!leqOrd(s.compare(s.add(a, c), s.add(b, c)))) { addMono = false; witness = note(a, b, c); }
            if (!leqOrd(s.compare(s.mul(a, c), s.mul(b, c)))) { mulMono = false; witness = note(a, b, c); }
        }
        if (s.compare(a, a) != Ord::Equal) { orderLaws = false; witness = s.show(a); }
        if (ab == Ord::Less && s.compare(b, a) != Ord::Greater) { orderLaws = false; witness = note(a, b, c); }
        if (ab == Ord::Less && leqOrd(s.compare(c, a)) && !leqOrd(s.compare(c, b))) {
            orderLaws = false;
            witness = note(a, b, c);
        }
    }
    if (s.trySubtract(zero, one).has_value()) { strict = false; witness = "1 has an additive inverse"; }

    rep.check("addition: commutative monoid with 0", addComm && addAssoc && addUnit, witness);
    rep.check("multiplication: commutative monoid with 1", mulComm && mulAssoc && mulUnit, witness);
    rep.check("multiplication distributes over addition", distrib, witness);
    rep.check("zero annihilates", annihil, witness);
    rep.check("nonzero elements are invertible", invLaw, witness);
    rep.check("strict: 1 has no additive inverse", strict, witness);
    rep.check("addition is monotonic", addMono, witness);
    rep.check("multiplication is monotonic", mulMono, witness);
    rep.check("one is positive: 1 >= 0", leqOrd(s.compare(zero, one)), "compare(0, 1) not <=");
    rep.check("partial order laws", orderLaws, witness);
    return rep;
}

/// a <= b and a != 0 imply b != 0 and 1/b <= 1/a, on given pairs.
template <class S>
Report inversionAntimonotoneCheck(
    const S& s, const std::vector<std::pair<typename S::Elem, typename S::Elem>>& pairs) {
    Report rep;
    rep.title = "inversion is anti-monotonic: " + s.name();
    std::size_t applicable = 0;
    bool pass = true;
    std::string witness;
    for (const auto& [a, b] : pairs) {
        if (!leqOrd(s.compare(a, b)) || s.eq(a, s.zero())) continue;
        ++applicable;
        if (s.eq(b, s.zero())) {
            pass = false;
            witness = "b = 0 with a = " + s.show(a);
            break;
        }
        if (!leqOrd(s.compare(s.inv(b), s.add(s.inv(a), orderTolerance(s))))) {
            pass = false;
            witness = "a=" + s.show(a) + " b=" + s.show(b);
            break;
        }
    }
    rep.check("1/b <= 1/a for sampled a <= b, a != 0 (" + std::to_string(applicable)
                  + " applicable pairs)",
              pass, witness);
    return rep;
}

// ---------------------------------------------------------------------------
// Geometric series order decision (s_n = u^n + ... + u + 1)
// ---------------------------------------------------------------------------

enum class OrderVsOne { LeqOne, GeqOne, EqualOne, Inconclusive };

struct GeometricDecision {
    OrderVsOne verdict = OrderVsOne::Inconclusive;
    bool identityHeld = false; // u + 1/s_n = u^{n+1}/s_n + 1 at every step
    bool infEvidenceHeld = false;
    std::size_t steps = 0;
    std::string note;
};

/// Decide how u relates to 1 through the geometric-series machinery: the
/// partial sums s_n are formed, the step identity is asserted at every n,
/// and the verdict comes from additive solvability of u + x = 1 and
/// 1 + x = u. The solution of the former plays the role of inf 1/s_n and is
/// checked to be a lower bound of that decreasing sequence with
/// u + inf(1/s_n) = 1; its absence on both sides is reported inconclusive.
template <class S>
GeometricDecision geometricOrderDecide(const S& s, const typename S::Elem& u,
                                       std::size_t budget = 64) {
    using E = typename S::Elem;
    if (s.eq(u, s.zero())) throw std::invalid_argument("geometricOrderDecide expects u != 0");
    GeometricDecision out;
    out.identityHeld = true;
    const E one = s.one();

    E sum = one; // s_0
    E pw = one;  // u^0
    for (std::size_t n = 0; n < budget; ++n) {
        const E pwNext = s.mul(pw, u); // u^{n+1}
        const E lhs = s.add(u, s.inv(sum));
        const E rhs = s.add(s.mul(pwNext, s.inv(sum)), one);
        const bool ok = s.approximate() ? s.closeEnough(lhs, rhs) : s.eq(lhs, rhs);
        if (!ok) {
            out.identityHeld = false;
            out.note = "step identity failed at n = " + std::to_string(n);
        }
        sum = s.add(sum, pwNext);
        pw = pwNext;
        out.steps = n + 1;
    }

    const std::optional<E> below = s.trySubtract(one, u); // x with u + x = 1
    const std::optional<E> above = s.trySubtract(u, one); // x with 1 + x = u
    if (below && above) {
        out.verdict = OrderVsOne::EqualOne;
        out.infEvidenceHeld = true;
        return out;
    }
    if (below) {
        bool lower = true;
        E sn = one;
        E p2 = one;
        for (std::size_t n = 0; n < budget && lower; ++n) {
            if (!leqOrd(s.compare(*below, s.add(s.inv(sn), orderTolerance(s))))) lower = false;
            p2 = s.mul(p2, u);
            sn = s.add(sn, p2);
        }
        out.infEvidenceHeld = lower;
        out.verdict = lower ? OrderVsOne::LeqOne : OrderVsOne::Inconclusive;
        return out;
    }
    if (above) {
        out.infEvidenceHeld = true;
        out.verdict = OrderVsOne::GeqOne;
        return out;
    }
    out.note = "u + x = 1 and 1 + x = u both unsolvable (incomparable with 1)";
    return out;
}

/// First n with a^n > b, for a > 1.
template <class S>
std::optional<std::size_t> archimedeanWitness(const S& s, const typename S::Elem& a,
                                              const typename S::Elem& b,
                                              std::size_t budget = 64) {
    if (s.compare(a, s.one()) != Ord::Greater)
        throw std::invalid_argument("archimedeanWitness expects a > 1");
    typename S::Elem pw = a;
    for (std::size_t n = 1; n <= budget; ++n) {
        if (s.compare(pw, b) == Ord::Greater) return n;
        pw = s.mul(pw, a);
    }
    return std::nullopt;
}

/// inf(a + u^n) = a for a != 0, u < 1: the lower-bound half is checked on
/// the budget and the tail is squeezed below a + 2^-k through the
/// multiplicative Archimedean witness for 1/u.
template <class S>
Report infSumGeomCheck(const S& s, const typename S::Elem& a, const typename S::Elem& u,
                       std::size_t budget = 64) {
    Report rep;
    rep.title = "inf(a + u^n) = a on " + s.name();
    using E = typename S::Elem;
    if (s.eq(a, s.zero())) {
        rep.add(CheckItem::skip("precondition", "a = 0"));
        return rep;
    }
    if (s.compare(u, s.one()) != Ord::Less) {
        rep.add(CheckItem::skip("precondition", "u < 1 fails"));
        return rep;
    }
    if (s.eq(u, s.zero())) {
        rep.check("degenerate u = 0: terms equal a from n >= 1", s.eq(s.add(a, s.mul(u, u)), a));
        return rep;
    }
    bool lower = true, monotone = true;
    E prev = s.add(a, u);
    E pw = u;
    for (std::size_t n = 1; n <= budget; ++n) {
        const E term = s.add(a, pw);
        if (!leqOrd(s.compare(a, term))) lower = false;
        if (n > 1 && !leqOrd(s.compare(term, s.add(prev, orderTolerance(s))))) monotone = false;
        prev = term;
        pw = s.mul(pw, u);
    }
    rep.check("sequence decreasing on budget", monotone);
    rep.check("a is a lower bound on budget", lower);
    // squeeze the tail below a + 2^-k as far as the budget allows; a k
    // whose Archimedean witness lies beyond the budget is inconclusive
    bool squeeze = true;
    unsigned reached = 0;
    std::string note;
    for (unsigned k = 1; k <= 8 && squeeze; ++k) {
        const E eps = power(s, s.inv(fromNat(s, 2)), k);
        const auto n = archimedeanWitness(s, s.inv(u), s.inv(eps), budget);
        if (!n) {
            note = "witness for u^n < 2^-" + std::to_string(k) + " exceeds budget";
            break;
        }
        if (!leqOrd(s.compare(s.add(a, power(s, u, *n)),
                              s.add(s.add(a, eps), orderTolerance(s))))) {
            squeeze = false;
            note = "term not within 2^-" + std::to_string(k);
        }
        reached = k;
    }
    if (reached == 0 && squeeze)
        rep.add(CheckItem::skip("tail squeeze", note));
    else
        rep.check("tail squeezed below a + 2^-k for k <= " + std::to_string(reached), squeeze,
                  note);
    return rep;
}

// ---------------------------------------------------------------------------
// Compatibility of extrema with multiplication and addition
// ---------------------------------------------------------------------------

namespace detail {

template <class S>
MonotoneSeq<S> derivedSeq(Direction dir, std::size_t budget,
                          std::function<typename S::Elem(std::size_t)> gen,
                          std::optional<typename S::Raw> rawLimit) {
    MonotoneSeq<S> r;
    r.gen = std::move(gen);
    r.dir = dir;
    r.budget = budget;
    r.rawLimit = std::move(rawLimit);
    return r;
}

template <class S>
bool extremaEqual(const S& s, const typename S::Elem& a, const typename S::Elem& b) {
    return s.approximate() ? s.closeEnough(a, b) : s.eq(a, b);
}

} // namespace detail

/// Items of the compatibility-with-multiplication proposition on a pair of
/// same-direction monotone sequences. Derived sequences get their raw
/// limits from real limit algebra on the operands' raw limits; the
/// instance's own extremum rule then decides the carrier value. Items with
/// failing side conditions or unavailable extrema are reported skipped.
template <class S>
Report checkMultCompatibility(const S& s, const MonotoneSeq<S>& a, const MonotoneSeq<S>& b) {
    Report rep;
    rep.title = "compatibility with multiplication: " + s.name();
    using E = typename S::Elem;
    using R = typename S::Raw;
    if (a.dir != b.dir) throw NotMonotone("sequences must share a direction");
    detail::checkMonotone(s, a);
    detail::checkMonotone(s, b);

    const std::optional<R> rawA = detail::rawLimitOf(s, a), rawB = detail::rawLimitOf(s, b);
    const std::optional<R> rawAB =
        rawA && rawB ? std::optional<R>(s.rawMul(*rawA, *rawB)) : std::nullopt;
    const auto prodGen = [&](std::size_t n) { return s.mul(a.gen(n), b.gen(n)); };

    auto tryInf = [&](const MonotoneSeq<S>& q) -> std::optional<E> {
        try {
            return infDecreasing(s, q).value;
        } catch (const NoLimitWithinBudget&) {
            return std::nullopt;
        }
    };
    auto trySup = [&](const MonotoneSeq<S>& q, const E& bound) -> std::optional<E> {
        try {
            return supIncreasing(s, q, bound).value;
        } catch (const NoLimitWithinBudget&) {
            return std::nullopt;
        }
    };

    if (a.dir == Direction::Decreasing) {
        const std::optional<E> infA = tryInf(a), infB = tryInf(b);
        const auto ab = detail::derivedSeq<S>(Direction::Decreasing, a.budget, prodGen, rawAB);
        const std::optional<E> infAB = infA && infB ? tryInf(ab) : std::nullopt;
        if (infA && infB && infAB)
            rep.check("(1) inf a_n b_n = inf a_n inf b_n",
                      detail::extremaEqual(s, *infAB, s.mul(*infA, *infB)),
                      "lhs=" + s.show(*infAB) + " rhs=" + s.show(s.mul(*infA, *infB)));
        else
            rep.add(CheckItem::skip("(1)", "infima unavailable within budget"));
        if (infA && infB && infAB && !s.eq(*infB, s.zero()))
            rep.check("(2) inf a_n = inf(a_n b_n) / inf b_n",
                      detail::extremaEqual(s, *infA, s.mul(*infAB, s.inv(*infB))));
        else
            rep.add(CheckItem::skip("(2)", "side condition inf b_n != 0 unavailable"));
        if (infB && !s.eq(*infB, s.zero())) {
            bool upper = true;
            for (std::size_t n = 1; n <= b.budget && upper; ++n)
                upper = leqOrd(s.compare(s.inv(b.gen(n)),
                                         s.add(s.inv(*infB), orderTolerance(s))));
            const auto invSeq = detail::derivedSeq<S>(
                Direction::Increasing, b.budget,
                [&s, &b](std::size_t n) { return s.inv(b.gen(n)); },
                rawB ? s.rawInv(*rawB) : std::nullopt);
            const std::optional<E> supInv = trySup(invSeq, s.inv(*infB));
            rep.check("(3) sup 1/b_n = 1/inf b_n", upper
                          && (!supInv || detail::extremaEqual(s, *supInv, s.inv(*infB))));
        } else {
            rep.add(CheckItem::skip("(3)", "side condition inf b_n != 0 unavailable"));
        }
    } else {
        const std::optional<E> boundA =
            a.limit ? a.limit : std::optional<E>(a.gen(a.budget));
        const std::optional<E> boundB =
            b.limit ? b.limit : std::optional<E>(b.gen(b.budget));
        const std::optional<E> supA = trySup(a, *boundA), supB = trySup(b, *boundB);
        if (supA && supB) {
            const auto ab = detail::derivedSeq<S>(Direction::Increasing, a.budget, prodGen, rawAB);
            const std::optional<E> supAB = trySup(ab, s.mul(*supA, *supB));
            if (supAB)
                rep.check("(4) sup a_n b_n = sup a_n sup b_n",
                          detail::extremaEqual(s, *supAB, s.mul(*supA, *supB)),
                          "lhs=" + s.show(*supAB) + " rhs=" + s.show(s.mul(*supA, *supB)));
            else
                rep.add(CheckItem::skip("(4)", "sup of the product unavailable"));
            if (supAB && !s.eq(b.gen(1), s.zero()) && !s.eq(*supB, s.zero()))
                rep.check("(5) sup a_n = sup(a_n b_n) / sup b_n",
                          detail::extremaEqual(s, *supA, s.mul(*supAB, s.inv(*supB))));
            else
                rep.add(CheckItem::skip("(5)", "side condition b_1 != 0 unavailable"));
            if (!s.eq(b.gen(1), s.zero())) {
                const auto invSeq = detail::derivedSeq<S>(
                    Direction::Decreasing, b.budget,
                    [&s, &b](std::size_t n) { return s.inv(b.gen(n)); },
                    rawB ? s.rawInv(*rawB) : std::nullopt);
                const std::optional<E> infInv = tryInf(invSeq);
                if (infInv && !s.eq(*supB, s.zero()))
                    rep.check("(6) inf 1/b_n = 1/sup b_n",
                              detail::extremaEqual(s, *infInv, s.inv(*supB)));
                else
                    rep.add(CheckItem::skip("(6)", "inf of inverses unavailable"));
            } else {
                rep.add(CheckItem::skip("(6)", "b_1 = 0"));
            }
        } else {
            rep.add(CheckItem::skip("(4)-(6)", "component suprema unavailable in budget"));
        }
    }
    return rep;
}

/// The four compatibility-with-addition conditions, plus the strengthened
/// infima-compatible version when an infimum is zero.
template <class S>
Report checkAddCompatibility(const S& s, const MonotoneSeq<S>& incA, const MonotoneSeq<S>& incB,
                             const MonotoneSeq<S>& decC, const MonotoneSeq<S>& decD) {
    Report rep;
    rep.title = "compatibility with addition: " + s.name();
    using E = typename S::Elem;
    using R = typename S::Raw;
    const E one = s.one();
    const R rawOne = s.rawOf(one);

    auto tryInf = [&](const MonotoneSeq<S>& q) -> std::optional<E> {
        try {
            return infDecreasing(s, q).value;
        } catch (const NoLimitWithinBudget&) {
            return std::nullopt;
        }
    };
    auto trySup = [&](const MonotoneSeq<S>& q, const E& bound) -> std::optional<E> {
        try {
            return supIncreasing(s, q, bound).value;
        } catch (const NoLimitWithinBudget&) {
            return std::nullopt;
        }
    };

    const std::optional<R> rawB = detail::rawLimitOf(s, incB);
    const std::optional<E> supB =
        trySup(incB, incB.limit ? *incB.limit : incB.gen(incB.budget));
    if (supB) {
        const auto onePlus = detail::derivedSeq<S>(
            Direction::Increasing, incB.budget,
            [&s, &incB, one](std::size_t n) { return s.add(one, incB.gen(n)); },
            rawB ? std::optional<R>(s.rawAdd(rawOne, *rawB)) : std::nullopt);
        const std::optional<E> got = trySup(onePlus, s.add(one, *supB));
        if (got)
            rep.check("(1) sup(1 + b_n) = 1 + sup b_n",
                      detail::extremaEqual(s, *got, s.add(one, *supB)),
                      "lhs=" + s.show(*got) + " rhs=" + s.show(s.add(one, *supB)));
        else
            rep.add(CheckItem::skip("(1)", "sup of 1 + b_n unavailable"));
    } else {
        rep.add(CheckItem::skip("(1)", "sup b_n unavailable"));
    }

    const std::optional<R> rawA = detail::rawLimitOf(s, incA);
    const std::optional<E> supA =
        trySup(incA, incA.limit ? *incA.limit : incA.gen(incA.budget));
    if (supA && supB) {
        const auto sum = detail::derivedSeq<S>(
            Direction::Increasing, incA.budget,
            [&s, &incA, &incB](std::size_t n) { return s.add(incA.gen(n), incB.gen(n)); },
            rawA && rawB ? std::optional<R>(s.rawAdd(*rawA, *rawB)) : std::nullopt);
        const std::optional<E> got = trySup(sum, s.add(*supA, *supB));
        if (got)
            rep.check("(2) sup(a_n + b_n) = sup a_n + sup b_n",
                      detail::extremaEqual(s, *got, s.add(*supA, *supB)));
        else
            rep.add(CheckItem::skip("(2)", "sup of the sum unavailable"));
    } else {
        rep.add(CheckItem::skip("(2)", "component suprema unavailable"));
    }

    const std::optional<R> rawD = detail::rawLimitOf(s, decD);
    const std::optional<E> infD = tryInf(decD);
    if (infD) {
        const auto onePlusD = detail::derivedSeq<S>(
            Direction::Decreasing, decD.budget,
            [&s, &decD, one](std::size_t n) { return s.add(one, decD.gen(n)); },
            rawD ? std::optional<R>(s.rawAdd(rawOne, *rawD)) : std::nullopt);
        const std::optional<E> got = tryInf(onePlusD);
        const bool zeroInf = s.eq(*infD, s.zero());
        if (got) {
            const bool equal = detail::extremaEqual(s, *got, s.add(one, *infD));
            const std::string witness =
                "lhs=" + s.show(*got) + " rhs=" + s.show(s.add(one, *infD));
            if (zeroInf)
                rep.check("(3') strengthened at inf = 0: inf(1 + b_n) = 1 + inf b_n", equal,
                          witness);
            else
                rep.check("(3) inf(1 + b_n) = 1 + inf b_n (inf != 0)", equal, witness);
        } else {
            rep.add(CheckItem::skip("(3)", "inf of 1 + b_n unavailable"));
        }
    } else {
        rep.add(CheckItem::skip("(3)", "inf b_n unavailable"));
    }

    const std::optional<R> rawC = detail::rawLimitOf(s, decC);
    const std::optional<E> infC = tryInf(decC);
    if (infC && infD) {
        const auto sum = detail::derivedSeq<S>(
            Direction::Decreasing, decC.budget,
            [&s, &decC, &decD](std::size_t n) { return s.add(decC.gen(n), decD.gen(n)); },
            rawC && rawD ? std::optional<R>(s.rawAdd(*rawC, *rawD)) : std::nullopt);
        const std::optional<E> got = tryInf(sum);
        const bool proviso = !s.eq(*infC, s.zero()) && !s.eq(*infD, s.zero());
        if (got)
            rep.check(proviso ? "(4) inf(c_n + d_n) = inf c_n + inf d_n (infs != 0)"
                              : "(4') strengthened at inf = 0",
                      detail::extremaEqual(s, *got, s.add(*infC, *infD)),
                      "lhs=" + s.show(*got) + " rhs=" + s.show(s.add(*infC, *infD)));
        else
            rep.add(CheckItem::skip("(4)", "inf of the sum unavailable"));
    } else {
        rep.add(CheckItem::skip("(4)", "component infima unavailable"));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// The pair counterexample, exactly as displayed in the source material
// ---------------------------------------------------------------------------

inline Report pairCounterexampleSuite(std::size_t budget = 64) {
    Report rep;
    rep.title = "pair semifield counterexample";
    const PairSemifield s;
    using E = PairElement;

    // b_n = (1, 1/n) decreases; its componentwise limit (1, 0) leaves the
    // carrier, so the infimum in S is (0, 0)
    MonotoneSeq<PairSemifield> b;
    b.gen = [](std::size_t n) { return E{Rational(1), Rational(Int(1), Int(n))}; };
    b.dir = Direction::Decreasing;
    b.budget = budget;
    b.rawLimit = std::pair<Rational, Rational>{Rational(1), Rational(0)};
    const E infB = infDecreasing(s, b).value;
    rep.check("inf (1, 1/n) = (0, 0)", s.eq(infB, E{}));

    const E onePlusInf = s.add(s.one(), infB);
    rep.check("1 + inf b_n = (1, 1)", s.eq(onePlusInf, s.one()));

    MonotoneSeq<PairSemifield> onePlusB;
    onePlusB.gen = [&s, &b](std::size_t n) { return s.add(s.one(), b.gen(n)); };
    onePlusB.dir = Direction::Decreasing;
    onePlusB.budget = budget;
    onePlusB.rawLimit = s.rawAdd(s.rawOf(s.one()), *b.rawLimit);
    const E infOnePlus = infDecreasing(s, onePlusB).value;
    rep.check("inf(1 + b_n) = inf(2, 1 + 1/n) = (2, 1)",
              s.eq(infOnePlus, E{Rational(2), Rational(1)}));
    rep.check("infima compatibility fails: (2, 1) != (1, 1)", !s.eq(infOnePlus, onePlusInf));

    // field-embedding failure: expanding ((2,1)-(1,1))((2,1)-(2,2)) in any
    // enclosing field gives (4,1) - (2,1) - (4,2) + (2,2) = (6,3) - (6,3)
    const E a{Rational(2), Rational(1)}, u{Rational(1), Rational(1)}, v{Rational(2), Rational(2)};
    const E positive = s.add(s.mul(a, a), s.mul(u, v)); // (4,1) + (2,2)
    const E negative = s.add(s.mul(a, u), s.mul(a, v)); // (2,1) + (4,2)
    rep.check("product expansion sides both equal (6, 3)",
              s.eq(positive, E{Rational(6), Rational(3)})
                  && s.eq(negative, E{Rational(6), Rational(3)}));
    rep.check("so the expanded product is (0, 0) in any enclosing field",
              s.eq(positive, negative));
    rep.check("yet neither factor is zero: (2,1) != (1,1) and (2,1) != (2,2)",
              !s.eq(a, u) && !s.eq(a, v));

    // monotone sequential completeness on sampled decreasing sequences
    Rng rng(2024);
    bool complete = true;
    for (int t = 0; t < 100 && complete; ++t) {
        const Rational px = rng.positiveRational(), py = rng.positiveRational();
        const Rational qx = rng.positiveRational(8, 1), qy = rng.positiveRational(8, 1);
        const int mode = static_cast<int>(rng.below(3));
        MonotoneSeq<PairSemifield> seq;
        seq.dir = Direction::Decreasing;
        seq.budget = 40;
        switch (mode) {
            case 0: // both components decay to positive limits
                seq.gen = [=](std::size_t n) {
                    return E{px + qx / Int(n), py + qy / Int(n)};
                };
                seq.rawLimit = std::pair<Rational, Rational>{px, py};
                break;
            case 1: // second component goes to zero: infimum is (0, 0)
                seq.gen = [=](std::size_t n) { return E{px, py / Int(n)}; };
                seq.rawLimit = std::pair<Rational, Rational>{px, Rational(0)};
                break;
            default: // constant
                seq.gen = [=](std::size_t) { return E{px, py}; };
                seq.stabilisation = 1;
                break;
        }
        try {
            const E inf = infDecreasing(s, seq).value;
            complete = leqOrd(s.compare(inf, seq.gen(1)));
        } catch (const NoLimitWithinBudget&) {
            complete = false;
        }
    }
    rep.check("monotone sequentially complete on 100 sampled sequences", complete);
    return rep;
}

// ---------------------------------------------------------------------------
// Evaluation into the reals by rational bisection
// ---------------------------------------------------------------------------

/// Bisection over the rational cone, mirroring the sandwiching
/// sup a_n = r = inf b_n with rational a_n, b_n. Requires the instance to
/// be totally ordered against rational multiples of one; an Incomparable
/// verdict anywhere aborts.
template <class S>
BigReal evaluateToReal(const S& s, const typename S::Elem& elem, unsigned precision) {
    const auto cc = [&](const Rational& r) {
        const Ord o = s.coneCompare(elem, r);
        if (o == Ord::Incomparable)
            throw IncomparableEncountered("element incomparable with " + toString(r));
        return o;
    };
    if (s.eq(s.add(s.one(), s.one()), s.one()))
        throw IncomparableEncountered("rational cone collapses: 1 + 1 = 1");
    if (cc(Rational(0)) == Ord::Equal) return BigReal();

    Rational lo(0), hi(1);
    std::size_t doublings = 0;
    while (cc(hi) == Ord::Greater) {
        lo = hi;
        hi *= 2;
        if (++doublings > 256) throw NotBounded("element exceeds 2^256");
    }
    if (cc(hi) == Ord::Equal) return BigReal::fromRational(hi, precision);
    const Rational quantum = Rational(1, Int(1) << (precision + 1));
    while (hi - lo > quantum) {
        const Rational mid = (lo + hi) / 2;
        const Ord o = cc(mid);
        if (o == Ord::Equal) return BigReal::fromRational(mid, precision + 2);
        (o == Ord::Greater ? lo : hi) = mid;
    }
    return BigReal::fromRational((lo + hi) / 2, precision + 2);
}

} // namespace fcon

#include "kron/rational.hpp"

#include <limits>

namespace kron {

Integer floor_int(const Rational& q) {
    Integer n = numerator(q), d = denominator(q);
    Integer t = n / d;
    if (n < 0 && t * d != n) --t;
    return t;
}

Integer ceil_int(const Rational& q) { return -floor_int(-q); }

namespace {
Index to_index(const Integer& n, const char* what) {
    if (n < 0) throw InvariantError(std::string(what) + ": negative value");
    if (n > std::numeric_limits<Index>::max())
        throw InvariantError(std::string(what) + ": index overflow");
    return static_cast<Index>(n);
}
}  // namespace

Index floor_index(const Rational& q) { return to_index(floor_int(q), "floor_index"); }
Index ceil_index(const Rational& q) { return to_index(ceil_int(q), "ceil_index"); }

Rational pow_rational(const Rational& q, unsigned e) {
    Rational r = 1, base = q;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

Rational pow2(long k) {
    if (k >= 0) return Rational(Integer(1) << k);
    return Rational(1, Integer(1) << (-k));
}

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer p(s.substr(0, slash)), q(s.substr(slash + 1));
        if (q == 0) throw InvariantError("parse_rational: zero denominator in '" + s + "'");
        return Rational(p, q);
    } catch (const std::exception& e) {
        throw InvariantError("parse_rational: cannot parse '" + s + "'");
    }
}

std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

namespace {

// Largest r with r^b <= n, by binary search on the bit length.
Integer integer_nth_root(const Integer& n, unsigned b) {
    Integer lo = 0, hi = Integer(1) << (msb(n) / b + 1);
    while (lo < hi) {
        Integer mid = (lo + hi + 1) / 2;
        if (pow(mid, b) <= n)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

}  // namespace

Enclosure nth_root(const Rational& x, unsigned b, unsigned prec_bits) {
    if (x < 0) throw InvariantError("nth_root: negative radicand");
    if (b == 0) throw InvariantError("nth_root: zeroth root");
    if (x == 0 || x == 1 || b == 1) return {x, x};

    // Exact when numerator and denominator are both perfect b-th powers.
    Integer rn = integer_nth_root(numerator(x), b);
    if (pow(rn, b) == numerator(x)) {
        Integer rd = integer_nth_root(denominator(x), b);
        if (pow(rd, b) == denominator(x)) {
            Rational r(rn, rd);
            return {r, r};
        }
    }

    Rational lo = 0, hi = x < 1 ? Rational(1) : x;
    // Width halves each bisection; dyadic midpoints keep pow cheap.
    Rational target = pow2(-static_cast<long>(prec_bits));
    while (hi - lo > target) {
        Rational mid = (lo + hi) / 2;
        Rational mp = pow_rational(mid, b);
        if (mp == x) return {mid, mid};
        (mp < x ? lo : hi) = mid;
    }
    return {lo, hi};
}

Enclosure pow_enclosure(const Rational& x, const Rational& q, unsigned prec_bits) {
    if (q <= 0) throw InvariantError("pow_enclosure: exponent must be positive");
    if (x < 0) throw InvariantError("pow_enclosure: negative base");
    Integer a = numerator(q), b = denominator(q);
    if (a > std::numeric_limits<unsigned>::max() || b > std::numeric_limits<unsigned>::max())
        throw InvariantError("pow_enclosure: exponent too large");
    Rational xa = pow_rational(x, static_cast<unsigned>(a));
    if (b == 1) return {xa, xa};
    return nth_root(xa, static_cast<unsigned>(b), prec_bits);
}

}  // namespace kron

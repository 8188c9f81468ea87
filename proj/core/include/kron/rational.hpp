#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace kron {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Index = std::uint64_t;

/// Base class for all recoverable library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An evaluation exceeded its declared budget (counterfunction iterates,
/// sequence prefixes, enumeration fan-out).
struct BudgetError : Error {
    using Error::Error;
};

/// A declared invariant failed on actual data (weights not nondecreasing,
/// probabilities not summing to one, misdeclared growth witness, ...).
struct InvariantError : Error {
    using Error::Error;
};

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

/// Largest integer <= q. Requires q >= 0 when converting to Index.
Integer floor_int(const Rational& q);
Integer ceil_int(const Rational& q);

/// floor/ceil clamped into Index; throws InvariantError on negative input
/// or overflow.
Index floor_index(const Rational& q);
Index ceil_index(const Rational& q);

/// q^e for a nonnegative integer exponent.
Rational pow_rational(const Rational& q, unsigned e);

/// 2^k for possibly negative k.
Rational pow2(long k);

/// Parses "p/q" or "p"; throws InvariantError on malformed input or q == 0.
Rational parse_rational(const std::string& s);
std::string to_string(const Rational& q);

/// Closed interval [lo, hi] containing an (in general irrational) value.
/// Exact values are represented with lo == hi.
struct Enclosure {
    Rational lo;
    Rational hi;

    bool exact() const { return lo == hi; }
    Rational width() const { return hi - lo; }
};

/// Enclosure of x^(1/b) for x >= 0, integer b >= 1, with width <= 2^-prec_bits.
/// Endpoints are dyadic (denominator a power of two) unless the root is hit
/// exactly.
Enclosure nth_root(const Rational& x, unsigned b, unsigned prec_bits = 64);

/// Enclosure of x^q for x >= 0 and rational exponent q > 0.
Enclosure pow_enclosure(const Rational& x, const Rational& q, unsigned prec_bits = 64);

}  // namespace kron

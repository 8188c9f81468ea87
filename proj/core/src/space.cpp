#include "kron/space.hpp"

namespace kron {

SpaceDescriptor reals() { return {1, NormKind::Two, 2, 2, 1}; }
SpaceDescriptor euclidean(Index dim) { return {dim, NormKind::Two, 2, 2, 1}; }
SpaceDescriptor max_norm(Index dim) { return {dim, NormKind::Max, 2, 1, 1}; }
SpaceDescriptor one_norm(Index dim) { return {dim, NormKind::One, 1, 1, 1}; }

Vector zero_vector(const SpaceDescriptor& d) { return Vector(d.dimension, Rational(0)); }

namespace {
void check_dims(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw InvariantError("vector dimension mismatch");
}
Rational abs_r(const Rational& x) { return x < 0 ? Rational(-x) : x; }
}  // namespace

Vector add(const Vector& a, const Vector& b) {
    check_dims(a, b);
    Vector r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vector sub(const Vector& a, const Vector& b) {
    check_dims(a, b);
    Vector r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vector scale(const Rational& c, const Vector& v) {
    Vector r(v);
    for (auto& x : r) x *= c;
    return r;
}

namespace {
Rational norm_one(const Vector& v) {
    Rational s = 0;
    for (const auto& x : v) s += abs_r(x);
    return s;
}
Rational norm_max(const Vector& v) {
    Rational m = 0;
    for (const auto& x : v) {
        Rational a = abs_r(x);
        if (a > m) m = a;
    }
    return m;
}
Rational norm_two_sq(const Vector& v) {
    Rational s = 0;
    for (const auto& x : v) s += x * x;
    return s;
}
}  // namespace

Enclosure norm(const SpaceDescriptor& d, const Vector& v, unsigned prec_bits) {
    if (v.size() != d.dimension) throw InvariantError("norm: dimension mismatch");
    switch (d.norm) {
        case NormKind::One: {
            Rational n = norm_one(v);
            return {n, n};
        }
        case NormKind::Max: {
            Rational n = norm_max(v);
            return {n, n};
        }
        case NormKind::Two: {
            if (d.dimension == 1) {
                Rational n = abs_r(v[0]);
                return {n, n};
            }
            return nth_root(norm_two_sq(v), 2, prec_bits);
        }
        case NormKind::General: {
            if (d.dimension == 1) {
                Rational n = abs_r(v[0]);
                return {n, n};
            }
            // (sum |x_i|^q)^(1/q), outward rounding on both root stages
            Rational lo = 0, hi = 0;
            for (const auto& x : v) {
                Enclosure e = pow_enclosure(abs_r(x), d.norm_exponent, prec_bits + 8);
                lo += e.lo;
                hi += e.hi;
            }
            Rational inv_q(denominator(d.norm_exponent), numerator(d.norm_exponent));
            Enclosure l = pow_enclosure(lo, inv_q, prec_bits + 8);
            Enclosure h = pow_enclosure(hi, inv_q, prec_bits + 8);
            return {l.lo, h.hi};
        }
    }
    throw InvariantError("norm: unknown kind");
}

Rational norm_pow_exact(const SpaceDescriptor& d, const Vector& v, unsigned r) {
    if (r == 0) return 1;
    Enclosure e = norm(d, v);
    if (e.exact()) return pow_rational(e.lo, r);
    if (d.norm == NormKind::Two && r % 2 == 0)
        return pow_rational(norm_two_sq(v), r / 2);
    throw InvariantError("norm_pow_exact: value is not exactly representable");
}

namespace {
// Decides norm(v) CMP eps exactly where the norm or its square is rational.
enum class Cmp { Less, Le, Ge };
bool norm_cmp(const SpaceDescriptor& d, const Vector& v, const Rational& eps, Cmp c) {
    auto decide = [&](const Rational& lhs, const Rational& rhs) {
        switch (c) {
            case Cmp::Less: return lhs < rhs;
            case Cmp::Le: return lhs <= rhs;
            case Cmp::Ge: return lhs >= rhs;
        }
        return false;
    };
    if (d.norm == NormKind::Two && d.dimension > 1) {
        if (eps < 0) return decide(Rational(1), Rational(0));  // norm >= 0 > eps
        return decide(norm_two_sq(v), eps * eps);
    }
    Enclosure e = norm(d, v);
    if (e.exact()) return decide(e.lo, eps);
    for (unsigned bits = 64; bits <= 4096; bits *= 2) {
        e = norm(d, v, bits);
        if (e.hi < eps) return c != Cmp::Ge;
        if (e.lo > eps) return c == Cmp::Ge;
        if (e.exact()) return decide(e.lo, eps);
    }
    throw InvariantError("norm comparison undecided at 4096 bits (value may equal threshold)");
}
}  // namespace

bool norm_less(const SpaceDescriptor& d, const Vector& v, const Rational& eps) {
    return norm_cmp(d, v, eps, Cmp::Less);
}
bool norm_le(const SpaceDescriptor& d, const Vector& v, const Rational& eps) {
    return norm_cmp(d, v, eps, Cmp::Le);
}
bool norm_ge(const SpaceDescriptor& d, const Vector& v, const Rational& eps) {
    return norm_cmp(d, v, eps, Cmp::Ge);
}

Vector VectorSequence::at(Index n) const {
    if (!term_) throw InvariantError("VectorSequence: empty");
    if (n > budget_) throw BudgetError("VectorSequence: index " + std::to_string(n) + " beyond budget");
    return term_(n);
}

VectorSequence scalar_sequence(std::function<Rational(Index)> term, Index budget) {
    return VectorSequence([t = std::move(term)](Index n) { return Vector{t(n)}; }, budget);
}

Rational WeightSequence::at(Index n) const {
    if (!weight_) throw InvariantError("WeightSequence: empty");
    Rational a = weight_(n);
    if (a <= 0) throw InvariantError("WeightSequence: nonpositive weight at " + std::to_string(n));
    if (n > 0 && weight_(n - 1) > a)
        throw InvariantError("WeightSequence: decreasing at " + std::to_string(n));
    return a;
}

Index WeightSequence::witness(const Rational& m) const {
    if (!witness_) throw InvariantError("WeightSequence: no growth witness");
    Index k = witness_(m);
    if (at(k) < m)
        throw InvariantError("WeightSequence: growth witness failed at m = " + to_string(m));
    return k;
}

WeightSequence linear_weights() {
    return WeightSequence([](Index n) { return Rational(Integer(n) + 1); },
                          [](const Rational& m) {
                              if (m <= 1) return Index{0};
                              return ceil_index(m) - 1;
                          });
}

WeightSequence power_weights(unsigned base) {
    if (base < 2) throw InvariantError("power_weights: base must be >= 2");
    return WeightSequence(
        [base](Index n) {
            Integer p = 1;
            for (Index i = 0; i < n; ++i) p *= base;
            return Rational(p);
        },
        [base](const Rational& m) {
            Index k = 0;
            Integer p = 1;
            while (p < m) {
                p *= base;
                ++k;
            }
            return k;
        });
}

WeightSequence sqrt_weights() {
    auto w = [](Index n) {
        Integer r = boost::multiprecision::sqrt(Integer(n) + 1);
        if (r * r < Integer(n) + 1) ++r;
        return Rational(r);
    };
    return WeightSequence(w, [](const Rational& m) {
        if (m <= 1) return Index{0};
        Integer c = ceil_int(m);
        return static_cast<Index>(c * c - 1);
    });
}

Vector partial_sum(const SpaceDescriptor& d, const VectorSequence& x, Index n) {
    Vector s = zero_vector(d);
    for (Index i = 0; i <= n; ++i) s = add(s, x.at(i));
    return s;
}

Vector weighted_average(const SpaceDescriptor& d, const VectorSequence& x,
                        const WeightSequence& a, Index n) {
    Vector s = zero_vector(d);
    for (Index i = 0; i <= n; ++i) s = add(s, scale(a.at(i), x.at(i)));
    return scale(Rational(1) / a.at(n), s);
}

Rational abel_summation_residual(const SpaceDescriptor& d, const VectorSequence& x,
                                 const WeightSequence& a, Index n) {
    if (n < 1) throw InvariantError("abel_summation_residual: n must be >= 1");
    Vector lhs = weighted_average(d, x, a, n);
    Vector acc = zero_vector(d);
    for (Index i = 0; i + 1 <= n; ++i)
        acc = add(acc, scale(a.at(i + 1) - a.at(i), partial_sum(d, x, i)));
    Vector rhs = sub(partial_sum(d, x, n), scale(Rational(1) / a.at(n), acc));
    Enclosure e = norm(d, sub(lhs, rhs));
    if (!e.exact()) return e.hi;  // zero vector always lands in the exact branch
    return e.lo;
}

}  // namespace kron

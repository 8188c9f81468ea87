#pragma once

#include <functional>
#include <vector>

#include "kron/rational.hpp"

namespace kron {

enum class NormKind { One, Two, Max, General };

/// Finite-dimensional normed space together with its type-p data:
/// E(norm(sum Y_i)^p) <= C * sum E(norm(Y_i)^p) for independent mean-zero Y_i.
struct SpaceDescriptor {
    Index dimension = 1;
    NormKind norm = NormKind::Two;
    Rational norm_exponent = 2;  // meaningful for NormKind::General only
    Rational type_p = 2;
    Rational type_C = 1;
};

SpaceDescriptor reals();
SpaceDescriptor euclidean(Index dim);
SpaceDescriptor max_norm(Index dim);
SpaceDescriptor one_norm(Index dim);

using Vector = std::vector<Rational>;

Vector zero_vector(const SpaceDescriptor& d);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Rational& c, const Vector& v);

/// Enclosure of the norm. Exact (degenerate) for 1-, max- and dim-1 norms;
/// width <= 2^-prec_bits otherwise.
Enclosure norm(const SpaceDescriptor& d, const Vector& v, unsigned prec_bits = 64);

/// Exact value of norm(v)^r for integer r >= 1, where representable
/// (2-norm needs even r in dimension > 1).
Rational norm_pow_exact(const SpaceDescriptor& d, const Vector& v, unsigned r);

/// Exactly decided strict / non-strict comparisons against a rational
/// threshold; 2-norm comparisons go through squares.
bool norm_less(const SpaceDescriptor& d, const Vector& v, const Rational& eps);
bool norm_le(const SpaceDescriptor& d, const Vector& v, const Rational& eps);
bool norm_ge(const SpaceDescriptor& d, const Vector& v, const Rational& eps);

/// Deterministic term sequence x_n with an evaluation budget.
class VectorSequence {
public:
    VectorSequence() = default;
    VectorSequence(std::function<Vector(Index)> term, Index budget = 1'000'000'000)
        : term_(std::move(term)), budget_(budget) {}

    Vector at(Index n) const;
    Index budget() const { return budget_; }

private:
    std::function<Vector(Index)> term_;
    Index budget_ = 0;
};

VectorSequence scalar_sequence(std::function<Rational(Index)> term,
                               Index budget = 1'000'000'000);

/// Positive nondecreasing unbounded weights a_n, with a growth witness
/// m -> k such that a_k >= m. Monotonicity is checked against the previous
/// term on every evaluation; the witness is checked on every query.
class WeightSequence {
public:
    WeightSequence() = default;
    WeightSequence(std::function<Rational(Index)> weight,
                   std::function<Index(const Rational&)> growth_witness)
        : weight_(std::move(weight)), witness_(std::move(growth_witness)) {}

    Rational at(Index n) const;
    /// Index k with a_k >= m, verified.
    Index witness(const Rational& m) const;

private:
    std::function<Rational(Index)> weight_;
    std::function<Index(const Rational&)> witness_;
};

WeightSequence linear_weights();                  // a_n = n + 1
WeightSequence power_weights(unsigned base = 2);  // a_n = base^n
WeightSequence sqrt_weights();                    // a_n = ceil(sqrt(n+1))

/// s_n = sum_{i=0}^n x_i
Vector partial_sum(const SpaceDescriptor& d, const VectorSequence& x, Index n);

/// (1/a_n) * sum_{i=0}^n a_i x_i
Vector weighted_average(const SpaceDescriptor& d, const VectorSequence& x,
                        const WeightSequence& a, Index n);

/// Norm of the difference between the weighted average and its
/// summation-by-parts form s_n - (1/a_n) sum_{i=0}^{n-1} (a_{i+1}-a_i) s_i.
/// Always exactly zero on rational data.
Rational abel_summation_residual(const SpaceDescriptor& d, const VectorSequence& x,
                                 const WeightSequence& a, Index n);

}  // namespace kron

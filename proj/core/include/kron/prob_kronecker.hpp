#pragma once

#include "kron/kronecker.hpp"
#include "kron/prob_engine.hpp"

namespace kron {

/// Rate of almost sure finiteness: P(|Y| >= eval(lambda)) <= lambda.
struct FinitenessRate {
    std::function<Index(const Rational&)> eval;

    Index operator()(const Rational& lambda) const { return eval(lambda); }
};

/// Confidence-levelled bound column z_n(lambda), nondecreasing in n, with
/// P(union_{i<=n} { norm(Z_i) >= z_n(lambda) }) <= lambda.
class LeveledBoundSequence {
public:
    LeveledBoundSequence() = default;
    explicit LeveledBoundSequence(std::function<Index(const Rational&, Index)> bound)
        : bound_(std::move(bound)) {}

    Index at(const Rational& lambda, Index n) const {
        Index z = bound_(lambda, n);
        if (n > 0 && bound_(lambda, n - 1) > z)
            throw InvariantError("LeveledBoundSequence: decreasing at " + std::to_string(n));
        return z;
    }

    /// Fixes the confidence level, yielding a plain bound column.
    BoundSequence column(const Rational& lambda) const {
        return BoundSequence([b = bound_, lambda](Index n) { return b(lambda, n); });
    }

private:
    std::function<Index(const Rational&, Index)> bound_;
};

/// The premise modulus psi(eps, lambda) for the partial-sum process.
struct ProbPremiseModulus {
    std::function<Index(const Rational&, const Rational&)> eval;

    Index operator()(const Rational& eps, const Rational& lambda) const {
        return eval(eps, lambda);
    }
};

/// Psi = Gamma computed with gamma(.) = psi(., lambda/2) and the
/// z-column at level lambda/2.
Index finitary_psi(const WeightSequence& a, const ProbPremiseModulus& psi,
                   const LeveledBoundSequence& z, const Rational& eps, const Rational& lambda);

/// kappa^p: metastable almost sure rate for the weighted averages from a
/// metastable almost sure rate Phi for the partial sums.
Index meta_rate_prob_kronecker(const AsMetastabilityRate& phi, const WeightSequence& a,
                               const LeveledBoundSequence& z, const Rational& eps,
                               const Rational& lambda, const Counterfunction& K);

/// Markov: eval(lambda) = ceil(E / lambda) for a certified first-moment
/// bound E >= E(|Y|).
FinitenessRate markov_finiteness_rate(Index moment_bound);

/// z_n(lambda) = max_{i<=n} R_i(lambda/(n+1)), cumulative-maxed over n.
/// Union bound yields the level invariant. n must stay below R.size().
LeveledBoundSequence bounds_from_finiteness(std::vector<FinitenessRate> rates);

/// Constant column z_n(lambda) = R(lambda) from a modulus of uniform
/// boundedness.
LeveledBoundSequence bounds_from_uniform(FinitenessRate rate);

/// Exact check of the level invariant
/// P(union_{i<=n} { norm(Z_i) >= z_n(lambda) }) <= lambda for the
/// partial-sum process Z_i of P.
bool leveled_bound_certified(const IndependentProcess& P, const LeveledBoundSequence& z,
                             const Rational& lambda, Index n,
                             Index max_outcomes = kEnumerationBudget);

}  // namespace kron

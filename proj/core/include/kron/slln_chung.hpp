#pragma once

#include "kron/prob_kronecker.hpp"

namespace kron {

/// Chung function family phi_n with phi_n(t)/t and t^p/phi_n(t) nondecreasing;
/// certified on a sampled grid, not proven.
struct ChungFunctionFamily {
    std::function<Rational(Index, const Rational&)> phi;

    Rational operator()(Index n, const Rational& t) const { return phi(n, t); }
};

ChungFunctionFamily chung_square();           // phi_n(t) = t^2 (Kolmogorov case)
ChungFunctionFamily chung_identity();         // phi_n(t) = t
ChungFunctionFamily chung_power(unsigned q);  // phi_n(t) = t^q

/// Metastability rate for the moment series sum E(phi_k(norm X_k))/phi_k(a_k).
using MomentSeriesRate = MetastabilityRate;

/// phi_0(t) = t^p on [0,1], t above 1. Exact (degenerate enclosure) for
/// integer p or t in {0, 1} or t > 1.
Enclosure phi0(const Rational& p, const Rational& t, unsigned prec_bits = 64);

/// eps~ = min{ eps*lambda/6, lambda*eps^p / (2^(3p-1) * 3C),
///             (lambda*eps^p / (2^(2p-1) * 3))^(1/p) }.
/// Exact when the minimal branch is exactly representable; otherwise a
/// rational lower bound (rounding down only strengthens the premise).
Rational epsilon_tilde(const Rational& eps, const Rational& lambda, const Rational& p,
                       const Rational& C);

/// Delta_Phi(eps, lambda, K) = Phi(eps~, K): metastable almost sure rate for
/// the partial sums from a metastability rate for sum E(phi_0(norm X_i)).
AsMetastabilityRate slln_series_meta_rate(MetastabilityRate phi, const Rational& p,
                                          const Rational& C);

/// Scalar series emitted by the Chung reduction.
struct ChungSeries {
    std::function<Rational(Index)> term;  // E(phi_k(norm X_k)) / phi_k(a_k)
};

/// Emits the reduced series and certifies, on a sampled (n, t) grid, both the
/// monotonicity conditions on phi and the domination
/// Gamma_n(t) = phi_n(a_n t)/phi_n(a_n) >= phi_0(t).
ChungSeries chung_reduce(const ChungFunctionFamily& phi, const WeightSequence& a,
                         const std::function<Rational(Index)>& moment, const Rational& p,
                         Index sample_horizon = 6);

/// kappa^P: the full composite Chung rate (Delta_Phi fed into the
/// probabilistic Kronecker rate).
Index chung_rate(const MomentSeriesRate& phi, const WeightSequence& a,
                 const LeveledBoundSequence& z, const Rational& p, const Rational& C,
                 const Rational& eps, const Rational& lambda, const Counterfunction& K);

struct KolmogorovCheck {
    Rational lhs;   // P(max_{0<=i<=n} norm(S_i) > eps), exact
    Enclosure rhs;  // E(norm(S_n)^r) / eps^r
    bool ok;        // lhs <= rhs certified
};

/// Exact instance check of Kolmogorov's inequality on an enumerable
/// independent mean-zero process prefix.
KolmogorovCheck kolmogorov_inequality_check(const IndependentProcess& P, Index n,
                                            const Rational& eps, unsigned r,
                                            Index max_outcomes = kEnumerationBudget);

}  // namespace kron

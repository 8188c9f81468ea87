#pragma once

#include <optional>

#include "kron/prob_engine.hpp"
#include "kron/rates.hpp"

namespace kron {

/// Scripted enumeration standing in for a recursive enumeration of a
/// non-recursive set: injective values >= 1, revealed index by index.
class Enumeration {
public:
    Enumeration() = default;
    explicit Enumeration(std::vector<Index> schedule);

    Index at(Index n) const;
    Index size() const { return schedule_.size(); }
    /// Index at which value k is revealed, if within the schedule.
    std::optional<Index> index_of(Index k) const;

private:
    std::vector<Index> schedule_;
};

/// Schedule that reveals distinct filler values first and delays value k to
/// exactly the given index.
Enumeration delayed_schedule(Index k, Index reveal_index);

/// x_i = 2^-a_i; partial sums stay <= 1 for any injective schedule with
/// values >= 1.
VectorSequence specker_terms(const Enumeration& e);

struct SpeckerWitness {
    Index n;             // reveal index of k, beyond the candidate's bound
    Rational average;    // exact (1/(n+1)) sum (i+1) x_i
    Rational threshold;  // 2^-k the candidate promised
};

/// If k is revealed at index n > phi(2^-k) (and n > 1), the exact weighted
/// average at n exceeds 2^-k, refuting phi as a rate of convergence to 0.
std::optional<SpeckerWitness> refute_rate(const Enumeration& e, const ConvergenceRate& phi,
                                          Index k);

/// The SLLN counterexample process: X_0 = 0 and, for n >= 1,
/// X_n = n - n 2^-(a_n+1) with probability 2^-(a_n+1), else -n 2^-(a_n+1).
IndependentProcess slln_counterexample_process(const Enumeration& e);

/// Exact q_n (1 - q_n) = Var(X_n)/n^2 with q_n = 2^-(a_n+1).
Rational var_ratio(const Enumeration& e, Index n);

/// Exact sum_{j=1}^n Var(X_j)/j^2; always <= 5/12.
Rational var_ratio_partial_sum(const Enumeration& e, Index n);

struct SllnWitness {
    Index M;                  // reveal index of k, at or beyond the bound
    Index a_M;                // equals k
    Rational required_prob;   // 1 - 2^-(k+1): forced lower bound on P(X_M low)
    Rational actual_prob;     // 1 - 2^-(a_M+1): true P(X_M low)
    Rational average_bound;   // exact (1/M) sum_{j=1}^M j 2^-(a_j+1), < 1/2
};

/// Refutation for candidate almost sure rates phi(eps, lambda): if k is
/// revealed at M >= phi(1/2, 2^-(k+1)), the forced probability bound
/// contradicts the construction (a_M = k).
std::optional<SllnWitness> refute_as_rate(const Enumeration& e, const AsConvergenceRate& phi,
                                          Index k);

}  // namespace kron

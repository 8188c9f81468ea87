#pragma once

#include <functional>
#include <vector>

#include "kron/space.hpp"

namespace kron {

struct Atom {
    Vector value;
    Rational prob;
};

/// Finitely supported distribution with exactly rational atom weights.
class DiscreteDistribution {
public:
    DiscreteDistribution() = default;
    explicit DiscreteDistribution(std::vector<Atom> atoms);

    const std::vector<Atom>& atoms() const { return atoms_; }

private:
    std::vector<Atom> atoms_;
};

DiscreteDistribution rademacher();
/// Point mass at v.
DiscreteDistribution point_mass(Vector v);
/// Scalar distribution from (value, prob) pairs.
DiscreteDistribution scalar_atoms(std::initializer_list<std::pair<Rational, Rational>> atoms);

/// Independent sequence of discrete random variables X_n.
struct IndependentProcess {
    std::function<DiscreteDistribution(Index)> dist;
    SpaceDescriptor space;
};

/// Event determined by the trajectory prefix (X_0, ..., X_horizon).
struct PrefixEvent {
    Index horizon = 0;
    std::function<bool(const std::vector<Vector>&)> pred;
};

struct ProbabilityEstimate {
    enum class Kind { Exact, MonteCarlo };
    Kind kind = Kind::Exact;
    Rational value;     // exact probability, or empirical frequency
    Index trials = 0;   // Monte Carlo only
    std::uint64_t seed = 0;
    Rational confidence;  // 1 - delta
    Rational margin;      // rational upper bound on sqrt(ln(2/delta)/(2 trials))
};

/// Number of outcomes in the product space over X_0..X_horizon; refuses
/// above max_outcomes.
constexpr Index kEnumerationBudget = Index{1} << 20;

/// Exact probability of E by full enumeration of the product space.
Rational exact_probability(const IndependentProcess& P, const PrefixEvent& E,
                           Index max_outcomes = kEnumerationBudget);

/// Seeded Monte-Carlo estimate with a two-sided Hoeffding margin. Each
/// trial derives its generator state from (seed, trial index), so results
/// are reproducible and order-independent.
ProbabilityEstimate estimate_probability(const IndependentProcess& P, const PrefixEvent& E,
                                         Index trials, std::uint64_t seed,
                                         const Rational& confidence);

/// Exact coordinatewise expectation of f(X_0,...,X_n). Certifies
/// norm(E(f)) <= E(norm f) as a side condition.
Vector expectation_exact(const IndependentProcess& P,
                         const std::function<Vector(const std::vector<Vector>&)>& f, Index n,
                         Index max_outcomes = kEnumerationBudget);

/// Scalar convenience: exact E(f(X_0..X_n)).
Rational expectation_scalar(const IndependentProcess& P,
                            const std::function<Rational(const std::vector<Vector>&)>& f, Index n,
                            Index max_outcomes = kEnumerationBudget);

/// Exact check of P(union E_i) <= sum P(E_i) on an enumerable process.
/// Returns (lhs, rhs).
std::pair<Rational, Rational> union_bound(const IndependentProcess& P,
                                          const std::vector<PrefixEvent>& events,
                                          Index max_outcomes = kEnumerationBudget);

/// One trajectory prefix X_0..X_horizon drawn from (seed, trial).
std::vector<Vector> sample_trajectory(const IndependentProcess& P, Index horizon,
                                      std::uint64_t seed, Index trial);

}  // namespace kron

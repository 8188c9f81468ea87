#pragma once

#include <functional>

#include "kron/space.hpp"

namespace kron {

/// Rate of convergence: eps -> index past which all pairs are eps-close.
struct ConvergenceRate {
    std::function<Index(const Rational&)> eval;

    Index operator()(const Rational& eps) const { return eval(eps); }
};

/// Counterfunction g supplied to a metastability rate. Outputs above the
/// budget are an error, never silently truncated.
class Counterfunction {
public:
    Counterfunction() = default;
    explicit Counterfunction(std::function<Index(Index)> fn, Index budget = 1'000'000'000)
        : fn_(std::move(fn)), budget_(budget) {}

    Index operator()(Index n) const {
        Index v = fn_(n);
        if (v > budget_)
            throw BudgetError("counterfunction output " + std::to_string(v) +
                              " exceeds budget " + std::to_string(budget_));
        return v;
    }
    Index budget() const { return budget_; }

private:
    std::function<Index(Index)> fn_;
    Index budget_ = 0;
};

inline Counterfunction identity_counterfunction(Index budget = 1'000'000'000) {
    return Counterfunction([](Index n) { return n; }, budget);
}

/// Rate of metastability: (eps, g) -> N with [N, N+g(N)] eps-stable.
/// function_independent is a declared property, spot-checked by tests.
struct MetastabilityRate {
    std::function<Index(const Rational&, const Counterfunction&)> eval;
    bool function_independent = false;

    Index operator()(const Rational& eps, const Counterfunction& g) const { return eval(eps, g); }
};

/// Rate of almost sure convergence: (eps, lambda) -> N.
struct AsConvergenceRate {
    std::function<Index(const Rational&, const Rational&)> eval;

    Index operator()(const Rational& eps, const Rational& lambda) const { return eval(eps, lambda); }
};

/// Rate of almost sure metastable convergence: (eps, lambda, K) -> N.
struct AsMetastabilityRate {
    std::function<Index(const Rational&, const Rational&, const Counterfunction&)> eval;
    bool function_independent = false;

    Index operator()(const Rational& eps, const Rational& lambda, const Counterfunction& g) const {
        return eval(eps, lambda, g);
    }
};

/// A rate of convergence is a rate of metastability ignoring g.
MetastabilityRate lift_rate_to_metastable(ConvergenceRate phi);

/// A function-independent metastability rate, read back as a plain rate via
/// the identity counterfunction. Rejects rates not flagged independent.
ConvergenceRate collapse_metastable(MetastabilityRate phi);

AsMetastabilityRate lift_as_rate_to_metastable(AsConvergenceRate phi);

/// For a nondecreasing nonnegative sequence bounded by L, g^floor(L/eps)(0)
/// is a metastability bound.
Index monotone_metastability(const Rational& L, const Rational& eps, const Counterfunction& g);

/// True iff norm(s(n) - s(m)) < eps for all n, m in [N, N + g(N)].
bool verify_metastability_window(const SpaceDescriptor& d, const VectorSequence& s,
                                 const Rational& eps, const Counterfunction& g, Index N);

}  // namespace kron

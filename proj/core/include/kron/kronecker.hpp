#pragma once

#include "kron/rates.hpp"

namespace kron {

/// Nondecreasing natural bounds z_n >= norm(s_n); monotonicity is checked
/// against the previous term on each evaluation.
class BoundSequence {
public:
    BoundSequence() = default;
    explicit BoundSequence(std::function<Index(Index)> bound) : bound_(std::move(bound)) {}

    Index at(Index n) const {
        Index z = bound_(n);
        if (n > 0 && bound_(n - 1) > z)
            throw InvariantError("BoundSequence: decreasing at " + std::to_string(n));
        return z;
    }

private:
    std::function<Index(Index)> bound_;
};

/// The premise modulus gamma: eps -> index where the partial sums stabilise.
struct PremiseModulus {
    std::function<Index(const Rational&)> eval;

    Index operator()(const Rational& eps) const { return eval(eps); }
};

/// f_{(a_n)}(x) = min{ n : a_n >= x }. The growth witness gives an upper
/// bound which is then refined by binary search over the nondecreasing
/// weights.
Index weight_index(const WeightSequence& a, const Rational& x);

/// Gamma = max{ gamma(eps/4), f_a(4 a_M z_M / eps) } with M = gamma(eps/4).
/// Whenever the window premises hold for (M, w), every n in [Gamma, w] has
/// norm(weighted average) < eps.
Index finitary_gamma(const WeightSequence& a, const PremiseModulus& gamma,
                     const BoundSequence& z, const Rational& eps);

/// Premise checker: z_M >= norm(s_i) for all i <= M, and
/// norm(s_n - s_M) < eps/4 for all n in [M, w].
bool kronecker_premises_hold(const SpaceDescriptor& d, const VectorSequence& x, Index z_M,
                             Index M, Index w, const Rational& eps);

/// Conclusion checker: norm(weighted_average(x, a, n)) < eps for all
/// n in [N, w], decided exactly.
bool kronecker_window_holds(const SpaceDescriptor& d, const VectorSequence& x,
                            const WeightSequence& a, const Rational& eps, Index N, Index w);

/// Metastability rate kappa for the weighted averages, from a metastability
/// rate Phi for the partial sums and nondecreasing bounds z_n >= norm(s_n).
Index meta_rate_kronecker(const MetastabilityRate& phi, const WeightSequence& a,
                          const BoundSequence& z, const Rational& eps,
                          const Counterfunction& g);

}  // namespace kron

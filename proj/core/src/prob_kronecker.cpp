#include "kron/prob_kronecker.hpp"

namespace kron {

Index finitary_psi(const WeightSequence& a, const ProbPremiseModulus& psi,
                   const LeveledBoundSequence& z, const Rational& eps, const Rational& lambda) {
    if (lambda <= 0) throw InvariantError("finitary_psi: lambda must be positive");
    Rational half = lambda / 2;
    PremiseModulus gamma{[&psi, half](const Rational& e) { return psi(e, half); }};
    return finitary_gamma(a, gamma, z.column(half), eps);
}

Index meta_rate_prob_kronecker(const AsMetastabilityRate& phi, const WeightSequence& a,
                               const LeveledBoundSequence& z, const Rational& eps,
                               const Rational& lambda, const Counterfunction& K) {
    if (eps <= 0 || lambda <= 0)
        throw InvariantError("meta_rate_prob_kronecker: eps and lambda must be positive");
    Rational half = lambda / 2;
    Counterfunction H(
        [&a, &z, &K, eps, half](Index n) {
            Rational t = 4 * a.at(n) * Rational(Integer(z.at(half, n))) / eps;
            Index m = std::max(n, weight_index(a, t));
            return m + K(m);
        },
        K.budget());
    Index Q = phi(eps / 4, half, H);
    Rational t = 4 * a.at(Q) * Rational(Integer(z.at(half, Q))) / eps;
    return std::max(Q, weight_index(a, t));
}

FinitenessRate markov_finiteness_rate(Index moment_bound) {
    return {[moment_bound](const Rational& lambda) {
        if (lambda <= 0) throw InvariantError("FinitenessRate: lambda must be positive");
        return ceil_index(Rational(Integer(moment_bound)) / lambda);
    }};
}

LeveledBoundSequence bounds_from_finiteness(std::vector<FinitenessRate> rates) {
    return LeveledBoundSequence([rs = std::move(rates)](const Rational& lambda, Index n) {
        if (n >= rs.size())
            throw BudgetError("bounds_from_finiteness: only " + std::to_string(rs.size()) +
                              " finiteness rates supplied");
        // lambda/(n+1) rather than the raw lambda/n; cumulative max keeps
        // the column nondecreasing even when the R_i differ.
        Index z = 0;
        for (Index m = 0; m <= n; ++m) {
            Rational level = lambda / Rational(Integer(m) + 1);
            for (Index i = 0; i <= m; ++i) z = std::max(z, rs[i](level));
        }
        return z;
    });
}

LeveledBoundSequence bounds_from_uniform(FinitenessRate rate) {
    return LeveledBoundSequence(
        [r = std::move(rate)](const Rational& lambda, Index) { return r(lambda); });
}

bool leveled_bound_certified(const IndependentProcess& P, const LeveledBoundSequence& z,
                             const Rational& lambda, Index n, Index max_outcomes) {
    Rational bound(Integer(z.at(lambda, n)));
    PrefixEvent ev{n, [&P, bound](const std::vector<Vector>& prefix) {
                       Vector s = zero_vector(P.space);
                       for (const auto& x : prefix) {
                           s = add(s, x);
                           if (norm_ge(P.space, s, bound)) return true;
                       }
                       return false;
                   }};
    return exact_probability(P, ev, max_outcomes) <= lambda;
}

}  // namespace kron

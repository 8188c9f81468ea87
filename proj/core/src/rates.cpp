#include "kron/rates.hpp"

namespace kron {

MetastabilityRate lift_rate_to_metastable(ConvergenceRate phi) {
    return {[p = std::move(phi)](const Rational& eps, const Counterfunction&) { return p(eps); },
            true};
}

ConvergenceRate collapse_metastable(MetastabilityRate phi) {
    if (!phi.function_independent)
        throw InvariantError("collapse_metastable: rate is not function independent");
    return {[p = std::move(phi)](const Rational& eps) {
        return p(eps, identity_counterfunction());
    }};
}

AsMetastabilityRate lift_as_rate_to_metastable(AsConvergenceRate phi) {
    return {[p = std::move(phi)](const Rational& eps, const Rational& lambda,
                                 const Counterfunction&) { return p(eps, lambda); },
            true};
}

Index monotone_metastability(const Rational& L, const Rational& eps, const Counterfunction& g) {
    if (L <= 0) throw InvariantError("monotone_metastability: L must be positive");
    if (eps <= 0) throw InvariantError("monotone_metastability: eps must be positive");
    Index iterations = floor_index(L / eps);
    Index n = 0;
    for (Index i = 0; i < iterations; ++i) n = g(n);
    return n;
}

bool verify_metastability_window(const SpaceDescriptor& d, const VectorSequence& s,
                                 const Rational& eps, const Counterfunction& g, Index N) {
    Index hi = N + g(N);
    std::vector<Vector> window;
    window.reserve(static_cast<size_t>(hi - N) + 1);
    for (Index n = N; n <= hi; ++n) window.push_back(s.at(n));
    for (size_t i = 0; i < window.size(); ++i)
        for (size_t j = i + 1; j < window.size(); ++j)
            if (!norm_less(d, sub(window[i], window[j]), eps)) return false;
    return true;
}

}  // namespace kron

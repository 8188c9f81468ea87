#include "kron/adversarial.hpp"

#include <set>

namespace kron {

Enumeration::Enumeration(std::vector<Index> schedule) : schedule_(std::move(schedule)) {
    std::set<Index> seen;
    for (Index v : schedule_) {
        if (v < 1) throw InvariantError("Enumeration: values must be >= 1");
        if (!seen.insert(v).second)
            throw InvariantError("Enumeration: duplicate value " + std::to_string(v));
    }
}

Index Enumeration::at(Index n) const {
    if (n >= schedule_.size())
        throw BudgetError("Enumeration: index " + std::to_string(n) + " beyond schedule");
    return schedule_[n];
}

std::optional<Index> Enumeration::index_of(Index k) const {
    for (Index n = 0; n < schedule_.size(); ++n)
        if (schedule_[n] == k) return n;
    return std::nullopt;
}

Enumeration delayed_schedule(Index k, Index reveal_index) {
    std::vector<Index> s;
    s.reserve(reveal_index + 1);
    Index filler = k + 1;
    for (Index i = 0; i < reveal_index; ++i) s.push_back(filler + i);
    s.push_back(k);
    return Enumeration(std::move(s));
}

VectorSequence specker_terms(const Enumeration& e) {
    Index budget = e.size() == 0 ? 0 : e.size() - 1;
    return scalar_sequence(
        [e](Index i) { return pow2(-static_cast<long>(e.at(i))); }, budget);
}

std::optional<SpeckerWitness> refute_rate(const Enumeration& e, const ConvergenceRate& phi,
                                          Index k) {
    auto n_opt = e.index_of(k);
    if (!n_opt) return std::nullopt;
    Index n = *n_opt;
    Rational threshold = pow2(-static_cast<long>(k));
    Index N = phi(threshold);
    if (n <= N || n <= 1) return std::nullopt;

    Rational sum = 0;
    for (Index i = 0; i <= n; ++i)
        sum += Rational(Integer(i) + 1) * pow2(-static_cast<long>(e.at(i)));
    Rational average = sum / Rational(Integer(n) + 1);
    if (average <= threshold)
        throw InvariantError("refute_rate: expected average above 2^-k on a witness");
    return SpeckerWitness{n, average, threshold};
}

IndependentProcess slln_counterexample_process(const Enumeration& e) {
    SpaceDescriptor d = reals();
    return {[e](Index n) {
                if (n == 0) return point_mass(Vector{Rational(0)});
                Rational q = pow2(-static_cast<long>(e.at(n)) - 1);
                Rational nn{Integer(n)};
                return DiscreteDistribution(
                    {{Vector{nn - nn * q}, q}, {Vector{-nn * q}, 1 - q}});
            },
            d};
}

Rational var_ratio(const Enumeration& e, Index n) {
    if (n < 1) throw InvariantError("var_ratio: index starts at 1");
    Rational q = pow2(-static_cast<long>(e.at(n)) - 1);
    return q * (1 - q);
}

Rational var_ratio_partial_sum(const Enumeration& e, Index n) {
    Rational s = 0;
    for (Index j = 1; j <= n; ++j) s += var_ratio(e, j);
    return s;
}

std::optional<SllnWitness> refute_as_rate(const Enumeration& e, const AsConvergenceRate& phi,
                                          Index k) {
    auto m_opt = e.index_of(k);
    if (!m_opt || *m_opt < 1) return std::nullopt;
    Index M = *m_opt;
    Rational lambda = pow2(-static_cast<long>(k) - 1);
    if (M < phi(Rational(1, 2), lambda)) return std::nullopt;

    Rational avg = 0;
    for (Index j = 1; j <= M; ++j)
        avg += Rational(Integer(j)) * pow2(-static_cast<long>(e.at(j)) - 1);
    avg /= Rational(Integer(M));
    if (avg >= Rational(1, 2))
        throw InvariantError("refute_as_rate: average bound (1/M) sum j 2^-(a_j+1) >= 1/2");

    SllnWitness w;
    w.M = M;
    w.a_M = e.at(M);
    w.required_prob = 1 - lambda;
    w.actual_prob = 1 - pow2(-static_cast<long>(w.a_M) - 1);
    w.average_bound = avg;
    // a_M = k makes actual == required, falsifying the strict ">" the
    // candidate rate forces.
    if (w.actual_prob > w.required_prob)
        throw InvariantError("refute_as_rate: no contradiction; schedule is not adversarial here");
    return w;
}

}  // namespace kron

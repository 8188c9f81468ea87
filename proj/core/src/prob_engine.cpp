#include "kron/prob_engine.hpp"

#include <cmath>

namespace kron {

DiscreteDistribution::DiscreteDistribution(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.empty()) throw InvariantError("DiscreteDistribution: no atoms");
    Rational total = 0;
    size_t dim = atoms_.front().value.size();
    for (const auto& a : atoms_) {
        if (a.prob <= 0) throw InvariantError("DiscreteDistribution: nonpositive atom weight");
        if (a.value.size() != dim) throw InvariantError("DiscreteDistribution: mixed dimensions");
        total += a.prob;
    }
    if (total != 1) throw InvariantError("DiscreteDistribution: weights sum to " + to_string(total));
}

DiscreteDistribution rademacher() {
    return DiscreteDistribution({{Vector{1}, Rational(1, 2)}, {Vector{-1}, Rational(1, 2)}});
}

DiscreteDistribution point_mass(Vector v) {
    return DiscreteDistribution({{std::move(v), Rational(1)}});
}

DiscreteDistribution scalar_atoms(std::initializer_list<std::pair<Rational, Rational>> atoms) {
    std::vector<Atom> as;
    for (const auto& [v, p] : atoms) as.push_back({Vector{v}, p});
    return DiscreteDistribution(std::move(as));
}

namespace {

std::vector<DiscreteDistribution> prefix_dists(const IndependentProcess& P, Index horizon,
                                               Index max_outcomes) {
    std::vector<DiscreteDistribution> ds;
    Index outcomes = 1;
    for (Index i = 0; i <= horizon; ++i) {
        ds.push_back(P.dist(i));
        Index k = ds.back().atoms().size();
        if (outcomes > max_outcomes / k)
            throw BudgetError("enumeration budget exceeded at variable " + std::to_string(i));
        outcomes *= k;
    }
    return ds;
}

// Full product-space walk; calls visit(prefix, probability) per trajectory.
void enumerate(const std::vector<DiscreteDistribution>& ds,
               const std::function<void(const std::vector<Vector>&, const Rational&)>& visit) {
    std::vector<Vector> prefix(ds.size());
    std::vector<Rational> probs(ds.size());
    std::function<void(size_t, const Rational&)> rec = [&](size_t i, const Rational& p) {
        if (i == ds.size()) {
            visit(prefix, p);
            return;
        }
        for (const auto& a : ds[i].atoms()) {
            prefix[i] = a.value;
            rec(i + 1, p * a.prob);
        }
    };
    rec(0, Rational(1));
}

// splitmix64, the standard finaliser-style generator.
std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

Rational exact_probability(const IndependentProcess& P, const PrefixEvent& E, Index max_outcomes) {
    auto ds = prefix_dists(P, E.horizon, max_outcomes);
    Rational total = 0;
    enumerate(ds, [&](const std::vector<Vector>& prefix, const Rational& p) {
        if (E.pred(prefix)) total += p;
    });
    return total;
}

std::vector<Vector> sample_trajectory(const IndependentProcess& P, Index horizon,
                                      std::uint64_t seed, Index trial) {
    std::uint64_t state = seed ^ (0x2545f4914f6cdd1dULL * (trial + 1));
    std::vector<Vector> prefix;
    prefix.reserve(horizon + 1);
    const Rational scale(Integer(1) << 64);
    for (Index i = 0; i <= horizon; ++i) {
        DiscreteDistribution d = P.dist(i);
        Rational u = Rational(Integer(splitmix64(state))) / scale;  // in [0, 1)
        Rational cum = 0;
        const Atom* chosen = &d.atoms().back();
        for (const auto& a : d.atoms()) {
            cum += a.prob;
            if (u < cum) {
                chosen = &a;
                break;
            }
        }
        prefix.push_back(chosen->value);
    }
    return prefix;
}

ProbabilityEstimate estimate_probability(const IndependentProcess& P, const PrefixEvent& E,
                                         Index trials, std::uint64_t seed,
                                         const Rational& confidence) {
    if (trials < 1) throw InvariantError("estimate_probability: trials must be >= 1");
    if (confidence <= 0 || confidence >= 1)
        throw InvariantError("estimate_probability: confidence must be in (0,1)");
    Index hits = 0;
    for (Index t = 0; t < trials; ++t)
        if (E.pred(sample_trajectory(P, E.horizon, seed, t))) ++hits;

    // Two-sided Hoeffding: sqrt(ln(2/delta) / (2 trials)), rounded up.
    double delta = static_cast<double>(Rational(1) - confidence);
    double m = std::sqrt(std::log(2.0 / delta) / (2.0 * static_cast<double>(trials)));
    Rational margin = Rational(m) * Rational(Integer(1) + (Integer(1) << 20), Integer(1) << 20);

    ProbabilityEstimate est;
    est.kind = ProbabilityEstimate::Kind::MonteCarlo;
    est.value = Rational(Integer(hits), Integer(trials));
    est.trials = trials;
    est.seed = seed;
    est.confidence = confidence;
    est.margin = margin;
    return est;
}

Vector expectation_exact(const IndependentProcess& P,
                         const std::function<Vector(const std::vector<Vector>&)>& f, Index n,
                         Index max_outcomes) {
    auto ds = prefix_dists(P, n, max_outcomes);
    Vector acc;
    Rational norm_acc_lo = 0;
    bool first = true;
    enumerate(ds, [&](const std::vector<Vector>& prefix, const Rational& p) {
        Vector v = f(prefix);
        if (first) {
            acc = Vector(v.size(), Rational(0));
            first = false;
        }
        acc = add(acc, scale(p, v));
        SpaceDescriptor d = P.space;
        d.dimension = v.size();
        norm_acc_lo += p * norm(d, v).lo;
    });
    SpaceDescriptor d = P.space;
    d.dimension = acc.size();
    // Bochner clause (b): the enclosure lower bound of E(norm f) already
    // dominates norm(E f).
    if (norm(d, acc).hi > norm_acc_lo + pow2(-40))
        throw InvariantError("expectation_exact: norm(E(f)) <= E(norm(f)) violated");
    return acc;
}

Rational expectation_scalar(const IndependentProcess& P,
                            const std::function<Rational(const std::vector<Vector>&)>& f, Index n,
                            Index max_outcomes) {
    auto ds = prefix_dists(P, n, max_outcomes);
    Rational acc = 0;
    enumerate(ds, [&](const std::vector<Vector>& prefix, const Rational& p) { acc += p * f(prefix); });
    return acc;
}

std::pair<Rational, Rational> union_bound(const IndependentProcess& P,
                                          const std::vector<PrefixEvent>& events,
                                          Index max_outcomes) {
    if (events.empty()) return {Rational(0), Rational(0)};
    Index horizon = 0;
    for (const auto& e : events) horizon = std::max(horizon, e.horizon);
    PrefixEvent u{horizon, [&events](const std::vector<Vector>& prefix) {
                      for (const auto& e : events) {
                          std::vector<Vector> sub(prefix.begin(), prefix.begin() + e.horizon + 1);
                          if (e.pred(sub)) return true;
                      }
                      return false;
                  }};
    Rational lhs = exact_probability(P, u, max_outcomes);
    Rational rhs = 0;
    for (const auto& e : events) rhs += exact_probability(P, e, max_outcomes);
    return {lhs, rhs};
}

}  // namespace kron

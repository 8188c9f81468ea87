#include "kron/slln_chung.hpp"

namespace kron {

ChungFunctionFamily chung_square() {
    return {[](Index, const Rational& t) { return t * t; }};
}

ChungFunctionFamily chung_identity() {
    return {[](Index, const Rational& t) { return t; }};
}

ChungFunctionFamily chung_power(unsigned q) {
    if (q == 0) throw InvariantError("chung_power: exponent must be >= 1");
    return {[q](Index, const Rational& t) { return pow_rational(t, q); }};
}

Enclosure phi0(const Rational& p, const Rational& t, unsigned prec_bits) {
    if (t < 0) throw InvariantError("phi0: negative argument");
    if (t > 1) return {t, t};
    return pow_enclosure(t, p, prec_bits);
}

namespace {

// Enclosure of 2^e for rational e (possibly non-integer).
Enclosure pow2_enclosure(const Rational& e, unsigned prec_bits = 64) {
    if (denominator(e) == 1)
        return {pow2(static_cast<long>(numerator(e))), pow2(static_cast<long>(numerator(e)))};
    return pow_enclosure(Rational(2), e, prec_bits);
}

}  // namespace

Rational epsilon_tilde(const Rational& eps, const Rational& lambda, const Rational& p,
                       const Rational& C) {
    if (eps <= 0 || lambda <= 0) throw InvariantError("epsilon_tilde: eps, lambda must be positive");
    if (p < 1 || p > 2) throw InvariantError("epsilon_tilde: p must lie in [1,2]");
    if (C <= 0) throw InvariantError("epsilon_tilde: C must be positive");

    Rational b1 = eps * lambda / 6;

    Enclosure eps_p = pow_enclosure(eps, p);
    Enclosure t3p = pow2_enclosure(3 * p - 1);
    Enclosure b2{lambda * eps_p.lo / (3 * C * t3p.hi), lambda * eps_p.hi / (3 * C * t3p.lo)};

    Enclosure t2p = pow2_enclosure(2 * p - 1);
    Rational inv_p(denominator(p), numerator(p));
    Enclosure inner{lambda * eps_p.lo / (3 * t2p.hi), lambda * eps_p.hi / (3 * t2p.lo)};
    Enclosure b3{pow_enclosure(inner.lo, inv_p).lo, pow_enclosure(inner.hi, inv_p).hi};

    // If an exactly-known branch is certainly minimal, return it verbatim;
    // otherwise fall back to the sound lower bound min of the branch floors.
    if (b1 <= b2.lo && b1 <= b3.lo) return b1;
    if (b2.exact() && b2.lo <= b1 && b2.lo <= b3.lo) return b2.lo;
    if (b3.exact() && b3.lo <= b1 && b3.lo <= b2.lo) return b3.lo;
    return std::min({b1, b2.lo, b3.lo});
}

AsMetastabilityRate slln_series_meta_rate(MetastabilityRate phi, const Rational& p,
                                          const Rational& C) {
    bool independent = phi.function_independent;
    return {[ph = std::move(phi), p, C](const Rational& eps, const Rational& lambda,
                                        const Counterfunction& K) {
                return ph(epsilon_tilde(eps, lambda, p, C), K);
            },
            independent};
}

ChungSeries chung_reduce(const ChungFunctionFamily& phi, const WeightSequence& a,
                         const std::function<Rational(Index)>& moment, const Rational& p,
                         Index sample_horizon) {
    // t-grid spanning both phi_0 branches.
    const Rational grid[] = {Rational(1, 8), Rational(1, 4), Rational(1, 2), Rational(3, 4),
                             Rational(1),    Rational(3, 2), Rational(2),    Rational(4)};
    const size_t G = sizeof(grid) / sizeof(grid[0]);
    for (Index n = 0; n <= sample_horizon; ++n) {
        for (size_t i = 0; i < G; ++i) {
            Rational phi_i = phi(n, grid[i]);
            if (phi_i <= 0)
                throw InvariantError("chung_reduce: phi_n must be positive on the grid");
            for (size_t j = i + 1; j < G; ++j) {
                Rational phi_j = phi(n, grid[j]);
                if (phi_i / grid[i] > phi_j / grid[j])
                    throw InvariantError("chung_reduce: phi_n(t)/t not nondecreasing");
                Enclosure ti = pow_enclosure(grid[i], p), tj = pow_enclosure(grid[j], p);
                if (ti.lo / phi_i > tj.hi / phi_j)
                    throw InvariantError("chung_reduce: t^p/phi_n(t) not nondecreasing");
            }
            // Domination certificate Gamma_n(t) >= phi_0(t).
            Rational an = a.at(n);
            Rational gamma_n = phi(n, an * grid[i]) / phi(n, an);
            if (gamma_n < phi0(p, grid[i]).lo)
                throw InvariantError("chung_reduce: Gamma_n(t) >= phi_0(t) fails on the grid");
        }
    }
    return {[phi, a, moment](Index k) { return moment(k) / phi(k, a.at(k)); }};
}

Index chung_rate(const MomentSeriesRate& phi, const WeightSequence& a,
                 const LeveledBoundSequence& z, const Rational& p, const Rational& C,
                 const Rational& eps, const Rational& lambda, const Counterfunction& K) {
    AsMetastabilityRate delta = slln_series_meta_rate(phi, p, C);
    return meta_rate_prob_kronecker(delta, a, z, eps, lambda, K);
}

KolmogorovCheck kolmogorov_inequality_check(const IndependentProcess& P, Index n,
                                            const Rational& eps, unsigned r,
                                            Index max_outcomes) {
    if (eps <= 0) throw InvariantError("kolmogorov_inequality_check: eps must be positive");
    if (r < 1) throw InvariantError("kolmogorov_inequality_check: r must be >= 1");
    PrefixEvent ev{n, [&P, eps](const std::vector<Vector>& prefix) {
                       Vector s = zero_vector(P.space);
                       for (const auto& x : prefix) {
                           s = add(s, x);
                           if (!norm_le(P.space, s, eps)) return true;
                       }
                       return false;
                   }};
    Rational lhs = exact_probability(P, ev, max_outcomes);

    // E(norm(S_n)^r) as an enclosure; degenerate whenever norm^r is rational.
    std::vector<DiscreteDistribution> ds;
    Index outcomes = 1;
    for (Index i = 0; i <= n; ++i) {
        ds.push_back(P.dist(i));
        Index k = ds.back().atoms().size();
        if (outcomes > max_outcomes / k) throw BudgetError("enumeration budget exceeded");
        outcomes *= k;
    }
    Rational mlo = 0, mhi = 0;
    std::vector<Vector> prefix(ds.size());
    std::function<void(size_t, const Rational&)> rec = [&](size_t i, const Rational& pr) {
        if (i == ds.size()) {
            Vector s = zero_vector(P.space);
            for (const auto& x : prefix) s = add(s, x);
            if (P.space.norm == NormKind::Two && r % 2 == 0) {
                Rational v = norm_pow_exact(P.space, s, r);
                mlo += pr * v;
                mhi += pr * v;
            } else {
                Enclosure e = norm(P.space, s);
                mlo += pr * pow_rational(e.lo, r);
                mhi += pr * pow_rational(e.hi, r);
            }
            return;
        }
        for (const auto& atom : ds[i].atoms()) {
            prefix[i] = atom.value;
            rec(i + 1, pr * atom.prob);
        }
    };
    rec(0, Rational(1));
    Rational er = pow_rational(eps, r);
    Enclosure rhs{mlo / er, mhi / er};
    return {lhs, rhs, lhs <= rhs.lo};
}

}  // namespace kron

#include "kron/kronecker.hpp"

namespace kron {

Index weight_index(const WeightSequence& a, const Rational& x) {
    if (x < 0) throw InvariantError("weight_index: negative threshold");
    if (a.at(0) >= x) return 0;
    Index hi = a.witness(x);
    Index lo = 0;  // a_lo < x <= a_hi
    while (hi - lo > 1) {
        Index mid = lo + (hi - lo) / 2;
        (a.at(mid) >= x ? hi : lo) = mid;
    }
    return hi;
}

Index finitary_gamma(const WeightSequence& a, const PremiseModulus& gamma,
                     const BoundSequence& z, const Rational& eps) {
    if (eps <= 0) throw InvariantError("finitary_gamma: eps must be positive");
    Index M = gamma(eps / 4);
    Rational threshold = 4 * a.at(M) * Rational(Integer(z.at(M))) / eps;
    return std::max(M, weight_index(a, threshold));
}

bool kronecker_premises_hold(const SpaceDescriptor& d, const VectorSequence& x, Index z_M,
                             Index M, Index w, const Rational& eps) {
    Vector s = zero_vector(d);
    Vector s_M;
    Rational bound = Rational(Integer(z_M));
    for (Index i = 0; i <= M; ++i) {
        s = add(s, x.at(i));
        if (!norm_le(d, s, bound)) return false;
    }
    s_M = s;
    for (Index n = M + 1; n <= w; ++n) {
        s = add(s, x.at(n));
        if (!norm_less(d, sub(s, s_M), eps / 4)) return false;
    }
    return true;
}

bool kronecker_window_holds(const SpaceDescriptor& d, const VectorSequence& x,
                            const WeightSequence& a, const Rational& eps, Index N, Index w) {
    Vector acc = zero_vector(d);
    for (Index n = 0; n <= w; ++n) {
        acc = add(acc, scale(a.at(n), x.at(n)));
        if (n >= N && !norm_less(d, scale(Rational(1) / a.at(n), acc), eps)) return false;
    }
    return true;
}

Index meta_rate_kronecker(const MetastabilityRate& phi, const WeightSequence& a,
                          const BoundSequence& z, const Rational& eps,
                          const Counterfunction& g) {
    if (eps <= 0) throw InvariantError("meta_rate_kronecker: eps must be positive");
    Counterfunction h(
        [&a, &z, &g, eps](Index n) {
            Index m = std::max(n, weight_index(a, 4 * a.at(n) * Rational(Integer(z.at(n))) / eps));
            return m + g(m);
        },
        g.budget());
    Index Q = phi(eps / 4, h);
    return std::max(Q, weight_index(a, 4 * a.at(Q) * Rational(Integer(z.at(Q))) / eps));
}

}  // namespace kron

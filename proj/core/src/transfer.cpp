#include "kron/transfer.hpp"

#include "kron/kronecker.hpp"

namespace kron {

MajorantSeq constant_majorant(Index c) {
    return MajorantSeq([c](Index) { return c; });
}

bool majorizes(const MajorantSeq& tau, const ScalarSeq& x, Index horizon) {
    try {
        for (Index n = 0; n <= horizon; ++n) {
            Index t = tau.at(n);  // throws if not nondecreasing
            Rational xv = x(n);
            if (xv < 0) xv = -xv;
            if (Rational(Integer(t)) < xv) return false;
        }
    } catch (const InvariantError&) {
        return false;
    }
    return true;
}

TransferResult transfer(const RealizerTriple& R, const TailBoundFunction& Z, const IndexFun2& B,
                        Index k, Index u, Index w) {
    IndexFun Bk = [&B, k](Index n) { return B(k, n); };
    Index M = R.modulus(Bk, u, w);
    Index z = Z(k + 1, M);
    MajorantSeq zs = constant_majorant(z);

    TransferResult res;
    res.majorant = z;
    res.A_prime = R.A(zs, Bk, u, w);
    res.C_prime = R.C(zs, Bk, u, w);
    res.V_prime = R.V(zs, Bk, u);

    // Continuity audit: agreeing with z up to M must pin all three outputs.
    for (Index bump : {Index{1}, Index{7}}) {
        MajorantSeq perturbed([z, M, bump](Index n) { return n <= M ? z : z + bump + (n - M); });
        if (R.A(perturbed, Bk, u, w) != res.A_prime || R.C(perturbed, Bk, u, w) != res.C_prime ||
            R.V(perturbed, Bk, u) != res.V_prime)
            throw InvariantError("transfer: realizer violates its declared continuity modulus");
    }
    return res;
}

RealizerTriple kronecker_realizers(const WeightSequence& a) {
    RealizerTriple R;
    R.A = [](const MajorantSeq&, const IndexFun&, Index u, Index) { return u + 2; };
    R.C = [](const MajorantSeq&, const IndexFun&, Index, Index w) { return w; };
    R.V = [a](const MajorantSeq& tau, const IndexFun& B, Index u) {
        Index b = B(u + 2);
        Rational sum = 0;
        for (Index i = 0; i <= b; ++i) sum += Rational(Integer(tau.at(i)));
        Rational threshold = pow2(static_cast<long>(u) + 2) * a.at(b) * sum;
        return std::max(b, weight_index(a, threshold));
    };
    R.modulus = [](const IndexFun& B, Index u, Index) { return B(u + 2); };
    return R;
}

std::pair<CheckablePredicate, CheckablePredicate> kronecker_predicates(const WeightSequence& a) {
    CheckablePredicate P0{
        [](Index alpha, Index b, Index c, const std::vector<Rational>& prefix) {
            if (b > c) return true;
            if (prefix.size() < c + 1) throw InvariantError("P0: prefix too short");
            Rational tol = pow2(-static_cast<long>(alpha));
            std::vector<Rational> s(c + 1);
            Rational acc = 0;
            for (Index i = 0; i <= c; ++i) {
                acc += prefix[i];
                s[i] = acc;
            }
            for (Index n = b; n <= c; ++n)
                for (Index m = b; m <= c; ++m) {
                    Rational d = s[n] - s[m];
                    if (d < 0) d = -d;
                    if (d > tol) return false;
                }
            return true;
        },
        [](Index, Index, Index c) { return c + 1; }};

    CheckablePredicate Q0{
        [a](Index u, Index v, Index w, const std::vector<Rational>& prefix) {
            if (v > w) return true;
            if (prefix.size() < w + 1) throw InvariantError("Q0: prefix too short");
            Rational tol = pow2(-static_cast<long>(u));
            Rational acc = 0;
            for (Index n = 0; n <= w; ++n) {
                acc += a.at(n) * prefix[n];
                if (n < v) continue;
                Rational avg = acc / a.at(n);
                if (avg < 0) avg = -avg;
                if (avg > tol) return false;
            }
            return true;
        },
        [](Index, Index, Index w) { return w + 1; }};

    return {P0, Q0};
}

namespace {
Rational scalar_of(const Vector& v) {
    if (v.size() != 1) throw InvariantError("transfer: process must be scalar");
    return v[0];
}
}  // namespace

TransferCheck transfer_implication_check(const RealizerTriple& R, const CheckablePredicate& P0,
                                         const CheckablePredicate& Q0, const TailBoundFunction& Z,
                                         const IndependentProcess& P, const IndexFun2& B, Index k,
                                         Index u, Index w, Index max_outcomes) {
    TransferCheck chk;
    chk.realized = transfer(R, Z, B, k, u, w);
    Index Ap = chk.realized.A_prime;
    Index BkA = B(k, Ap);
    Index Cp = chk.realized.C_prime;
    Index Vp = chk.realized.V_prime;

    Index need_p = P0.prefix_need(Ap, BkA, Cp);
    Index need_q = Q0.prefix_need(u, Vp, w);

    auto as_event = [&](const CheckablePredicate& pred, Index x, Index y, Index zz,
                        Index need) -> PrefixEvent {
        Index horizon = need == 0 ? 0 : need - 1;
        return {horizon, [&pred, x, y, zz](const std::vector<Vector>& prefix) {
                    std::vector<Rational> xs;
                    xs.reserve(prefix.size());
                    for (const auto& v : prefix) xs.push_back(scalar_of(v));
                    return !pred.eval(x, y, zz, xs);
                }};
    };

    chk.premise_failure = exact_probability(P, as_event(P0, Ap, BkA, Cp, need_p), max_outcomes);
    chk.conclusion_failure = exact_probability(P, as_event(Q0, u, Vp, w, need_q), max_outcomes);
    bool premise_ok = chk.premise_failure <= pow2(-static_cast<long>(k) - 1);
    bool conclusion_ok = chk.conclusion_failure <= pow2(-static_cast<long>(k));
    chk.implication_holds = !premise_ok || conclusion_ok;
    return chk;
}

bool tail_bound_certified(const IndependentProcess& P, const TailBoundFunction& Z, Index k,
                          Index p, Index max_outcomes) {
    Rational bound(Integer(Z(k, p)));
    PrefixEvent ev{p, [&P, bound](const std::vector<Vector>& prefix) {
                       for (const auto& x : prefix)
                           if (!norm_le(P.space, x, bound)) return true;
                       return false;
                   }};
    return exact_probability(P, ev, max_outcomes) <= pow2(-static_cast<long>(k));
}

}  // namespace kron

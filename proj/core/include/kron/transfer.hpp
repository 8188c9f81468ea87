#pragma once

#include "kron/prob_engine.hpp"
#include "kron/space.hpp"

namespace kron {

/// Nondecreasing natural majorant sequence tau_n.
class MajorantSeq {
public:
    MajorantSeq() = default;
    explicit MajorantSeq(std::function<Index(Index)> tau) : tau_(std::move(tau)) {}

    Index at(Index n) const {
        Index t = tau_(n);
        if (n > 0 && tau_(n - 1) > t)
            throw InvariantError("MajorantSeq: decreasing at " + std::to_string(n));
        return t;
    }

private:
    std::function<Index(Index)> tau_;
};

/// Constant majorant z_n = c.
MajorantSeq constant_majorant(Index c);

using ScalarSeq = std::function<Rational(Index)>;
using IndexFun = std::function<Index(Index)>;
using IndexFun2 = std::function<Index(Index, Index)>;

/// Quantifier-free predicate evaluated on a finite prefix of a scalar
/// sequence; eval may inspect only the first prefix_need(a,b,c) terms.
struct CheckablePredicate {
    std::function<bool(Index, Index, Index, const std::vector<Rational>&)> eval;
    std::function<Index(Index, Index, Index)> prefix_need;
};

/// Dialectica realizers (A, C, V) with a shared modulus of uniform
/// continuity M in the majorant argument.
struct RealizerTriple {
    std::function<Index(const MajorantSeq&, const IndexFun&, Index, Index)> A;
    std::function<Index(const MajorantSeq&, const IndexFun&, Index, Index)> C;
    std::function<Index(const MajorantSeq&, const IndexFun&, Index)> V;
    std::function<Index(const IndexFun&, Index, Index)> modulus;
};

/// Tail bound Z with P(union_{i<=p} { |X_i| > Z(k,p) }) <= 2^-k.
struct TailBoundFunction {
    std::function<Index(Index, Index)> Z;

    Index operator()(Index k, Index p) const { return Z(k, p); }
};

/// True iff tau is nondecreasing and tau_n >= |x_n| for all n <= horizon.
bool majorizes(const MajorantSeq& tau, const ScalarSeq& x, Index horizon);

struct TransferResult {
    Index A_prime;
    Index C_prime;
    Index V_prime;
    Index majorant;  // the constant z = Z(k+1, M(B,u,w)) used throughout
};

/// The probabilistic realizers of the transfer construction: plug the
/// constant majorant Z(k+1, M(B,u,w)) into (A, C, V). Audits the declared
/// continuity modulus by perturbing the majorant beyond M; a change in any
/// output is an error.
TransferResult transfer(const RealizerTriple& R, const TailBoundFunction& Z, const IndexFun2& B,
                        Index k, Index u, Index w);

/// Realizers for the Kronecker implication: A = u+2, C = w,
/// V = max{ B(u+2), f_a(2^(u+2) a_{B(u+2)} sum_{i<=B(u+2)} tau_i) },
/// modulus M(B,u,w) = B(u+2).
RealizerTriple kronecker_realizers(const WeightSequence& a);

/// P0(alpha,b,c): all m,n in [b;c] have |s_n - s_m| <= 2^-alpha.
/// Q0(u,v,w): all n in [v;w] have |(1/a_n) sum a_k x_k| <= 2^-u.
std::pair<CheckablePredicate, CheckablePredicate> kronecker_predicates(const WeightSequence& a);

struct TransferCheck {
    TransferResult realized;
    Rational premise_failure;     // P(not P0(A', B(k,A'), C'))
    Rational conclusion_failure;  // P(not Q0(u, V', w))
    bool implication_holds;       // premise <= 2^-(k+1)  ->  conclusion <= 2^-k
};

/// Exact end-to-end instance check of the transfer conclusion on an
/// enumerable scalar process.
TransferCheck transfer_implication_check(const RealizerTriple& R, const CheckablePredicate& P0,
                                         const CheckablePredicate& Q0, const TailBoundFunction& Z,
                                         const IndependentProcess& P, const IndexFun2& B, Index k,
                                         Index u, Index w, Index max_outcomes = kEnumerationBudget);

/// Exact verification of the tail bound condition at (k, p).
bool tail_bound_certified(const IndependentProcess& P, const TailBoundFunction& Z, Index k,
                          Index p, Index max_outcomes = kEnumerationBudget);

}  // namespace kron

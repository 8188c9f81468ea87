#include <doctest.h>

#include "kron/transfer.hpp"

using namespace kron;

namespace {

// X_i = +-2^-(i+5): every partial-sum fluctuation is below 2^-4.
IndependentProcess tiny_signs() {
    return {[](Index i) {
                Rational v = pow2(-static_cast<long>(i) - 5);
                return scalar_atoms({{v, Rational(1, 2)}, {-v, Rational(1, 2)}});
            },
            reals()};
}

}  // namespace

TEST_CASE("majorization checks") {
    MajorantSeq tau([](Index n) { return n + 1; });
    CHECK(majorizes(tau, [](Index n) { return pow2(-static_cast<long>(n)); }, 20));
    CHECK_FALSE(majorizes(constant_majorant(0), [](Index) { return Rational(1); }, 0));

    // Cumulative max of ceil(|x_n|) majorizes by construction.
    ScalarSeq x = [](Index n) { return Rational(Integer(n) * (n % 3 ? 1 : -1), 2); };
    MajorantSeq built([x](Index n) {
        Index m = 0;
        for (Index i = 0; i <= n; ++i) {
            Rational v = x(i);
            if (v < 0) v = -v;
            m = std::max(m, ceil_index(v));
        }
        return m;
    });
    CHECK(majorizes(built, x, 15));

    MajorantSeq decreasing([](Index n) { return 10 - n; });
    CHECK_FALSE(majorizes(decreasing, [](Index) { return Rational(0); }, 3));
}

TEST_CASE("kronecker realizers compute V explicitly") {
    RealizerTriple R = kronecker_realizers(linear_weights());
    IndexFun B0 = [](Index) { return Index{0}; };
    CHECK(R.V(constant_majorant(1), B0, 0) == 3);  // f_a(4 * 1 * 1) = 3
    CHECK(R.V(constant_majorant(0), B0, 0) == 0);
    CHECK(R.A(constant_majorant(1), B0, 0, 9) == 2);
    CHECK(R.C(constant_majorant(1), B0, 0, 9) == 9);
    CHECK(R.modulus(B0, 0, 9) == 0);

    // Perturbing tau beyond B(u+2) leaves V unchanged.
    MajorantSeq bumped([](Index n) { return n == 0 ? Index{1} : Index{50}; });
    CHECK(R.V(bumped, B0, 0) == 3);
}

TEST_CASE("checkable kronecker predicates") {
    auto [P0, Q0] = kronecker_predicates(linear_weights());

    std::vector<Rational> zeros(12, Rational(0));
    CHECK(P0.eval(3, 2, 11, zeros));
    CHECK(Q0.eval(5, 0, 11, zeros));

    std::vector<Rational> dyadic;
    for (Index i = 0; i < 9; ++i) dyadic.push_back(pow2(-static_cast<long>(i)));
    CHECK(P0.eval(2, 5, 8, dyadic));  // tail of the dyadic series past index 5 is under 1/4
    CHECK(P0.prefix_need(2, 5, 8) == 9);

    std::vector<Rational> big{Rational(2)};
    CHECK_FALSE(Q0.eval(0, 0, 0, big));
    CHECK(P0.eval(3, 7, 2, big));  // empty interval
}

TEST_CASE("transfer plugs in the constant majorant and audits continuity") {
    RealizerTriple R = kronecker_realizers(linear_weights());
    TailBoundFunction Z{[](Index, Index) { return Index{1}; }};
    IndexFun2 B = [](Index, Index) { return Index{0}; };
    TransferResult res = transfer(R, Z, B, 2, 0, 9);
    CHECK(res.majorant == 1);
    CHECK(res.A_prime == 2);
    CHECK(res.C_prime == 9);
    CHECK(res.V_prime == 3);
}

TEST_CASE("continuity audit rejects realizers that peek past their modulus") {
    RealizerTriple R;
    R.A = [](const MajorantSeq& tau, const IndexFun&, Index, Index) { return tau.at(5); };
    R.C = [](const MajorantSeq&, const IndexFun&, Index, Index w) { return w; };
    R.V = [](const MajorantSeq&, const IndexFun&, Index) { return Index{0}; };
    R.modulus = [](const IndexFun&, Index, Index) { return Index{1}; };  // claims need only tau_0..tau_1
    TailBoundFunction Z{[](Index, Index) { return Index{1}; }};
    IndexFun2 B = [](Index, Index) { return Index{0}; };
    CHECK_THROWS_AS(transfer(R, Z, B, 1, 0, 4), InvariantError);
}

TEST_CASE("end-to-end implication check on an enumerable process") {
    RealizerTriple R = kronecker_realizers(linear_weights());
    auto [P0, Q0] = kronecker_predicates(linear_weights());
    TailBoundFunction Z{[](Index, Index) { return Index{1}; }};
    IndexFun2 B = [](Index, Index n) { return n; };
    TransferCheck chk = transfer_implication_check(R, P0, Q0, Z, tiny_signs(), B, 2, 0, 9);
    CHECK(chk.premise_failure == 0);
    CHECK(chk.conclusion_failure == 0);
    CHECK(chk.implication_holds);
}

TEST_CASE("degenerate predicates transfer trivially") {
    RealizerTriple R = kronecker_realizers(linear_weights());
    CheckablePredicate always{[](Index, Index, Index, const std::vector<Rational>&) { return true; },
                              [](Index, Index, Index) { return Index{1}; }};
    TailBoundFunction Z{[](Index, Index) { return Index{1}; }};
    IndexFun2 B = [](Index, Index) { return Index{0}; };
    TransferCheck chk = transfer_implication_check(R, always, always, Z, tiny_signs(), B, 1, 0, 5);
    CHECK(chk.premise_failure == 0);
    CHECK(chk.conclusion_failure == 0);
    CHECK(chk.implication_holds);
}

TEST_CASE("tail bounds certified exactly") {
    CHECK(tail_bound_certified(tiny_signs(), TailBoundFunction{[](Index, Index) { return Index{1}; }},
                               4, 7));
    IndependentProcess zero{[](Index) { return point_mass(Vector{Rational(0)}); }, reals()};
    CHECK(tail_bound_certified(zero, TailBoundFunction{[](Index, Index) { return Index{0}; }}, 3, 5));
}

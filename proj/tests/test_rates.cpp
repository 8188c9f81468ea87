#include <doctest.h>

#include "kron/rates.hpp"

using namespace kron;

namespace {
ConvergenceRate inverse_rate() {
    return {[](const Rational& eps) { return ceil_index(Rational(1) / eps); }};
}
}  // namespace

TEST_CASE("lifting a plain rate ignores the counterfunction") {
    MetastabilityRate m = lift_rate_to_metastable(inverse_rate());
    CHECK(m(Rational(1, 2), Counterfunction([](Index n) { return n * n; })) == 2);
    CHECK(m.function_independent);

    MetastabilityRate zero = lift_rate_to_metastable({[](const Rational&) { return Index{0}; }});
    CHECK(zero(Rational(1, 7), identity_counterfunction()) == 0);

    ConvergenceRate log2p1{[](const Rational& eps) {
        Index n = 0;
        Rational v = 1;
        while (v > eps) {
            v /= 2;
            ++n;
        }
        return n + 1;
    }};
    CHECK(lift_rate_to_metastable(log2p1)(Rational(1, 8), identity_counterfunction()) == 4);
}

TEST_CASE("collapse round-trips lifted rates") {
    ConvergenceRate back = collapse_metastable(lift_rate_to_metastable(inverse_rate()));
    for (long d : {2L, 3L, 7L, 100L})
        CHECK(back(Rational(1, d)) == inverse_rate()(Rational(1, d)));

    MetastabilityRate c5{[](const Rational&, const Counterfunction&) { return Index{5}; }, true};
    CHECK(collapse_metastable(c5)(Rational(1, 9)) == 5);

    MetastabilityRate dependent{[](const Rational&, const Counterfunction& g) { return g(3); },
                                false};
    CHECK_THROWS_AS(collapse_metastable(dependent), InvariantError);
}

TEST_CASE("lifting an almost sure rate") {
    AsConvergenceRate phi{[](const Rational& eps, const Rational& lambda) {
        return ceil_index(Rational(1) / (eps * lambda));
    }};
    AsMetastabilityRate m = lift_as_rate_to_metastable(phi);
    CHECK(m(Rational(1, 2), Rational(1, 2), identity_counterfunction()) == 4);
    CHECK(m(Rational(1, 2), Rational(1, 2), Counterfunction([](Index n) { return 10 * n + 7; })) ==
          4);

    AsMetastabilityRate zero =
        lift_as_rate_to_metastable({[](const Rational&, const Rational&) { return Index{0}; }});
    CHECK(zero(Rational(1, 3), Rational(1, 5), identity_counterfunction()) == 0);
}

TEST_CASE("metastability for monotone bounded sequences") {
    CHECK(monotone_metastability(1, Rational(1, 3), Counterfunction([](Index n) { return n + 2; })) ==
          6);
    CHECK(monotone_metastability(1, Rational(2), identity_counterfunction()) == 0);
    CHECK(monotone_metastability(1, Rational(1, 2), Counterfunction([](Index n) { return n + 1; })) ==
          2);
}

TEST_CASE("window verification on explicit sequences") {
    VectorSequence s = scalar_sequence([](Index n) {
        Rational acc = 0;
        for (Index i = 0; i <= n; ++i) acc += pow2(-static_cast<long>(i));
        return acc;
    });
    CHECK(verify_metastability_window(reals(), s, Rational(1, 4), identity_counterfunction(), 4));
    CHECK(verify_metastability_window(reals(), s, Rational(1, 1000),
                                      Counterfunction([](Index) { return Index{0}; }), 2));

    VectorSequence alt = scalar_sequence([](Index n) { return n % 2 == 0 ? Rational(1) : Rational(-1); });
    CHECK_FALSE(verify_metastability_window(reals(), alt, Rational(1), identity_counterfunction(), 3));
}

TEST_CASE("counterfunction budget") {
    Counterfunction g([](Index n) { return n * 1000; }, 5000);
    CHECK(g(5) == 5000);
    CHECK_THROWS_AS(g(6), BudgetError);
}

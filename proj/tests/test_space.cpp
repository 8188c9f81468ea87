#include <doctest.h>

#include <random>

#include "kron/space.hpp"

using namespace kron;

namespace {
VectorSequence dyadic() {
    return scalar_sequence([](Index i) { return pow2(-static_cast<long>(i)); });
}
}  // namespace

TEST_CASE("norms on the catalogue spaces") {
    CHECK(norm(reals(), {Rational(-3, 2)}).lo == Rational(3, 2));
    CHECK(norm(reals(), {Rational(-3, 2)}).exact());
    CHECK(norm(max_norm(2), {Rational(1, 2), Rational(-2)}).lo == 2);
    CHECK(norm(one_norm(2), {Rational(1, 3), Rational(1, 6)}).lo == Rational(1, 2));

    Enclosure e = norm(euclidean(2), {Rational(3), Rational(4)});
    CHECK(e.lo <= 5);
    CHECK(e.hi >= 5);
    CHECK(norm_pow_exact(euclidean(2), {Rational(3), Rational(4)}, 2) == 25);
}

TEST_CASE("norm comparisons are decided exactly through squares") {
    Vector v{Rational(1), Rational(1)};  // norm sqrt(2)
    CHECK(norm_less(euclidean(2), v, Rational(3, 2)));
    CHECK_FALSE(norm_less(euclidean(2), v, Rational(7, 5)));  // 49/25 < 2
    CHECK(norm_ge(euclidean(2), v, Rational(7, 5)));
    CHECK(norm_le(euclidean(2), {Rational(3), Rational(4)}, Rational(5)));
    CHECK_FALSE(norm_less(euclidean(2), {Rational(3), Rational(4)}, Rational(5)));
}

TEST_CASE("partial sums") {
    CHECK(partial_sum(reals(), dyadic(), 3)[0] == Rational(15, 8));
    CHECK(partial_sum(reals(), dyadic(), 0)[0] == 1);
    VectorSequence alt = scalar_sequence([](Index i) { return i % 2 == 0 ? Rational(1) : Rational(-1); });
    CHECK(partial_sum(reals(), alt, 1)[0] == 0);
}

TEST_CASE("weighted averages") {
    CHECK(weighted_average(reals(), dyadic(), linear_weights(), 2)[0] == Rational(11, 12));
    VectorSequence zero = scalar_sequence([](Index) { return Rational(0); });
    CHECK(weighted_average(reals(), zero, linear_weights(), 7)[0] == 0);
    CHECK(weighted_average(reals(), dyadic(), linear_weights(), 0)[0] == 1);
}

TEST_CASE("summation by parts residual vanishes identically") {
    CHECK(abel_summation_residual(reals(), dyadic(), linear_weights(), 5) == 0);

    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
    std::vector<Rational> vals(11);
    for (auto& v : vals) v = Rational(num(rng), den(rng));
    VectorSequence x = scalar_sequence([vals](Index i) { return vals.at(i); }, 10);
    CHECK(abel_summation_residual(reals(), x, linear_weights(), 10) == 0);
    CHECK(abel_summation_residual(reals(), x, power_weights(2), 10) == 0);
}

TEST_CASE("weight sequences enforce their invariants") {
    CHECK(linear_weights().at(4) == 5);
    CHECK(power_weights(2).at(10) == 1024);
    CHECK(sqrt_weights().at(8) == 3);
    CHECK(linear_weights().witness(Rational(100)) >= 99);

    WeightSequence bad([](Index n) { return Rational(10 - static_cast<long>(n)); },
                       [](const Rational&) { return Index{0}; });
    CHECK_THROWS_AS(bad.at(1), InvariantError);
}

TEST_CASE("sequence budget is enforced") {
    VectorSequence x = scalar_sequence([](Index) { return Rational(1); }, 5);
    CHECK(x.at(5)[0] == 1);
    CHECK_THROWS_AS(x.at(6), BudgetError);
}

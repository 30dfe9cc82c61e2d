#include <catch_amalgamated.hpp>

#include <cmath>

#include "iterate_census/asymptotics.hpp"

using namespace iterate_census;
using Catch::Approx;

namespace {
// Reference ratios evaluated independently with exact rational arithmetic
// (Python fractions over the closed series), rounded to double.
struct Frozen {
    long n;
    double reducible;
    double irreducible;
};
constexpr Frozen kFrozen[] = {
    {10, 0.6809155901384112, 0.31908440986158887},
    {25, 0.8809020836384424, 0.11909791636155762},
    {50, 0.9786076800311534, 0.021392319968846555},
    {100, 0.9993268847440937, 0.0006731152559063336},
    {200, 0.9999993415230186, 6.584769814016469e-07},
    {500, 0.9999999999999993, 6.1068169253395325e-16},
    {1000, 1.0, 5.369417589290512e-31},
};
}  // namespace

TEST_CASE("exact_ratio small orders", "[asymptotics]") {
    CHECK(exact_ratio(3) == 0.6);
    CHECK(exact_ratio(2) == 0.5);
    CHECK(exact_ratio(5) == Approx(1050.0 / 1764.0).epsilon(1e-15));
    CHECK_THROWS_AS(exact_ratio(1), ArgumentError);
    CHECK_THROWS_AS(exact_ratio(2001), ResourceLimitError);
}

TEST_CASE("exact ratios match frozen reference values", "[asymptotics][regression]") {
    for (const auto& f : kFrozen) {
        INFO("n=" << f.n);
        const auto row = asymptotic_row(f.n);
        CHECK(row.exact_ratio == Approx(f.reducible).epsilon(1e-14));
        CHECK(row.irreducible_exact_ratio == Approx(f.irreducible).epsilon(1e-13));
    }
}

TEST_CASE("estimate and bound ratios", "[asymptotics]") {
    CHECK(estimate_ratio(16) == Approx(1.125 * (1 - std::exp(-1.0))));
    CHECK(estimate_ratio(16) == Approx(0.711).margin(1e-3));
    CHECK(estimate_ratio(3) == Approx(5.0 / 3.0 * (1 - std::exp(-3.0 / 16))));
    CHECK(estimate_ratio(3) == Approx(0.2850).margin(1e-4));
    CHECK(estimate_ratio(10000) == Approx(1.0).margin(1e-3));
    CHECK(theorem_bound_ratio(16) == Approx(0.2889).margin(1e-4));
    CHECK(theorem_bound_ratio(2) == Approx(0.7650).margin(1e-4));
    CHECK(theorem_bound_ratio(10000) == Approx(2.0 / 10000).epsilon(1e-6));
    CHECK(theorem_bound_ratio(10000) < 1e-3);
}

TEST_CASE("exact ratio lies in (0, 1] over the closed-form range", "[asymptotics][property]") {
    for (long n = 2; n <= 2000; n += (n < 100 ? 1 : 97)) {
        INFO("n=" << n);
        const BigRat r = reducible_fraction(n);
        CHECK(r.sign() > 0);
        CHECK(r <= BigRat(1));
    }
    const BigRat last = reducible_fraction(2000);
    CHECK(last.sign() > 0);
    CHECK(last <= BigRat(1));
}

TEST_CASE("term comparison", "[asymptotics]") {
    const auto terms = term_comparison(100, 3);
    REQUIRE(terms.size() == 3);
    CHECK(terms[0].sign == 1);
    CHECK(terms[1].sign == -1);
    CHECK(terms[0].exact_term == Approx(0.06439862629731573).epsilon(1e-13));
    CHECK(terms[0].heuristic_term == Approx(1.0 / 16));
    CHECK(terms[1].exact_term == Approx(0.2053474710580747).epsilon(1e-13));
    CHECK(terms[1].heuristic_term == Approx(0.1953125));
    CHECK(std::fabs(terms[1].exact_term - terms[1].heuristic_term) / terms[1].exact_term < 0.15);

    // k = 1 exact term tends to 1/16.
    const auto far = term_comparison(2000, 1);
    CHECK(far[0].exact_term == Approx(1.0 / 16).epsilon(2e-3));

    CHECK_THROWS_AS(term_comparison(10, 6), ArgumentError);
    CHECK_THROWS_AS(term_comparison(10, 0), ArgumentError);
}

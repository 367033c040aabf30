#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "reversive/lagrange.hpp"

using namespace reversive;
using oracle::ints;

namespace {
const ReversiveSymbol& sym(SequenceId id) { return catalog_entry(id).symbol; }
}  // namespace

TEST_CASE("lagrange_coefficients: listed sequences") {
    CHECK(lagrange_coefficients(sym(SequenceId::Catalan), 5) == ints({1, 1, 2, 5, 14, 42}));
    CHECK(lagrange_coefficients(sym(SequenceId::Schroeder), 5) == ints({1, 1, 3, 11, 45, 197}));
    CHECK(lagrange_coefficients(sym(SequenceId::TriangleFree), 6) == ints({1, 0, 1, 1, 4, 8, 25}));
    CHECK(lagrange_coefficients(sym(SequenceId::EvenTiles), 6) == ints({1, 0, 1, 0, 4, 0, 21}));
    CHECK(lagrange_coefficients(sym(SequenceId::OddTiles), 7) == ints({1, 1, 2, 6, 20, 71, 264, 1015}));
    CHECK(lagrange_coefficients(sym(SequenceId::Motzkin), 10) ==
          ints({1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188}));
}

TEST_CASE("lagrange_coefficients: N = 0 gives a_0 = 1 for every symbol") {
    for (const auto& e : catalog()) {
        CHECK(lagrange_coefficients(e.symbol, 0) == ints({1}));
    }
}

TEST_CASE("Catalan terms match the convolution recurrence") {
    CHECK(lagrange_coefficients(sym(SequenceId::Catalan), 60) == oracle::catalan_recurrence(60));
}

TEST_CASE("incremental and per-term strategies are bit-identical") {
    for (const auto& e : catalog()) {
        INFO(e.symbol.name());
        CHECK(lagrange_coefficients(e.symbol, 60, LagrangeStrategy::Incremental) ==
              lagrange_coefficients(e.symbol, 60, LagrangeStrategy::PerTermPowers));
    }
}

TEST_CASE("Lagrange route agrees with direct reversion at N = 100") {
    for (const auto& e : catalog()) {
        INFO(e.symbol.name());
        CHECK(lagrange_coefficients(e.symbol, 100) == reversion_coefficients(e.symbol, 100));
    }
}

TEST_CASE("reversion round trip at N = 100") {
    for (const auto& e : catalog()) {
        const TruncatedSeries alpha = expand(e.symbol, 100);
        CHECK(compose(alpha, revert_direct(alpha)) == TruncatedSeries::identity(100));
    }
}

TEST_CASE("non-integral inverse coefficients are rejected") {
    // alpha = F + F^2/2 reverts to x - x^2/2 + ...
    const ReversiveSymbol half("half", Polynomial{0, 2, 1}, Polynomial{2});
    CHECK_THROWS_AS(lagrange_coefficients(half, 3), NonIntegerCoefficient);
    CHECK_THROWS_AS(lagrange_coefficients(half, 3, LagrangeStrategy::PerTermPowers),
                    NonIntegerCoefficient);
    CHECK_THROWS_AS(reversion_coefficients(half, 3), NonIntegerCoefficient);
}

TEST_CASE("lagrange_kernel is t / alpha(t)") {
    for (const auto& e : catalog()) {
        const TruncatedSeries k = lagrange_kernel(e.symbol, 12);
        // alpha(t) * kernel = t
        CHECK(mul(expand(e.symbol, 13).truncated(12), k) == TruncatedSeries::identity(12));
    }
}

#pragma once

#include <cstddef>
#include <vector>

#include "reversive/exact_arith.hpp"
#include "reversive/power_series.hpp"
#include "reversive/symbols.hpp"

namespace reversive {

enum class LagrangeStrategy {
    /// h^n = h^{n-1} * h, one product per term at full precision.
    Incremental,
    /// h^n by repeated squaring at precision n-1, independently per n and
    /// spread across worker threads.
    PerTermPowers,
};

/// The series t / alpha(t) through t^precision.
TruncatedSeries lagrange_kernel(const ReversiveSymbol& alpha, std::size_t precision);

/// a_0..a_N with sum a_n x^{n+1} the compositional inverse of alpha, from
///
///     a_{n-1} = (1/n) [t^{n-1}] (t / alpha(t))^n,   n = 1..N+1.
///
/// Both strategies give bit-identical results. Throws NonIntegerCoefficient
/// if some 1/n division does not land on an integer.
std::vector<Integer> lagrange_coefficients(const ReversiveSymbol& alpha, std::size_t max_index,
                                           LagrangeStrategy strategy = LagrangeStrategy::Incremental);

/// a_0..a_N read off revert_direct(expand(alpha, N+1)), shifted down one index.
std::vector<Integer> reversion_coefficients(const ReversiveSymbol& alpha, std::size_t max_index);

}  // namespace reversive

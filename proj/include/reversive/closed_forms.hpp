#pragma once

// Binomial-sum evaluators for the catalogued sequences. Each sum is taken
// exactly as written, including its upper limit, and the final division by
// n+1 (or 2m+1) goes through exact_div, so a convention error surfaces as a
// DivisibilityViolation instead of a rounded value.
//
// Boundary behaviour at n = 0:
//   * triangle_free_term, catalan_term, motzkin_term: 1.
//   * schroeder_term(0) = 1 without consulting the sum; the sum's factor
//     C(-1, k) = (-1)^k makes it collapse to 0 there.
//   * even_term(0) = 1 without consulting the sum, which evaluates to 0 at
//     m = 0. The value 1 is the constant term forced by the symbol's unit slope.
//   * odd_term(0) throws DomainError. The sum gives 1 under the binomial
//     convention used here (C(-2,-2) = 0); the value -1 quoted for the 2-gon
//     needs C(-2,-2) = 1 instead. Neither is reported.

#include "reversive/exact_arith.hpp"
#include "reversive/symbols.hpp"

namespace reversive {

/// Raw numerators before the final division; exposed for the divisibility
/// checks. `upper` overrides the summation limit (default: as written).
struct ClosedFormSum {
    Integer sum;
    Integer divisor;
};

ClosedFormSum triangle_free_sum(long n, long upper);
ClosedFormSum odd_sum(long n, long upper);
ClosedFormSum even_sum(long m, long upper);
ClosedFormSum schroeder_sum(long n, long upper);
ClosedFormSum motzkin_sum(long n, long upper);

/// Default upper limits of the sums above.
long triangle_free_upper(long n);  // ceil((n-1)/2)
long odd_upper(long n);            // ceil((n+1)/2)
long even_upper(long m);           // m
long schroeder_upper(long n);      // n+1
long motzkin_upper(long n);        // n+1

/// Dissections with no triangular tile.
Integer triangle_free_term(long n);
/// Dissections whose tiles all have an odd side-count; n >= 1.
Integer odd_term(long n);
/// Dissections whose tiles all have an even side-count; zero for odd n.
Integer even_term(long n);
Integer schroeder_term(long n);
Integer catalan_term(long n);
Integer motzkin_term(long n);

/// Dispatch by catalog id.
Integer closed_term(SequenceId id, long n);

}  // namespace reversive

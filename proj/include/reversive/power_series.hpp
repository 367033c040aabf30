#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "reversive/exact_arith.hpp"

namespace reversive {

/// A formal power series c_0 + c_1 x + ... + c_N x^N known modulo x^{N+1}.
///
/// The precision N is fixed at construction. Binary operations produce a
/// result at the smaller of the two operand precisions and never change it
/// adaptively.
class TruncatedSeries {
public:
    /// The zero series at precision N.
    explicit TruncatedSeries(std::size_t precision);

    /// Coefficients are padded with zeros or truncated to precision + 1 terms.
    TruncatedSeries(std::vector<Rational> coeffs, std::size_t precision);
    TruncatedSeries(std::initializer_list<long> coeffs, std::size_t precision);

    static TruncatedSeries constant(const Rational& c, std::size_t precision);
    /// The series x (zero when precision is 0).
    static TruncatedSeries identity(std::size_t precision);

    std::size_t precision() const noexcept { return precision_; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

    /// Coefficient of x^i; zero above the precision.
    Rational operator[](std::size_t i) const;
    void set(std::size_t i, const Rational& value);

    /// Same series viewed at a lower precision. Throws if asked to raise it.
    TruncatedSeries truncated(std::size_t precision) const;

    bool is_zero() const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<Rational> coeffs_;
    std::size_t precision_;
};

TruncatedSeries add(const TruncatedSeries& s, const TruncatedSeries& t);
TruncatedSeries sub(const TruncatedSeries& s, const TruncatedSeries& t);
TruncatedSeries negate(const TruncatedSeries& s);
TruncatedSeries scale(const TruncatedSeries& s, const Rational& c);

/// Cauchy product truncated at the smaller precision.
TruncatedSeries mul(const TruncatedSeries& s, const TruncatedSeries& t);

/// Multiplicative inverse; throws NonUnitSeries when s[0] == 0.
TruncatedSeries reciprocal(const TruncatedSeries& s);

/// s^n by repeated squaring; pow(s, 0) is the constant 1.
TruncatedSeries pow(const TruncatedSeries& s, unsigned long n);

/// outer(inner(x)). Requires inner[0] == 0, else NonZeroInnerConstant.
TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner);

/// Compositional inverse G of alpha, so that compose(alpha, G) == x.
///
/// Solves the lower-triangular system for g_1, g_2, ... one coefficient at a
/// time: [x^k] alpha(G) = alpha_1 g_k + (terms in g_1..g_{k-1}) = 0 for k >= 2.
/// Powers G^j are kept and extended one coefficient per step.
/// Throws NotRevertible unless alpha[0] == 0 and alpha[1] != 0.
TruncatedSeries revert_direct(const TruncatedSeries& alpha);

/// Human-readable rendering such as "1 + 2*x - 1/3*x^2 + O(x^4)".
std::string to_string(const TruncatedSeries& s);

}  // namespace reversive

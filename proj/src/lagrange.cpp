#include "reversive/lagrange.hpp"

#include "reversive/detail/parallel.hpp"

namespace reversive {

namespace {

Integer lagrange_term(const Rational& coeff, std::size_t n) {
    const Rational value = coeff / Rational(static_cast<unsigned long>(n));
    if (value.get_den() != 1) {
        throw NonIntegerCoefficient("Lagrange coefficient a_" + std::to_string(n - 1) + " = " +
                                    to_string(value) + " is not an integer");
    }
    return value.get_num();
}

}  // namespace

TruncatedSeries lagrange_kernel(const ReversiveSymbol& alpha, std::size_t precision) {
    // t / alpha(t) = Q(t) / (P(t) / t); P(t)/t has constant term P[1] != 0.
    const auto& p = alpha.numerator().coeffs();
    std::vector<Rational> shifted(precision + 1);
    for (std::size_t i = 1; i < p.size() && i - 1 <= precision; ++i) {
        shifted[i - 1] = p[i];
    }
    return mul(alpha.denominator().to_series(precision),
               reciprocal(TruncatedSeries(std::move(shifted), precision)));
}

std::vector<Integer> lagrange_coefficients(const ReversiveSymbol& alpha, std::size_t max_index,
                                           LagrangeStrategy strategy) {
    const TruncatedSeries kernel = lagrange_kernel(alpha, max_index);
    std::vector<Integer> out(max_index + 1);

    if (strategy == LagrangeStrategy::Incremental) {
        TruncatedSeries power = TruncatedSeries::constant(Rational(1), max_index);
        for (std::size_t n = 1; n <= max_index + 1; ++n) {
            power = mul(power, kernel);
            out[n - 1] = lagrange_term(power[n - 1], n);
        }
        return out;
    }

    detail::parallel_for(max_index + 1, [&](std::size_t i) {
        const std::size_t n = i + 1;
        const TruncatedSeries power = pow(kernel.truncated(n - 1), n);
        out[i] = lagrange_term(power[n - 1], n);
    });
    return out;
}

std::vector<Integer> reversion_coefficients(const ReversiveSymbol& alpha, std::size_t max_index) {
    const TruncatedSeries inverse = revert_direct(expand(alpha, max_index + 1));
    std::vector<Integer> out(max_index + 1);
    for (std::size_t n = 0; n <= max_index; ++n) {
        out[n] = to_integer(inverse[n + 1]);
    }
    return out;
}

}  // namespace reversive

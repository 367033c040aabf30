#include "reversive/power_series.hpp"

#include <algorithm>
#include <sstream>

namespace reversive {

TruncatedSeries::TruncatedSeries(std::size_t precision)
    : coeffs_(precision + 1), precision_(precision) {}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs, std::size_t precision)
    : coeffs_(std::move(coeffs)), precision_(precision) {
    coeffs_.resize(precision + 1);
}

TruncatedSeries::TruncatedSeries(std::initializer_list<long> coeffs, std::size_t precision)
    : coeffs_(precision + 1), precision_(precision) {
    std::size_t i = 0;
    for (long c : coeffs) {
        if (i > precision) {
            break;
        }
        coeffs_[i++] = c;
    }
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, std::size_t precision) {
    TruncatedSeries s(precision);
    s.coeffs_[0] = c;
    return s;
}

TruncatedSeries TruncatedSeries::identity(std::size_t precision) {
    TruncatedSeries s(precision);
    if (precision >= 1) {
        s.coeffs_[1] = 1;
    }
    return s;
}

Rational TruncatedSeries::operator[](std::size_t i) const {
    return i <= precision_ ? coeffs_[i] : Rational(0);
}

void TruncatedSeries::set(std::size_t i, const Rational& value) {
    if (i > precision_) {
        throw std::out_of_range("coefficient index above series precision");
    }
    coeffs_[i] = value;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t precision) const {
    if (precision > precision_) {
        throw std::invalid_argument("cannot raise the precision of a truncated series");
    }
    return TruncatedSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + precision + 1),
                           precision);
}

bool TruncatedSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

TruncatedSeries add(const TruncatedSeries& s, const TruncatedSeries& t) {
    const std::size_t n = std::min(s.precision(), t.precision());
    std::vector<Rational> out(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        out[i] = s.coeffs()[i] + t.coeffs()[i];
    }
    return TruncatedSeries(std::move(out), n);
}

TruncatedSeries sub(const TruncatedSeries& s, const TruncatedSeries& t) {
    return add(s, negate(t));
}

TruncatedSeries negate(const TruncatedSeries& s) { return scale(s, Rational(-1)); }

TruncatedSeries scale(const TruncatedSeries& s, const Rational& c) {
    std::vector<Rational> out(s.coeffs());
    for (auto& x : out) {
        x *= c;
    }
    return TruncatedSeries(std::move(out), s.precision());
}

TruncatedSeries mul(const TruncatedSeries& s, const TruncatedSeries& t) {
    const std::size_t n = std::min(s.precision(), t.precision());
    const auto& a = s.coeffs();
    const auto& b = t.coeffs();
    std::vector<Rational> out(n + 1);
    Rational term;
    for (std::size_t i = 0; i <= n; ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; i + j <= n; ++j) {
            if (b[j] == 0) {
                continue;
            }
            term = a[i] * b[j];
            out[i + j] += term;
        }
    }
    return TruncatedSeries(std::move(out), n);
}

TruncatedSeries reciprocal(const TruncatedSeries& s) {
    const auto& a = s.coeffs();
    if (a[0] == 0) {
        throw NonUnitSeries("reciprocal of a series with zero constant term");
    }
    const std::size_t n = s.precision();
    std::vector<Rational> r(n + 1);
    const Rational inv0 = 1 / a[0];
    r[0] = inv0;
    for (std::size_t k = 1; k <= n; ++k) {
        Rational acc;
        for (std::size_t i = 1; i <= k; ++i) {
            if (a[i] != 0) {
                acc += a[i] * r[k - i];
            }
        }
        r[k] = -acc * inv0;
    }
    return TruncatedSeries(std::move(r), n);
}

TruncatedSeries pow(const TruncatedSeries& s, unsigned long n) {
    TruncatedSeries result = TruncatedSeries::constant(Rational(1), s.precision());
    TruncatedSeries base = s;
    while (n > 0) {
        if (n & 1UL) {
            result = mul(result, base);
        }
        n >>= 1;
        if (n > 0) {
            base = mul(base, base);
        }
    }
    return result;
}

TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
    if (inner.coeffs()[0] != 0) {
        throw NonZeroInnerConstant("inner series of a composition must have zero constant term");
    }
    const std::size_t n = std::min(outer.precision(), inner.precision());
    const TruncatedSeries g = inner.truncated(n);
    // Horner: c_0 + g(c_1 + g(c_2 + ...)).
    TruncatedSeries acc = TruncatedSeries::constant(outer[n], n);
    for (std::size_t k = n; k-- > 0;) {
        acc = mul(acc, g);
        acc.set(0, acc[0] + outer[k]);
    }
    return acc;
}

TruncatedSeries revert_direct(const TruncatedSeries& alpha) {
    const auto& a = alpha.coeffs();
    const std::size_t n = alpha.precision();
    if (a[0] != 0) {
        throw NotRevertible("series to revert must have zero constant term");
    }
    if (n < 1 || a[1] == 0) {
        throw NotRevertible("series to revert must have a nonzero linear coefficient");
    }
    // powers[j][k] = [x^k] G^j for j = 1..n; only entries k < current step are final.
    std::vector<std::vector<Rational>> powers(n + 1, std::vector<Rational>(n + 1));
    const Rational inv1 = 1 / a[1];
    for (std::size_t k = 1; k <= n; ++k) {
        Rational rhs = (k == 1) ? Rational(1) : Rational(0);
        for (std::size_t j = 2; j <= k; ++j) {
            // [x^k] G^j = sum_i g_i [x^{k-i}] G^{j-1}; G^{j-1} starts at x^{j-1}.
            Rational c;
            for (std::size_t i = 1; i + (j - 1) <= k; ++i) {
                const Rational& gi = powers[1][i];
                const Rational& p = powers[j - 1][k - i];
                if (gi != 0 && p != 0) {
                    c += gi * p;
                }
            }
            powers[j][k] = c;
            if (a[j] != 0) {
                rhs -= a[j] * c;
            }
        }
        powers[1][k] = rhs * inv1;
    }
    return TruncatedSeries(std::move(powers[1]), n);
}

std::string to_string(const TruncatedSeries& s) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i <= s.precision(); ++i) {
        const Rational& c = s.coeffs()[i];
        if (c == 0) {
            continue;
        }
        Rational mag = abs(c);
        if (first) {
            out << (c < 0 ? "-" : "");
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            out << mag.get_str();
            continue;
        }
        if (mag != 1) {
            out << mag.get_str() << "*";
        }
        out << "x";
        if (i > 1) {
            out << "^" << i;
        }
    }
    if (first) {
        out << "0";
    }
    out << " + O(x^" << s.precision() + 1 << ")";
    return out.str();
}

}  // namespace reversive

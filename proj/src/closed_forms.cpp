#include "reversive/closed_forms.hpp"

namespace reversive {

namespace {

void require_non_negative(long n, const char* what) {
    if (n < 0) {
        throw DomainError(std::string(what) + ": index must be non-negative");
    }
}

// ceil(a / 2) for any integer a.
long ceil_half(long a) { return a >= 0 ? (a + 1) / 2 : -((-a) / 2); }

Integer finish(const ClosedFormSum& s) { return exact_div(s.sum, s.divisor); }

}  // namespace

long triangle_free_upper(long n) { return ceil_half(n - 1); }
long odd_upper(long n) { return ceil_half(n + 1); }
long even_upper(long m) { return m; }
long schroeder_upper(long n) { return n + 1; }
long motzkin_upper(long n) { return n + 1; }

ClosedFormSum triangle_free_sum(long n, long upper) {
    Integer sum;
    for (long k = 0; k <= upper; ++k) {
        sum += binomial(n + k, k) * binomial(n - k - 1, k - 1);
    }
    return {sum, n + 1};
}

ClosedFormSum odd_sum(long n, long upper) {
    Integer sum;
    for (long k = 0; k <= upper; ++k) {
        sum += binomial(2 * n - 2 * k, n - 2 * k) * binomial(n - k - 1, k);
    }
    return {sum, n + 1};
}

ClosedFormSum even_sum(long m, long upper) {
    Integer sum;
    for (long k = 0; k <= upper; ++k) {
        sum += binomial(2 * m + k, k) * binomial(m - 1, k - 1);
    }
    return {sum, 2 * m + 1};
}

ClosedFormSum schroeder_sum(long n, long upper) {
    Integer sum;
    for (long k = 0; k <= upper; ++k) {
        sum += binomial(2 * n - k, n) * binomial(n - 1, k);
    }
    return {sum, n + 1};
}

ClosedFormSum motzkin_sum(long n, long upper) {
    Integer sum;
    for (long k = 0; k <= upper; ++k) {
        sum += binomial(n + 1, k) * binomial(k, 2 * k - n - 2);
    }
    return {sum, n + 1};
}

Integer triangle_free_term(long n) {
    require_non_negative(n, "triangle_free_term");
    if (n == 0) {
        return 1;
    }
    return finish(triangle_free_sum(n, triangle_free_upper(n)));
}

Integer odd_term(long n) {
    if (n < 1) {
        throw DomainError("odd_term: the odd-tile sum is not used at n = 0 (its value there "
                          "depends on the binomial convention); n must be >= 1");
    }
    return finish(odd_sum(n, odd_upper(n)));
}

Integer even_term(long n) {
    require_non_negative(n, "even_term");
    if (n == 0) {
        return 1;
    }
    if (n % 2 == 1) {
        return 0;
    }
    const long m = n / 2;
    return finish(even_sum(m, even_upper(m)));
}

Integer schroeder_term(long n) {
    require_non_negative(n, "schroeder_term");
    if (n == 0) {
        return 1;
    }
    return finish(schroeder_sum(n, schroeder_upper(n)));
}

Integer catalan_term(long n) {
    require_non_negative(n, "catalan_term");
    return exact_div(binomial(2 * n, n), n + 1);
}

Integer motzkin_term(long n) {
    require_non_negative(n, "motzkin_term");
    return finish(motzkin_sum(n, motzkin_upper(n)));
}

Integer closed_term(SequenceId id, long n) {
    switch (id) {
        case SequenceId::TriangleFree: return triangle_free_term(n);
        case SequenceId::OddTiles: return odd_term(n);
        case SequenceId::EvenTiles: return even_term(n);
        case SequenceId::Schroeder: return schroeder_term(n);
        case SequenceId::Catalan: return catalan_term(n);
        case SequenceId::Motzkin: return motzkin_term(n);
    }
    throw DomainError("unknown sequence id");
}

}  // namespace reversive

#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "reversive/exact_arith.hpp"
#include "reversive/power_series.hpp"

namespace reversive {

/// Univariate polynomial with Integer coefficients, lowest degree first.
/// The zero polynomial has no coefficients; otherwise the last one is nonzero.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Integer> coeffs);
    Polynomial(std::initializer_list<long> coeffs);

    const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    Integer operator[](std::size_t i) const;

    TruncatedSeries to_series(std::size_t precision) const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    std::vector<Integer> coeffs_;
};

Polynomial operator+(const Polynomial& p, const Polynomial& q);
Polynomial operator-(const Polynomial& p, const Polynomial& q);
Polynomial operator*(const Polynomial& p, const Polynomial& q);
/// c * x^degree
Polynomial monomial(const Integer& c, std::size_t degree);

/// alpha(F) = numerator(F) / denominator(F) with alpha(0) = 0 and alpha'(0) = 1.
///
/// The compositional inverse of alpha is x * A(x), where A is the generating
/// function of the catalogued sequence.
class ReversiveSymbol {
public:
    /// Throws InvalidSymbol unless numerator(0) == 0, denominator(0) != 0 and
    /// numerator[1] == denominator[0] (unit slope).
    ReversiveSymbol(std::string name, Polynomial numerator, Polynomial denominator);

    const std::string& name() const noexcept { return name_; }
    const Polynomial& numerator() const noexcept { return numerator_; }
    const Polynomial& denominator() const noexcept { return denominator_; }

    /// Same rational function (P1 Q2 == P2 Q1), ignoring names.
    bool equivalent(const ReversiveSymbol& other) const;

    friend bool operator==(const ReversiveSymbol&, const ReversiveSymbol&) = default;

private:
    std::string name_;
    Polynomial numerator_;
    Polynomial denominator_;
};

/// Which tile side-counts a dissection may use.
///
/// Every rule is a finite set of side-counts plus an optional arithmetic tail
/// {from, from + step, from + 2 step, ...}. The named kinds are fixed shapes
/// of that representation; Custom carries a user-chosen set and an optional
/// "all sizes >= from" tail.
class TileRule {
public:
    enum class Kind { Any, TrianglesOnly, NoTriangles, OddOnly, EvenOnly, Custom };

    struct Tail {
        int from;
        int step;
        friend bool operator==(const Tail&, const Tail&) = default;
    };

    static TileRule any();
    static TileRule triangles_only();
    static TileRule no_triangles();
    static TileRule odd_only();
    static TileRule even_only();
    /// Throws InvalidTileSet when a size is < 3 or nothing is allowed.
    static TileRule custom(std::set<int> sizes, std::optional<int> all_from = std::nullopt);

    Kind kind() const noexcept { return kind_; }
    /// Finite sizes not already covered by the tail.
    const std::set<int>& sizes() const noexcept { return sizes_; }
    const std::optional<Tail>& tail() const noexcept { return tail_; }

    bool allows(int sides) const;
    /// Allowed side-counts s with 3 <= s <= max_sides, ascending.
    std::vector<int> sizes_up_to(int max_sides) const;
    /// Keyword or comma form accepted by parse_tile_rule.
    std::string describe() const;

    friend bool operator==(const TileRule&, const TileRule&) = default;

private:
    TileRule(Kind kind, std::set<int> sizes, std::optional<Tail> tail);

    Kind kind_;
    std::set<int> sizes_;
    std::optional<Tail> tail_;
};

/// Parses "any", "triangles", "notriangles", "odd", "even", or a comma list of
/// side-counts with an optional trailing '+' ("4+", "3,5", "3,6+").
TileRule parse_tile_rule(const std::string& text);

/// alpha(F) = F - sum_{s in S} F^{s-1}, with an arithmetic tail summed as the
/// geometric series F^{from-1} / (1 - F^step).
ReversiveSymbol symbol_from_tile_rule(const TileRule& rule);

/// Taylor coefficients of numerator/denominator through F^N.
TruncatedSeries expand(const ReversiveSymbol& symbol, std::size_t precision);

/// True iff alpha(sum a_n x^{n+1}) == x modulo x^{N+2}, with N + 1 = terms.size().
bool verify_inverse(const ReversiveSymbol& symbol, const std::vector<Integer>& terms);

/// True iff A = sum a_n x^n satisfies A = 1 + sum_{s in S} x^{s-2} A^{s-1}
/// modulo x^{N+1}.
bool verify_tautological(const TileRule& rule, const std::vector<Integer>& terms);

/// "name: (c0,c1,...)/(d0,d1,...)", or without the "name: " prefix when unnamed.
std::string format_symbol(const ReversiveSymbol& symbol);
/// Inverse of format_symbol. Throws ParseError or InvalidSymbol.
ReversiveSymbol parse_symbol(const std::string& text);

enum class SequenceId { TriangleFree, OddTiles, EvenTiles, Schroeder, Catalan, Motzkin };

struct CatalogEntry {
    SequenceId id;
    ReversiveSymbol symbol;
    std::optional<TileRule> rule;
};

/// The six catalogued symbols. Motzkin counts chord diagrams and has no rule.
const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(SequenceId id);
/// Throws UnknownName.
const CatalogEntry& catalog_entry(const std::string& name);

}  // namespace reversive

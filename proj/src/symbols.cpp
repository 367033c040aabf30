#include "reversive/symbols.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace reversive {

namespace {

void trim_trailing_zeros(std::vector<Integer>& c) {
    while (!c.empty() && c.back() == 0) {
        c.pop_back();
    }
}

std::string strip(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) {
        ++b;
    }
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) {
        --e;
    }
    return s.substr(b, e - b);
}

std::string format_coeffs(const Polynomial& p) {
    if (p.is_zero()) {
        return "(0)";
    }
    std::string out = "(";
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i > 0) {
            out += ",";
        }
        out += to_string(p.coeffs()[i]);
    }
    return out + ")";
}

// Parses "(c0,c1,...)" starting at pos; advances pos past ')'.
Polynomial parse_coeffs(const std::string& text, std::size_t& pos) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
    }
    if (pos >= text.size() || text[pos] != '(') {
        throw ParseError("expected '(' in symbol text '" + text + "'");
    }
    const std::size_t close = text.find(')', pos);
    if (close == std::string::npos) {
        throw ParseError("missing ')' in symbol text '" + text + "'");
    }
    std::vector<Integer> coeffs;
    std::stringstream items(text.substr(pos + 1, close - pos - 1));
    std::string item;
    while (std::getline(items, item, ',')) {
        coeffs.push_back(parse_integer(strip(item)));
    }
    if (coeffs.empty()) {
        throw ParseError("empty coefficient list in symbol text '" + text + "'");
    }
    pos = close + 1;
    return Polynomial(std::move(coeffs));
}

}  // namespace

// --- Polynomial --------------------------------------------------------------

Polynomial::Polynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
    trim_trailing_zeros(coeffs_);
}

Polynomial::Polynomial(std::initializer_list<long> coeffs) {
    for (long c : coeffs) {
        coeffs_.emplace_back(c);
    }
    trim_trailing_zeros(coeffs_);
}

Integer Polynomial::operator[](std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Integer(0);
}

TruncatedSeries Polynomial::to_series(std::size_t precision) const {
    std::vector<Rational> c(precision + 1);
    for (std::size_t i = 0; i < coeffs_.size() && i <= precision; ++i) {
        c[i] = coeffs_[i];
    }
    return TruncatedSeries(std::move(c), precision);
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    std::vector<Integer> c(std::max(p.coeffs().size(), q.coeffs().size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = p[i] + q[i];
    }
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) {
    std::vector<Integer> c(std::max(p.coeffs().size(), q.coeffs().size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = p[i] - q[i];
    }
    return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero()) {
        return {};
    }
    std::vector<Integer> c(p.coeffs().size() + q.coeffs().size() - 1);
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        for (std::size_t j = 0; j < q.coeffs().size(); ++j) {
            c[i + j] += p.coeffs()[i] * q.coeffs()[j];
        }
    }
    return Polynomial(std::move(c));
}

Polynomial monomial(const Integer& c, std::size_t degree) {
    std::vector<Integer> coeffs(degree + 1);
    coeffs[degree] = c;
    return Polynomial(std::move(coeffs));
}

// --- ReversiveSymbol ---------------------------------------------------------

ReversiveSymbol::ReversiveSymbol(std::string name, Polynomial numerator, Polynomial denominator)
    : name_(std::move(name)), numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
    if (numerator_[0] != 0) {
        throw InvalidSymbol("symbol numerator must vanish at F = 0");
    }
    if (denominator_[0] == 0) {
        throw InvalidSymbol("symbol denominator must be nonzero at F = 0");
    }
    if (numerator_[1] != denominator_[0]) {
        throw InvalidSymbol("symbol must have unit slope at F = 0");
    }
}

bool ReversiveSymbol::equivalent(const ReversiveSymbol& other) const {
    return numerator_ * other.denominator_ == other.numerator_ * denominator_;
}

// --- TileRule ----------------------------------------------------------------

TileRule::TileRule(Kind kind, std::set<int> sizes, std::optional<Tail> tail)
    : kind_(kind), sizes_(std::move(sizes)), tail_(tail) {}

TileRule TileRule::any() { return TileRule(Kind::Any, {}, Tail{3, 1}); }
TileRule TileRule::triangles_only() { return TileRule(Kind::TrianglesOnly, {3}, std::nullopt); }
TileRule TileRule::no_triangles() { return TileRule(Kind::NoTriangles, {}, Tail{4, 1}); }
TileRule TileRule::odd_only() { return TileRule(Kind::OddOnly, {}, Tail{3, 2}); }
TileRule TileRule::even_only() { return TileRule(Kind::EvenOnly, {}, Tail{4, 2}); }

TileRule TileRule::custom(std::set<int> sizes, std::optional<int> all_from) {
    if (sizes.empty() && !all_from) {
        throw InvalidTileSet("tile rule admits no side-count");
    }
    for (int s : sizes) {
        if (s < 3) {
            throw InvalidTileSet("tile side-count " + std::to_string(s) + " is below 3");
        }
    }
    if (all_from && *all_from < 3) {
        throw InvalidTileSet("tile side-count " + std::to_string(*all_from) + " is below 3");
    }
    std::optional<Tail> tail;
    if (all_from) {
        // Fold finite sizes that run contiguously into the tail start.
        int from = *all_from;
        while (sizes.count(from - 1) > 0) {
            --from;
        }
        std::erase_if(sizes, [from](int s) { return s >= from; });
        tail = Tail{from, 1};
    }
    return TileRule(Kind::Custom, std::move(sizes), tail);
}

bool TileRule::allows(int sides) const {
    if (sides < 3) {
        return false;
    }
    if (sizes_.count(sides) > 0) {
        return true;
    }
    return tail_ && sides >= tail_->from && (sides - tail_->from) % tail_->step == 0;
}

std::vector<int> TileRule::sizes_up_to(int max_sides) const {
    std::vector<int> out;
    for (int s = 3; s <= max_sides; ++s) {
        if (allows(s)) {
            out.push_back(s);
        }
    }
    return out;
}

std::string TileRule::describe() const {
    switch (kind_) {
        case Kind::Any: return "any";
        case Kind::TrianglesOnly: return "triangles";
        case Kind::NoTriangles: return "notriangles";
        case Kind::OddOnly: return "odd";
        case Kind::EvenOnly: return "even";
        case Kind::Custom: break;
    }
    std::string out;
    for (int s : sizes_) {
        out += (out.empty() ? "" : ",") + std::to_string(s);
    }
    if (tail_) {
        out += (out.empty() ? "" : ",") + std::to_string(tail_->from) + "+";
    }
    return out;
}

TileRule parse_tile_rule(const std::string& raw) {
    const std::string text = strip(raw);
    if (text == "any") return TileRule::any();
    if (text == "triangles") return TileRule::triangles_only();
    if (text == "notriangles") return TileRule::no_triangles();
    if (text == "odd") return TileRule::odd_only();
    if (text == "even") return TileRule::even_only();
    if (text.empty()) {
        throw ParseError("empty tile rule");
    }

    std::set<int> sizes;
    std::optional<int> all_from;
    std::stringstream items(text);
    std::string item;
    while (std::getline(items, item, ',')) {
        item = strip(item);
        if (all_from) {
            throw ParseError("'+' may only follow the last side-count in '" + text + "'");
        }
        bool tail = !item.empty() && item.back() == '+';
        if (tail) {
            item.pop_back();
        }
        if (item.empty() || !std::all_of(item.begin(), item.end(),
                                          [](unsigned char c) { return std::isdigit(c); })) {
            throw ParseError("bad side-count '" + item + "' in tile rule '" + text + "'");
        }
        if (item.size() > 6) {
            throw ParseError("side-count too large in tile rule '" + text + "'");
        }
        const int s = std::stoi(item);
        if (tail) {
            all_from = s;
        } else {
            sizes.insert(s);
        }
    }
    if (!text.empty() && text.back() == ',') {
        throw ParseError("trailing ',' in tile rule '" + text + "'");
    }
    return TileRule::custom(std::move(sizes), all_from);
}

ReversiveSymbol symbol_from_tile_rule(const TileRule& rule) {
    Polynomial finite = monomial(1, 1);
    for (int s : rule.sizes()) {
        finite = finite - monomial(1, static_cast<std::size_t>(s - 1));
    }
    if (!rule.tail()) {
        return ReversiveSymbol(rule.describe(), finite, Polynomial{1});
    }
    // F - finite_sum - F^{from-1}/(1-F^step) over the common denominator.
    const auto& tail = *rule.tail();
    const Polynomial denominator = Polynomial{1} - monomial(1, static_cast<std::size_t>(tail.step));
    const Polynomial numerator =
        finite * denominator - monomial(1, static_cast<std::size_t>(tail.from - 1));
    return ReversiveSymbol(rule.describe(), numerator, denominator);
}

TruncatedSeries expand(const ReversiveSymbol& symbol, std::size_t precision) {
    return mul(symbol.numerator().to_series(precision),
               reciprocal(symbol.denominator().to_series(precision)));
}

bool verify_inverse(const ReversiveSymbol& symbol, const std::vector<Integer>& terms) {
    const std::size_t precision = terms.size();
    std::vector<Rational> f(precision + 1);
    for (std::size_t n = 0; n < terms.size(); ++n) {
        f[n + 1] = terms[n];
    }
    const TruncatedSeries inverse(std::move(f), precision);
    return compose(expand(symbol, precision), inverse) == TruncatedSeries::identity(precision);
}

bool verify_tautological(const TileRule& rule, const std::vector<Integer>& terms) {
    if (terms.empty()) {
        return true;
    }
    const std::size_t precision = terms.size() - 1;
    std::vector<Rational> a(terms.begin(), terms.end());
    const TruncatedSeries series(std::move(a), precision);

    TruncatedSeries rhs = TruncatedSeries::constant(Rational(1), precision);
    const auto sizes = rule.sizes_up_to(static_cast<int>(precision) + 2);
    TruncatedSeries power = series;  // A^{s-1}, advanced incrementally
    int exponent = 1;
    for (int s : sizes) {
        while (exponent < s - 1) {
            power = mul(power, series);
            ++exponent;
        }
        const std::size_t shift = static_cast<std::size_t>(s - 2);
        for (std::size_t i = 0; i + shift <= precision; ++i) {
            rhs.set(i + shift, rhs[i + shift] + power[i]);
        }
    }
    return rhs == series;
}

std::string format_symbol(const ReversiveSymbol& symbol) {
    std::string body = format_coeffs(symbol.numerator()) + "/" + format_coeffs(symbol.denominator());
    return symbol.name().empty() ? body : symbol.name() + ": " + body;
}

ReversiveSymbol parse_symbol(const std::string& raw) {
    const std::string text = strip(raw);
    std::string name;
    std::size_t pos = 0;
    const std::size_t colon = text.find(':');
    if (colon != std::string::npos) {
        name = strip(text.substr(0, colon));
        if (name.empty()) {
            throw ParseError("empty symbol name in '" + text + "'");
        }
        pos = colon + 1;
    }
    Polynomial numerator = parse_coeffs(text, pos);
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
    }
    if (pos >= text.size() || text[pos] != '/') {
        throw ParseError("expected '/' between numerator and denominator in '" + text + "'");
    }
    ++pos;
    Polynomial denominator = parse_coeffs(text, pos);
    if (!strip(text.substr(pos)).empty()) {
        throw ParseError("unexpected trailing text in symbol '" + text + "'");
    }
    return ReversiveSymbol(std::move(name), std::move(numerator), std::move(denominator));
}

// --- catalog -----------------------------------------------------------------

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = {
        {SequenceId::TriangleFree,
         ReversiveSymbol("trianglefree", Polynomial{0, 1, -1, -1}, Polynomial{1, -1}),
         TileRule::no_triangles()},
        {SequenceId::OddTiles,
         ReversiveSymbol("oddtiles", Polynomial{0, 1, -1, -1}, Polynomial{1, 0, -1}),
         TileRule::odd_only()},
        {SequenceId::EvenTiles,
         ReversiveSymbol("eventiles", Polynomial{0, 1, 0, -2}, Polynomial{1, 0, -1}),
         TileRule::even_only()},
        {SequenceId::Schroeder,
         ReversiveSymbol("schroeder", Polynomial{0, 1, -2}, Polynomial{1, -1}),
         TileRule::any()},
        {SequenceId::Catalan,
         ReversiveSymbol("catalan", Polynomial{0, 1, -1}, Polynomial{1}),
         TileRule::triangles_only()},
        {SequenceId::Motzkin,
         ReversiveSymbol("motzkin", Polynomial{0, 1, -1}, Polynomial{1, 0, 0, -1}),
         std::nullopt},
    };
    return entries;
}

const CatalogEntry& catalog_entry(SequenceId id) {
    for (const auto& e : catalog()) {
        if (e.id == id) {
            return e;
        }
    }
    throw UnknownName("no catalog entry for sequence id");
}

const CatalogEntry& catalog_entry(const std::string& name) {
    for (const auto& e : catalog()) {
        if (e.symbol.name() == name) {
            return e;
        }
    }
    throw UnknownName("unknown catalog name '" + name + "'");
}

}  // namespace reversive

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "oracles.hpp"
#include "reversive/closed_forms.hpp"
#include "reversive/dissection_oracle.hpp"
#include "reversive/lagrange.hpp"

using namespace reversive;
using oracle::ints;

namespace {

std::vector<int> sorted_sides(const std::vector<Tile>& tiles) {
    std::vector<int> out;
    for (const auto& t : tiles) out.push_back(t.side_count());
    std::sort(out.begin(), out.end());
    return out;
}

const std::vector<std::pair<const char*, TileRule>>& five_rules() {
    static const std::vector<std::pair<const char*, TileRule>> rules = {
        {"any", TileRule::any()},
        {"triangles", TileRule::triangles_only()},
        {"notriangles", TileRule::no_triangles()},
        {"odd", TileRule::odd_only()},
        {"even", TileRule::even_only()},
    };
    return rules;
}

}  // namespace

TEST_CASE("tiles_of") {
    const auto square = tiles_of(Dissection{2, {}});
    REQUIRE(square.size() == 1);
    CHECK(square[0].side_count() == 4);

    auto split = tiles_of(Dissection{2, {{0, 2}}});
    REQUIRE(split.size() == 2);
    std::vector<std::vector<int>> faces;
    for (auto& t : split) {
        std::sort(t.vertices.begin(), t.vertices.end());
        faces.push_back(t.vertices);
    }
    std::sort(faces.begin(), faces.end());
    CHECK(faces == std::vector<std::vector<int>>{{0, 1, 2}, {0, 2, 3}});

    CHECK(sorted_sides(tiles_of(Dissection{4, {{0, 3}}})) == std::vector<int>{4, 4});
}

TEST_CASE("validity predicate") {
    CHECK(is_valid(Dissection{4, {{0, 2}, {2, 4}, {0, 4}}}));
    CHECK_FALSE(is_valid(Dissection{4, {{0, 3}, {1, 4}}}));   // crossing
    CHECK_FALSE(is_valid(Dissection{4, {{0, 1}}}));           // polygon edge
    CHECK_FALSE(is_valid(Dissection{4, {{0, 5}}}));           // closing edge
    CHECK_FALSE(is_valid(Dissection{4, {{0, 2}, {0, 2}}}));   // repeated
    CHECK(crosses({0, 3}, {1, 4}));
    CHECK_FALSE(crosses({0, 3}, {0, 2}));  // shared endpoint
    CHECK_FALSE(crosses({0, 3}, {3, 5}));
}

TEST_CASE("every enumerated dissection is valid, distinct and well-tiled") {
    for (int n = 1; n <= 7; ++n) {
        std::set<std::vector<Diagonal>> seen;
        std::map<std::size_t, int> by_size;
        for_each_dissection(n, [&](const Dissection& d) {
            CHECK(is_valid(d));
            auto key = d.diagonals;
            std::sort(key.begin(), key.end());
            CHECK(seen.insert(key).second);
            // Independent crossing check on every pair.
            for (std::size_t i = 0; i < d.diagonals.size(); ++i) {
                for (std::size_t j = i + 1; j < d.diagonals.size(); ++j) {
                    CHECK_FALSE(oracle::interleave({d.diagonals[i].a, d.diagonals[i].b},
                                                   {d.diagonals[j].a, d.diagonals[j].b}));
                }
            }
            const auto tiles = tiles_of(d);
            const auto m = d.diagonals.size();
            CHECK(tiles.size() == m + 1);
            int total = 0;
            for (const auto& t : tiles) {
                CHECK(t.side_count() >= 3);
                total += t.side_count();
            }
            CHECK(total == (n + 2) + 2 * static_cast<int>(m));
            // tiles_of and the test's own face cutter agree.
            std::vector<oracle::Chord> chords;
            for (const auto& x : d.diagonals) chords.push_back({x.a, x.b});
            auto expected = oracle::face_sizes(n + 2, chords);
            std::sort(expected.begin(), expected.end());
            CHECK(sorted_sides(tiles) == expected);
            ++by_size[m];
        });
        CHECK(Integer(static_cast<unsigned long>(seen.size())) == schroeder_term(n));
        // Triangulations are exactly the dissections with n-1 diagonals.
        CHECK(Integer(by_size[static_cast<std::size_t>(n - 1)]) == catalan_term(n));
    }
}

TEST_CASE("enumerate_count matches the all-subsets brute force for n <= 6") {
    for (int n = 0; n <= 6; ++n) {
        for (const auto& [name, rule] : five_rules()) {
            INFO(name << " n=" << n);
            const auto expected = oracle::subset_dissection_count(
                n, [&](int s) { return rule.allows(s); });
            CHECK(enumerate_count(n, rule) == Integer(static_cast<unsigned long>(expected)));
        }
    }
}

TEST_CASE("enumerate_count: listed values") {
    CHECK(enumerate_count(3, TileRule::any()) == 11);
    CHECK(enumerate_count(4, TileRule::no_triangles()) == 4);
    CHECK(enumerate_count(3, TileRule::triangles_only()) == 5);
    CHECK(enumerate_count(4, TileRule::even_only()) == 4);
    CHECK(enumerate_count(3, TileRule::even_only()) == 0);
    for (const auto& [name, rule] : five_rules()) {
        CHECK(enumerate_count(0, rule) == 1);
    }
    CHECK_THROWS_AS(enumerate_count(13, TileRule::any()), CapExceeded);
    CHECK_THROWS_AS(enumerate_count(5, TileRule::any(), 4), CapExceeded);
    CHECK_THROWS_AS(enumerate_count(5, TileRule::any(), kMaxExhaustiveN + 1), CapExceeded);
}

TEST_CASE("count_by_series: listed values") {
    CHECK(count_by_series(5, TileRule::any()) == ints({1, 1, 3, 11, 45, 197}));
    CHECK(count_by_series(5, TileRule::triangles_only()) == ints({1, 1, 2, 5, 14, 42}));
    // a_6 = 264 is what the all-subsets brute force and reversion both give.
    CHECK(count_by_series(6, TileRule::odd_only()) == ints({1, 1, 2, 6, 20, 71, 264}));
    CHECK(count_by_series(0, TileRule::any()) == ints({1}));
}

TEST_CASE("count_by_series equals reversion through n = 100") {
    for (const auto& e : catalog()) {
        if (!e.rule) continue;
        INFO(e.symbol.name());
        CHECK(count_by_series(100, *e.rule) == lagrange_coefficients(e.symbol, 100));
    }
}

TEST_CASE("custom rule: quadrilaterals only") {
    const TileRule quads = TileRule::custom({4});
    const auto terms = lagrange_coefficients(symbol_from_tile_rule(quads), 7);
    CHECK(terms == ints({1, 0, 1, 0, 3, 0, 12, 0}));
    for (int n = 0; n <= 7; ++n) {
        CHECK(enumerate_count(n, quads) == terms[static_cast<std::size_t>(n)]);
    }
    CHECK(count_by_series(7, quads) == terms);
}

TEST_CASE("custom rules with mixed tails agree across all three routes") {
    for (const char* spec : {"3,6+", "5+", "3,5", "4,7+", "6"}) {
        const TileRule rule = parse_tile_rule(spec);
        const auto terms = lagrange_coefficients(symbol_from_tile_rule(rule), 9);
        INFO(spec);
        CHECK(count_by_series(9, rule) == terms);
        for (int n = 0; n <= 9; ++n) {
            CHECK(enumerate_count(n, rule) == terms[static_cast<std::size_t>(n)]);
        }
    }
}

TEST_CASE("count_chord_diagrams") {
    CHECK(count_chord_diagrams(0) == 1);
    CHECK(count_chord_diagrams(3) == 4);
    CHECK(count_chord_diagrams(5) == 21);
    const auto rec = oracle::motzkin_recurrence(16);
    for (int p = 0; p <= 16; ++p) {
        CHECK(count_chord_diagrams(p) == rec[static_cast<std::size_t>(p)]);
    }
    CHECK_THROWS_AS(count_chord_diagrams(17), CapExceeded);
    CHECK_THROWS_AS(count_chord_diagrams(3, kMaxChordP + 1), CapExceeded);
}

TEST_CASE("dissection dump format") {
    CHECK(format_dissection(Dissection{4, {{0, 2}, {2, 5}}}) == "n=4 diagonals=(0,2);(2,5) tiles=[4,3,3]");
    CHECK(format_dissection(Dissection{2, {}}) == "n=2 diagonals= tiles=[4]");
}

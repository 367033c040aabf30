#pragma once

// Brute-force ground truth for the catalogued sequences.
//
// A dissection of the (n+2)-gon with vertices 0..n+1 is a set of pairwise
// non-crossing diagonals; dissections are distinct as labelled diagonal sets,
// with no quotient by rotation or reflection.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "reversive/exact_arith.hpp"
#include "reversive/symbols.hpp"

namespace reversive {

inline constexpr int kDefaultExhaustiveCap = 12;
inline constexpr int kDefaultChordCap = 16;
/// Largest n the enumerator supports at all (16-gon, 104 diagonals).
inline constexpr int kMaxExhaustiveN = 14;
inline constexpr int kMaxChordP = 24;

struct Diagonal {
    int a;
    int b;  // a < b
    friend auto operator<=>(const Diagonal&, const Diagonal&) = default;
};

struct Dissection {
    int n = 0;
    std::vector<Diagonal> diagonals;
};

struct Tile {
    std::vector<int> vertices;  // cyclic order
    int side_count() const { return static_cast<int>(vertices.size()); }
};

/// Interior crossing test for two diagonals; sharing an endpoint is not a crossing.
bool crosses(const Diagonal& d, const Diagonal& e);

/// True iff every diagonal joins non-adjacent vertices of the (n+2)-gon, no
/// two cross, none repeats, and there are at most n-1 of them.
bool is_valid(const Dissection& d);

/// Faces of the subdivision, found by splitting the polygon recursively along
/// its diagonals. Expects a valid dissection.
std::vector<Tile> tiles_of(const Dissection& d);

/// Calls visit once for every dissection of the (n+2)-gon, including the
/// empty one, choosing diagonals in lexicographic order.
void for_each_dissection(int n, const std::function<void(const Dissection&)>& visit);

/// Number of dissections of the (n+2)-gon all of whose tiles satisfy rule.
/// n = 0 gives 1 for every rule. Throws CapExceeded for n > cap, or when cap
/// itself is beyond kMaxExhaustiveN.
Integer enumerate_count(int n, const TileRule& rule, int cap = kDefaultExhaustiveCap);

/// a_0..a_{n_max} from fixed-point iteration of A = 1 + sum_{s in S} x^{s-2} A^{s-1},
/// starting at A = 1. Iteration k runs at precision k; coefficient k is final
/// after iteration k.
std::vector<Integer> count_by_series(int n_max, const TileRule& rule);

/// Non-crossing partial matchings of p labelled points on a circle (chords
/// share no endpoint and do not cross), including the empty matching.
Integer count_chord_diagrams(int p, int cap = kDefaultChordCap);

/// "n=<n> diagonals=(i,j);(k,l) tiles=[s1,s2,...]"
std::string format_dissection(const Dissection& d);

}  // namespace reversive

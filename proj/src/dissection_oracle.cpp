#include "reversive/dissection_oracle.hpp"

#include <algorithm>
#include <bitset>
#include <sstream>

#include "reversive/detail/parallel.hpp"
#include "reversive/power_series.hpp"

namespace reversive {

namespace {

constexpr std::size_t kMaxDiagonals = 128;
using DiagonalMask = std::bitset<kMaxDiagonals>;

struct Candidates {
    std::vector<Diagonal> diagonals;
    std::vector<DiagonalMask> crossing;  // crossing[i] = diagonals crossing diagonals[i]
};

Candidates candidates_for(int n) {
    const int vertices = n + 2;
    Candidates c;
    for (int a = 0; a < vertices; ++a) {
        for (int b = a + 2; b < vertices; ++b) {
            if (a == 0 && b == vertices - 1) {
                continue;
            }
            c.diagonals.push_back({a, b});
        }
    }
    c.crossing.resize(c.diagonals.size());
    for (std::size_t i = 0; i < c.diagonals.size(); ++i) {
        for (std::size_t j = 0; j < c.diagonals.size(); ++j) {
            if (crosses(c.diagonals[i], c.diagonals[j])) {
                c.crossing[i].set(j);
            }
        }
    }
    return c;
}

// Recursive splitting: polygon is a cyclic vertex list, diagonals all lie inside it.
void split(const std::vector<int>& polygon, std::vector<Diagonal> diagonals, std::vector<Tile>& out) {
    if (diagonals.empty()) {
        out.push_back(Tile{polygon});
        return;
    }
    const Diagonal cut = diagonals.back();
    diagonals.pop_back();

    const auto pa = std::find(polygon.begin(), polygon.end(), cut.a) - polygon.begin();
    const auto pb = std::find(polygon.begin(), polygon.end(), cut.b) - polygon.begin();
    const auto size = static_cast<std::ptrdiff_t>(polygon.size());
    std::vector<int> left;   // pa .. pb going forward
    std::vector<int> right;  // pb .. pa going forward
    for (auto i = pa;; i = (i + 1) % size) {
        left.push_back(polygon[static_cast<std::size_t>(i)]);
        if (i == pb) break;
    }
    for (auto i = pb;; i = (i + 1) % size) {
        right.push_back(polygon[static_cast<std::size_t>(i)]);
        if (i == pa) break;
    }

    auto contains = [](const std::vector<int>& poly, const Diagonal& d) {
        return std::find(poly.begin(), poly.end(), d.a) != poly.end() &&
               std::find(poly.begin(), poly.end(), d.b) != poly.end();
    };
    std::vector<Diagonal> left_diagonals;
    std::vector<Diagonal> right_diagonals;
    for (const auto& d : diagonals) {
        (contains(left, d) ? left_diagonals : right_diagonals).push_back(d);
    }
    split(left, std::move(left_diagonals), out);
    split(right, std::move(right_diagonals), out);
}

// Side counts without materializing tiles. The diagonals, seen as vertex
// intervals [a, b], form a laminar family; the tile under [a, b] keeps a and b
// plus every vertex strictly between them that no maximal sub-interval hides.
// The root interval [0, n+1] is the polygon edge closing the outer tile.
bool all_tiles_allowed(int vertices, const Diagonal* diagonals, std::size_t count,
                       const TileRule& rule) {
    auto inside = [](const Diagonal& inner, const Diagonal& outer) {
        return outer.a <= inner.a && inner.b <= outer.b && inner != outer;
    };
    auto sides_under = [&](const Diagonal& outer) {
        int sides = outer.b - outer.a + 1;
        for (std::size_t i = 0; i < count; ++i) {
            const Diagonal& c = diagonals[i];
            if (!inside(c, outer)) {
                continue;
            }
            bool maximal = true;
            for (std::size_t j = 0; j < count && maximal; ++j) {
                if (inside(c, diagonals[j]) && inside(diagonals[j], outer)) {
                    maximal = false;
                }
            }
            if (maximal) {
                sides -= c.b - c.a - 1;
            }
        }
        return sides;
    };
    if (!rule.allows(sides_under(Diagonal{0, vertices - 1}))) {
        return false;
    }
    for (std::size_t i = 0; i < count; ++i) {
        if (!rule.allows(sides_under(diagonals[i]))) {
            return false;
        }
    }
    return true;
}

struct CountingSearch {
    const Candidates& candidates;
    const TileRule& rule;
    int vertices;
    std::vector<Diagonal> chosen;
    std::uint64_t count = 0;

    void visit() {
        if (all_tiles_allowed(vertices, chosen.data(), chosen.size(), rule)) {
            ++count;
        }
    }

    void descend(std::size_t start, const DiagonalMask& forbidden) {
        visit();
        for (std::size_t i = start; i < candidates.diagonals.size(); ++i) {
            if (forbidden.test(i)) {
                continue;
            }
            chosen.push_back(candidates.diagonals[i]);
            descend(i + 1, forbidden | candidates.crossing[i]);
            chosen.pop_back();
        }
    }
};

void check_exhaustive_cap(int n, int cap) {
    if (cap > kMaxExhaustiveN) {
        throw CapExceeded("exhaustive cap " + std::to_string(cap) + " exceeds the supported maximum " +
                          std::to_string(kMaxExhaustiveN));
    }
    if (n > cap) {
        throw CapExceeded("n = " + std::to_string(n) + " exceeds the exhaustive cap " +
                          std::to_string(cap));
    }
}

}  // namespace

bool crosses(const Diagonal& d, const Diagonal& e) {
    return (d.a < e.a && e.a < d.b && d.b < e.b) || (e.a < d.a && d.a < e.b && e.b < d.b);
}

bool is_valid(const Dissection& d) {
    const int vertices = d.n + 2;
    if (d.n < 0) {
        return false;
    }
    if (static_cast<int>(d.diagonals.size()) > std::max(d.n - 1, 0)) {
        return false;
    }
    for (std::size_t i = 0; i < d.diagonals.size(); ++i) {
        const Diagonal& x = d.diagonals[i];
        if (x.a < 0 || x.b >= vertices || x.b - x.a < 2 || (x.a == 0 && x.b == vertices - 1)) {
            return false;
        }
        for (std::size_t j = i + 1; j < d.diagonals.size(); ++j) {
            if (x == d.diagonals[j] || crosses(x, d.diagonals[j])) {
                return false;
            }
        }
    }
    return true;
}

std::vector<Tile> tiles_of(const Dissection& d) {
    std::vector<int> polygon(static_cast<std::size_t>(d.n + 2));
    for (int v = 0; v < d.n + 2; ++v) {
        polygon[static_cast<std::size_t>(v)] = v;
    }
    std::vector<Tile> out;
    split(polygon, d.diagonals, out);
    return out;
}

void for_each_dissection(int n, const std::function<void(const Dissection&)>& visit) {
    check_exhaustive_cap(n, kMaxExhaustiveN);
    if (n < 0) {
        throw DomainError("for_each_dissection: n must be non-negative");
    }
    const Candidates candidates = candidates_for(n);
    Dissection current{n, {}};
    std::function<void(std::size_t, const DiagonalMask&)> descend =
        [&](std::size_t start, const DiagonalMask& forbidden) {
            visit(current);
            for (std::size_t i = start; i < candidates.diagonals.size(); ++i) {
                if (forbidden.test(i)) {
                    continue;
                }
                current.diagonals.push_back(candidates.diagonals[i]);
                descend(i + 1, forbidden | candidates.crossing[i]);
                current.diagonals.pop_back();
            }
        };
    descend(0, DiagonalMask{});
}

Integer enumerate_count(int n, const TileRule& rule, int cap) {
    check_exhaustive_cap(n, cap);
    if (n < 0) {
        throw DomainError("enumerate_count: n must be non-negative");
    }
    if (n == 0) {
        return 1;
    }
    const Candidates candidates = candidates_for(n);
    const int vertices = n + 2;

    // The empty dissection, then one independent subtree per first diagonal.
    std::uint64_t total = rule.allows(vertices) ? 1 : 0;
    std::vector<std::uint64_t> branch(candidates.diagonals.size());
    detail::parallel_for(candidates.diagonals.size(), [&](std::size_t first) {
        CountingSearch search{candidates, rule, vertices, {candidates.diagonals[first]}, 0};
        search.descend(first + 1, candidates.crossing[first]);
        branch[first] = search.count;
    });
    for (auto c : branch) {
        total += c;
    }
    return Integer(static_cast<unsigned long>(total));
}

std::vector<Integer> count_by_series(int n_max, const TileRule& rule) {
    if (n_max < 0) {
        throw DomainError("count_by_series: n_max must be non-negative");
    }
    const auto max_index = static_cast<std::size_t>(n_max);
    const std::vector<int> sizes = rule.sizes_up_to(n_max + 2);

    TruncatedSeries a = TruncatedSeries::constant(Rational(1), 0);
    for (std::size_t k = 1; k <= max_index; ++k) {
        const TruncatedSeries prev(a.coeffs(), k);
        TruncatedSeries next = TruncatedSeries::constant(Rational(1), k);
        TruncatedSeries power = prev;
        int exponent = 1;
        for (int s : sizes) {
            const auto shift = static_cast<std::size_t>(s - 2);
            if (shift > k) {
                break;
            }
            while (exponent < s - 1) {
                power = mul(power, prev.truncated(k - shift));
                ++exponent;
            }
            for (std::size_t i = 0; i + shift <= k; ++i) {
                next.set(i + shift, next[i + shift] + power[i]);
            }
        }
        a = std::move(next);
    }

    std::vector<Integer> out(max_index + 1);
    for (std::size_t i = 0; i <= max_index; ++i) {
        out[i] = to_integer(a[i]);
    }
    return out;
}

Integer count_chord_diagrams(int p, int cap) {
    if (cap > kMaxChordP) {
        throw CapExceeded("chord cap " + std::to_string(cap) + " exceeds the supported maximum " +
                          std::to_string(kMaxChordP));
    }
    if (p > cap) {
        throw CapExceeded("p = " + std::to_string(p) + " exceeds the chord cap " + std::to_string(cap));
    }
    if (p < 0) {
        throw DomainError("count_chord_diagrams: p must be non-negative");
    }
    std::vector<bool> used(static_cast<std::size_t>(p), false);
    std::vector<Diagonal> chords;
    std::uint64_t count = 0;
    // Points are decided in increasing order, so an earlier chord (a, b) has
    // a < i, and (i, j) crosses it exactly when a < i < b < j.
    std::function<void(int)> place = [&](int i) {
        while (i < p && used[static_cast<std::size_t>(i)]) {
            ++i;
        }
        if (i >= p) {
            ++count;
            return;
        }
        place(i + 1);  // i stays unmatched
        for (int j = i + 1; j < p; ++j) {
            if (used[static_cast<std::size_t>(j)]) {
                continue;
            }
            const bool blocked = std::any_of(chords.begin(), chords.end(), [&](const Diagonal& c) {
                return c.a < i && i < c.b && c.b < j;
            });
            if (blocked) {
                continue;
            }
            used[static_cast<std::size_t>(i)] = used[static_cast<std::size_t>(j)] = true;
            chords.push_back({i, j});
            place(i + 1);
            chords.pop_back();
            used[static_cast<std::size_t>(i)] = used[static_cast<std::size_t>(j)] = false;
        }
    };
    place(0);
    return Integer(static_cast<unsigned long>(count));
}

std::string format_dissection(const Dissection& d) {
    std::ostringstream out;
    out << "n=" << d.n << " diagonals=";
    for (std::size_t i = 0; i < d.diagonals.size(); ++i) {
        out << (i ? ";" : "") << "(" << d.diagonals[i].a << "," << d.diagonals[i].b << ")";
    }
    out << " tiles=[";
    const auto tiles = tiles_of(d);
    for (std::size_t i = 0; i < tiles.size(); ++i) {
        out << (i ? "," : "") << tiles[i].side_count();
    }
    out << "]";
    return out.str();
}

}  // namespace reversive

#include "ttp/construct.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace ttp {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

std::pair<int, int> edge(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

void gen_matchings(int n, std::vector<int>& free_teams, std::vector<std::pair<int, int>>& acc,
                   std::vector<PerfectMatching>& out) {
    if (free_teams.empty()) {
        out.push_back(PerfectMatching{n, acc});
        return;
    }
    int a = free_teams.front();
    for (std::size_t p = 1; p < free_teams.size(); ++p) {
        int b = free_teams[p];
        std::vector<int> rest;
        rest.reserve(free_teams.size() - 2);
        for (int t : free_teams) {
            if (t != a && t != b) rest.push_back(t);
        }
        acc.emplace_back(a, b);
        gen_matchings(n, rest, acc, out);
        acc.pop_back();
    }
}

}  // namespace

bool PerfectMatching::covers_all_teams() const {
    std::vector<int> hit(n + 1, 0);
    for (auto [a, b] : edges) {
        if (a < 1 || b > n || a >= b) return false;
        ++hit[a];
        ++hit[b];
    }
    for (int t = 1; t <= n; ++t) {
        if (hit[t] != 1) return false;
    }
    return true;
}

int edge_count(int n) { return n * (n - 1) / 2; }

int edge_index(int n, int a, int b) {
    auto [lo, hi] = edge(a, b);
    return (lo - 1) * n - lo * (lo - 1) / 2 + (hi - lo - 1);
}

std::vector<PerfectMatching> all_perfect_matchings(int n) {
    require(n >= 2 && n % 2 == 0, "perfect matchings require an even team count");
    std::vector<int> teams(n);
    std::iota(teams.begin(), teams.end(), 1);
    std::vector<PerfectMatching> out;
    std::vector<std::pair<int, int>> acc;
    gen_matchings(n, teams, acc, out);
    return out;
}

Factorization canonical_factorization(int n) {
    require(n >= 4 && n % 2 == 0, "factorization requires an even team count of at least 4");
    auto wrap = [n](int v) {
        int m = (v - 1) % (n - 1);
        if (m < 0) m += n - 1;
        return m + 1;  // representatives 1..n-1
    };
    Factorization f;
    f.n = n;
    f.rounds.reserve(2 * n - 2);
    for (int k = 1; k <= n - 1; ++k) {
        PerfectMatching m;
        m.n = n;
        m.edges.push_back(edge(k, n));
        for (int i = 1; i <= n / 2 - 1; ++i) m.edges.push_back(edge(wrap(k + i), wrap(k - i)));
        std::sort(m.edges.begin(), m.edges.end());
        f.rounds.push_back(std::move(m));
    }
    for (int k = n; k <= 2 * n - 2; ++k) f.rounds.push_back(f.rounds[k - n]);
    return f;
}

Tournament orient_complementary(const Factorization& f, const std::vector<bool>& flip) {
    const int n = f.n;
    require(static_cast<int>(f.rounds.size()) == 2 * n - 2, "factorization must have 2n-2 rounds");
    require(static_cast<int>(flip.size()) == edge_count(n), "one orientation choice per edge expected");

    std::vector<std::vector<int>> occurrences(edge_count(n));
    for (int k = 1; k <= 2 * n - 2; ++k) {
        for (auto [a, b] : f.rounds[k - 1].edges) occurrences[edge_index(n, a, b)].push_back(k);
    }
    std::vector<Match> matches;
    matches.reserve(n * (n - 1));
    for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) {
            const auto& occ = occurrences[edge_index(n, a, b)];
            if (occ.size() != 2) {
                std::ostringstream what;
                what << "edge {" << a << "," << b << "} occurs " << occ.size() << " times, expected 2";
                throw std::invalid_argument(what.str());
            }
            int k1 = occ[0], k2 = occ[1];
            if (flip[edge_index(n, a, b)]) std::swap(k1, k2);
            matches.push_back(Match{k1, a, b});
            matches.push_back(Match{k2, b, a});
        }
    }
    return Tournament(n, std::move(matches));
}

Tournament cyclic_shift(const Tournament& t, int shift) {
    const int slots = t.slot_count();
    std::vector<Match> matches;
    matches.reserve(t.matches().size());
    for (const Match& m : t.matches()) {
        int k = (m.slot - 1 + shift) % slots;
        if (k < 0) k += slots;
        matches.push_back(Match{k + 1, m.home, m.away});
    }
    return Tournament(t.team_count(), std::move(matches));
}

Tournament home_away_swap(const Tournament& t, int k1, int k2, int i, int j) {
    require(t.has_match(k1, i, j), "home-away swap requires the pair to play at the first venue");
    require(t.has_match(k2, j, i), "home-away swap requires the pair to play at the second venue");
    std::vector<Match> matches;
    matches.reserve(t.matches().size());
    for (const Match& m : t.matches()) {
        if (m == Match{k1, i, j}) {
            matches.push_back(Match{k1, j, i});
        } else if (m == Match{k2, j, i}) {
            matches.push_back(Match{k2, i, j});
        } else {
            matches.push_back(m);
        }
    }
    return Tournament(t.team_count(), std::move(matches));
}

Tournament partial_slot_swap(const Tournament& t, int k1, int k2, int i, int j, int i2, int j2) {
    require(i != j && i != i2 && i != j2 && j != i2 && j != j2 && i2 != j2,
            "partial slot swap requires four distinct teams");
    require(t.has_match(k1, i, j) && t.has_match(k1, i2, j2) && t.has_match(k2, i, j2) && t.has_match(k2, i2, j),
            "partial slot swap requires the four crossed matches to be present");
    std::vector<Match> matches;
    matches.reserve(t.matches().size());
    for (const Match& m : t.matches()) {
        if (m == Match{k1, i, j}) {
            matches.push_back(Match{k1, i, j2});
        } else if (m == Match{k1, i2, j2}) {
            matches.push_back(Match{k1, i2, j});
        } else if (m == Match{k2, i, j2}) {
            matches.push_back(Match{k2, i, j});
        } else if (m == Match{k2, i2, j}) {
            matches.push_back(Match{k2, i2, j2});
        } else {
            matches.push_back(m);
        }
    }
    return Tournament(t.team_count(), std::move(matches));
}

Tournament relabel_teams(const Tournament& t, const std::vector<int>& perm) {
    const int n = t.team_count();
    require(static_cast<int>(perm.size()) == n, "permutation size mismatch");
    std::vector<bool> seen(n + 1, false);
    for (int v : perm) {
        require(v >= 1 && v <= n && !seen[v], "not a permutation of the teams");
        seen[v] = true;
    }
    std::vector<Match> matches;
    matches.reserve(t.matches().size());
    for (const Match& m : t.matches()) matches.push_back(Match{m.slot, perm[m.home - 1], perm[m.away - 1]});
    return Tournament(n, std::move(matches));
}

namespace {

struct Enumerator {
    int n;
    int slots;
    const std::vector<PerfectMatching>& pool;
    const std::function<void(const Tournament&)>& visit;
    std::vector<int> used;        // per edge: 0, 1 or 2 placements so far
    std::vector<int> first_slot;  // per edge
    std::vector<int> second_slot;
    std::vector<bool> flip;
    std::uint64_t count = 0;

    void emit() {
        std::vector<Match> matches;
        matches.reserve(n * (n - 1));
        for (int a = 1; a <= n; ++a) {
            for (int b = a + 1; b <= n; ++b) {
                int e = edge_index(n, a, b);
                int k1 = first_slot[e], k2 = second_slot[e];
                if (flip[e]) std::swap(k1, k2);
                matches.push_back(Match{k1, a, b});
                matches.push_back(Match{k2, b, a});
            }
        }
        Tournament t(n, std::move(matches));
        ++count;
        visit(t);
    }

    // branch over orientations of the edges completing in this slot
    void orient(int slot, const std::vector<int>& pending, std::size_t at) {
        if (at == pending.size()) {
            fill_slot(slot + 1);
            return;
        }
        int e = pending[at];
        flip[e] = false;
        orient(slot, pending, at + 1);
        flip[e] = true;
        orient(slot, pending, at + 1);
    }

    void fill_slot(int slot) {
        if (slot > slots) {
            emit();
            return;
        }
        for (const PerfectMatching& m : pool) {
            bool usable = true;
            for (auto [a, b] : m.edges) {
                if (used[edge_index(n, a, b)] >= 2) {
                    usable = false;
                    break;
                }
            }
            if (!usable) continue;
            std::vector<int> completing;
            for (auto [a, b] : m.edges) {
                int e = edge_index(n, a, b);
                if (used[e] == 0) {
                    first_slot[e] = slot;
                } else {
                    second_slot[e] = slot;
                    completing.push_back(e);
                }
                ++used[e];
            }
            orient(slot, completing, 0);
            for (auto [a, b] : m.edges) --used[edge_index(n, a, b)];
        }
    }
};

}  // namespace

std::uint64_t enumerate_tournaments(int n, const std::function<void(const Tournament&)>& visit) {
    if (n != 4) throw std::invalid_argument("tournament enumeration is supported for n = 4 only");
    static const std::vector<PerfectMatching> pool = all_perfect_matchings(4);
    Enumerator e{n, 2 * n - 2, pool, visit,
                 std::vector<int>(edge_count(n), 0), std::vector<int>(edge_count(n), 0),
                 std::vector<int>(edge_count(n), 0), std::vector<bool>(edge_count(n), false)};
    e.fill_slot(1);
    return e.count;
}

Tournament random_tournament(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<bool> flip(edge_count(n));
    for (std::size_t e = 0; e < flip.size(); ++e) flip[e] = rng() & 1;
    Tournament t = orient_complementary(canonical_factorization(n), flip);

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    t = relabel_teams(t, perm);

    std::uniform_int_distribution<int> shift(0, 2 * n - 3);
    return cyclic_shift(t, shift(rng));
}

bool is_mirrored(const Tournament& t) {
    const int n = t.team_count();
    for (const Match& m : t.matches()) {
        if (m.slot <= n - 1 && !t.has_match(m.slot + n - 1, m.away, m.home)) return false;
    }
    return true;
}

bool has_repeater(const Tournament& t) {
    for (const Match& m : t.matches()) {
        if (m.slot < t.slot_count() && t.has_match(m.slot + 1, m.away, m.home)) return true;
    }
    return false;
}

int longest_streak(const Tournament& t) {
    int longest = 0;
    for (int team = 1; team <= t.team_count(); ++team) {
        int run_home = 0, run_away = 0;
        for (int k = 1; k <= t.slot_count(); ++k) {
            if (t.plays_home(k, team)) {
                run_home += 1;
                run_away = 0;
            } else {
                run_away += 1;
                run_home = 0;
            }
            longest = std::max({longest, run_home, run_away});
        }
    }
    return longest;
}

}  // namespace ttp

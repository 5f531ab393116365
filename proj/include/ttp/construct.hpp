#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "ttp/schedule.hpp"

namespace ttp {

/// Edge set covering every team exactly once; edges stored as (low, high),
/// sorted lexicographically.
struct PerfectMatching {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    bool covers_all_teams() const;
};

/// One perfect matching per slot; in a usable factorization every edge of
/// the complete graph appears in exactly two slots.
struct Factorization {
    int n = 0;
    std::vector<PerfectMatching> rounds;
};

int edge_count(int n);
/// Lexicographic index of the unordered pair {a, b} among all edges of K_n.
int edge_index(int n, int a, int b);

/// All perfect matchings of K_n in lexicographic edge order.
std::vector<PerfectMatching> all_perfect_matchings(int n);

/// The classic one-factorization: round k < n pairs team n with team k and
/// wraps the rest symmetrically around k modulo n-1 (representatives
/// 1..n-1); rounds n..2n-2 repeat rounds 1..n-1. Each edge lands in rounds
/// k and k+n-1.
Factorization canonical_factorization(int n);

/// Orients every edge's two occurrences oppositely. flip is indexed by
/// edge_index; false puts the lower-numbered team at home in the edge's
/// first slot.
Tournament orient_complementary(const Factorization& f, const std::vector<bool>& flip);

/// Rotates all slots by the given amount (modulo the slot count).
Tournament cyclic_shift(const Tournament& t, int shift);

/// Exchanges home rights of the pair {i, j}: requires (k1,i,j) and (k2,j,i)
/// to be played; the result swaps both orientations. Involution.
Tournament home_away_swap(const Tournament& t, int k1, int k2, int i, int j);

/// Exchanges the opponents of i and i2 between slots k1 and k2: requires
/// (k1,i,j), (k1,i2,j2), (k2,i,j2), (k2,i2,j) with four distinct teams.
/// Involution touching eight play entries.
Tournament partial_slot_swap(const Tournament& t, int k1, int k2, int i, int j, int i2, int j2);

/// Renames teams; perm[old-1] is the new name of team old.
Tournament relabel_teams(const Tournament& t, const std::vector<int>& perm);

/// Visits every tournament on n teams exactly once and returns the count.
/// Slots are filled in order, matchings per slot in lexicographic order and
/// each edge's orientation is branched when its second occurrence is
/// placed, so the visit order is deterministic. Only n = 4 is supported;
/// larger n are refused.
std::uint64_t enumerate_tournaments(int n, const std::function<void(const Tournament&)>& visit);

/// Seeded uniform-ish random tournament: canonical factorization, random
/// team relabeling, random slot rotation, random orientations.
Tournament random_tournament(int n, std::uint64_t seed);

/// Second-half matches repeat the first half with home rights exchanged.
bool is_mirrored(const Tournament& t);
/// Some pair meets in two consecutive slots.
bool has_repeater(const Tournament& t);
/// Longest run of consecutive home or away matches over all teams.
int longest_streak(const Tournament& t);

}  // namespace ttp

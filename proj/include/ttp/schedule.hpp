#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ttp/numeric.hpp"

namespace ttp {

// Teams are 1..n (n even, n >= 4), slots are 1..2n-2. A match (k,i,j) means
// team j plays at team i's venue in slot k.
struct Match {
    int slot;
    int home;
    int away;

    friend bool operator==(const Match&, const Match&) = default;
    friend auto operator<=>(const Match&, const Match&) = default;
};

/// Fixed global index layout for solution vectors, models and matrices:
/// play entries ordered by (slot, home, away), then travel entries ordered
/// by (team, from, to), both lexicographically.
class Layout {
public:
    explicit Layout(int n);

    int teams() const { return n_; }
    int slots() const { return 2 * n_ - 2; }
    int ordered_pairs() const { return n_ * (n_ - 1); }
    int play_vars() const { return slots() * ordered_pairs(); }
    int travel_vars() const { return n_ * ordered_pairs(); }
    int total_vars() const { return play_vars() + travel_vars(); }

    int pair_index(int i, int j) const;
    int play_index(int slot, int home, int away) const;
    int travel_index(int team, int from, int to) const;

    bool is_play(int col) const { return col < play_vars(); }
    /// (slot, home, away) of a play column.
    std::array<int, 3> play_key(int col) const;
    /// (team, from, to) of a travel column.
    std::array<int, 3> travel_key(int col) const;

private:
    int n_;
};

/// A valid double round-robin tournament. Construction checks the two
/// defining conditions for every slot (including slot 1): each team plays
/// exactly once per slot, and each ordered pair (home, away) meets exactly
/// once. Throws std::invalid_argument otherwise. Immutable afterwards.
class Tournament {
public:
    Tournament(int n, std::vector<Match> matches);

    int team_count() const { return n_; }
    int slot_count() const { return 2 * n_ - 2; }
    const std::vector<Match>& matches() const { return matches_; }

    bool has_match(int slot, int home, int away) const;
    int venue_of(int slot, int team) const;
    int opponent_of(int slot, int team) const;
    bool plays_home(int slot, int team) const { return venue_of(slot, team) == team; }

    /// Venues visited by a team: home before slot 1, one venue per slot,
    /// home after the last slot (2n entries).
    std::vector<int> itinerary(int team) const;

    /// Travelled arcs of a team in itinerary order. No arc repeats.
    std::vector<std::pair<int, int>> travel_legs(int team) const;

    std::vector<std::uint8_t> play_vector() const;
    std::vector<std::uint8_t> travel_vector() const;

private:
    int at(int slot, int team) const { return (slot - 1) * n_ + (team - 1); }

    int n_;
    std::vector<Match> matches_;
    std::vector<int> venue_;
    std::vector<int> opponent_;
};

/// Wrapper with the expected name for the checked constructor.
inline Tournament validate_tournament(std::vector<Match> matches, int n) {
    return Tournament(n, std::move(matches));
}

/// Problem data: team count and exact rational distances between venues.
class Instance {
public:
    Instance(int n, std::string name);

    int team_count() const { return n_; }
    const std::string& name() const { return name_; }

    void set_distance(int from, int to, Rational d);
    const Rational& distance(int from, int to) const;
    bool symmetric() const;

private:
    int n_;
    std::string name_;
    std::vector<Rational> d_;
};

/// Total travelled distance of all teams.
Rational total_distance(const Tournament& t, const Instance& inst);

/// Concatenated 0/1 play and travel vectors in the global layout.
std::vector<std::uint8_t> solution_point(const Tournament& t);

}  // namespace ttp

#include "ttp/schedule.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ttp {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

Layout::Layout(int n) : n_(n) {
    require(n >= 4 && n % 2 == 0, "team count must be even and at least 4");
}

int Layout::pair_index(int i, int j) const {
    return (i - 1) * (n_ - 1) + (j < i ? j - 1 : j - 2);
}

int Layout::play_index(int slot, int home, int away) const {
    return (slot - 1) * ordered_pairs() + pair_index(home, away);
}

int Layout::travel_index(int team, int from, int to) const {
    return play_vars() + (team - 1) * ordered_pairs() + pair_index(from, to);
}

std::array<int, 3> Layout::play_key(int col) const {
    int slot = col / ordered_pairs() + 1;
    int p = col % ordered_pairs();
    int i = p / (n_ - 1) + 1;
    int r = p % (n_ - 1);
    int j = r + 1 < i ? r + 1 : r + 2;
    return {slot, i, j};
}

std::array<int, 3> Layout::travel_key(int col) const {
    auto [t, i, j] = play_key(col - play_vars());
    return {t, i, j};
}

Tournament::Tournament(int n, std::vector<Match> matches) : n_(n), matches_(std::move(matches)) {
    require(n >= 4 && n % 2 == 0, "team count must be even and at least 4");
    const int slots = 2 * n - 2;
    for (const Match& m : matches_) {
        std::ostringstream what;
        what << "bad match (" << m.slot << "," << m.home << "," << m.away << ")";
        require(m.slot >= 1 && m.slot <= slots, what.str() + ": slot out of range");
        require(m.home >= 1 && m.home <= n && m.away >= 1 && m.away <= n, what.str() + ": team out of range");
        require(m.home != m.away, what.str() + ": a team cannot host itself");
    }
    std::sort(matches_.begin(), matches_.end());

    // every team exactly once per slot, every ordered pair exactly once
    std::vector<int> per_slot(slots * n, 0);
    std::vector<int> per_pair(n * n, 0);
    for (const Match& m : matches_) {
        ++per_slot[at(m.slot, m.home)];
        ++per_slot[at(m.slot, m.away)];
        ++per_pair[(m.home - 1) * n + (m.away - 1)];
    }
    for (int k = 1; k <= slots; ++k) {
        for (int t = 1; t <= n; ++t) {
            if (per_slot[at(k, t)] != 1) {
                std::ostringstream what;
                what << "team " << t << " plays " << per_slot[at(k, t)] << " matches in slot " << k;
                throw std::invalid_argument(what.str());
            }
        }
    }
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            if (per_pair[(i - 1) * n + (j - 1)] != 1) {
                std::ostringstream what;
                what << "ordered pair (" << i << "," << j << ") occurs " << per_pair[(i - 1) * n + (j - 1)]
                     << " times";
                throw std::invalid_argument(what.str());
            }
        }
    }

    venue_.assign(slots * n, 0);
    opponent_.assign(slots * n, 0);
    for (const Match& m : matches_) {
        venue_[at(m.slot, m.home)] = m.home;
        venue_[at(m.slot, m.away)] = m.home;
        opponent_[at(m.slot, m.home)] = m.away;
        opponent_[at(m.slot, m.away)] = m.home;
    }
}

bool Tournament::has_match(int slot, int home, int away) const {
    return std::binary_search(matches_.begin(), matches_.end(), Match{slot, home, away});
}

int Tournament::venue_of(int slot, int team) const { return venue_[at(slot, team)]; }

int Tournament::opponent_of(int slot, int team) const { return opponent_[at(slot, team)]; }

std::vector<int> Tournament::itinerary(int team) const {
    std::vector<int> venues;
    venues.reserve(slot_count() + 2);
    venues.push_back(team);
    for (int k = 1; k <= slot_count(); ++k) venues.push_back(venue_of(k, team));
    venues.push_back(team);
    return venues;
}

std::vector<std::pair<int, int>> Tournament::travel_legs(int team) const {
    const std::vector<int> venues = itinerary(team);
    std::vector<std::pair<int, int>> legs;
    for (std::size_t p = 0; p + 1 < venues.size(); ++p) {
        if (venues[p] != venues[p + 1]) legs.emplace_back(venues[p], venues[p + 1]);
    }
    // a team can travel any arc at most once
    for (std::size_t a = 0; a < legs.size(); ++a) {
        for (std::size_t b = a + 1; b < legs.size(); ++b) {
            if (legs[a] == legs[b]) throw std::logic_error("repeated travel arc in a valid tournament");
        }
    }
    return legs;
}

std::vector<std::uint8_t> Tournament::play_vector() const {
    Layout layout(n_);
    std::vector<std::uint8_t> x(layout.play_vars(), 0);
    for (const Match& m : matches_) x[layout.play_index(m.slot, m.home, m.away)] = 1;
    return x;
}

std::vector<std::uint8_t> Tournament::travel_vector() const {
    Layout layout(n_);
    std::vector<std::uint8_t> y(layout.travel_vars(), 0);
    for (int t = 1; t <= n_; ++t) {
        for (auto [from, to] : travel_legs(t)) {
            y[layout.travel_index(t, from, to) - layout.play_vars()] = 1;
        }
    }
    return y;
}

Instance::Instance(int n, std::string name) : n_(n), name_(std::move(name)), d_(n * n) {
    if (n < 4 || n % 2 != 0) throw std::invalid_argument("team count must be even and at least 4");
}

void Instance::set_distance(int from, int to, Rational d) {
    if (from == to) throw std::invalid_argument("distance requires two distinct venues");
    if (d < 0) throw std::invalid_argument("distances must be nonnegative");
    d_[(from - 1) * n_ + (to - 1)] = std::move(d);
}

const Rational& Instance::distance(int from, int to) const {
    return d_[(from - 1) * n_ + (to - 1)];
}

bool Instance::symmetric() const {
    for (int i = 1; i <= n_; ++i) {
        for (int j = i + 1; j <= n_; ++j) {
            if (distance(i, j) != distance(j, i)) return false;
        }
    }
    return true;
}

Rational total_distance(const Tournament& t, const Instance& inst) {
    if (inst.team_count() != t.team_count()) throw std::invalid_argument("instance size mismatch");
    Rational sum = 0;
    for (int team = 1; team <= t.team_count(); ++team) {
        for (auto [from, to] : t.travel_legs(team)) sum += inst.distance(from, to);
    }
    return sum;
}

std::vector<std::uint8_t> solution_point(const Tournament& t) {
    std::vector<std::uint8_t> point = t.play_vector();
    std::vector<std::uint8_t> travel = t.travel_vector();
    point.insert(point.end(), travel.begin(), travel.end());
    return point;
}

}  // namespace ttp

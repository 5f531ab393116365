#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "ttp/construct.hpp"
#include "ttp/instances.hpp"
#include "ttp/schedule.hpp"

using namespace ttp;

namespace {

Tournament canonical4() {
    return orient_complementary(canonical_factorization(4), std::vector<bool>(edge_count(4), false));
}

}  // namespace

TEST_CASE("layout indices are a bijection in the fixed order") {
    for (int n : {4, 6}) {
        Layout layout(n);
        CHECK(layout.play_vars() == (2 * n - 2) * n * (n - 1));
        CHECK(layout.travel_vars() == n * n * (n - 1));
        int expect = 0;
        for (int k = 1; k <= layout.slots(); ++k) {
            for (int i = 1; i <= n; ++i) {
                for (int j = 1; j <= n; ++j) {
                    if (i == j) continue;
                    CHECK(layout.play_index(k, i, j) == expect);
                    auto [kk, ii, jj] = layout.play_key(expect);
                    CHECK(kk == k);
                    CHECK(ii == i);
                    CHECK(jj == j);
                    ++expect;
                }
            }
        }
        for (int t = 1; t <= n; ++t) {
            for (int i = 1; i <= n; ++i) {
                for (int j = 1; j <= n; ++j) {
                    if (i == j) continue;
                    CHECK(layout.travel_index(t, i, j) == expect);
                    auto [tt, ii, jj] = layout.travel_key(expect);
                    CHECK(tt == t);
                    CHECK(ii == i);
                    CHECK(jj == j);
                    ++expect;
                }
            }
        }
        CHECK(expect == layout.total_vars());
    }
}

TEST_CASE("a canonical tournament validates") {
    Tournament t = canonical4();
    CHECK(t.team_count() == 4);
    CHECK(t.matches().size() == 12);
}

TEST_CASE("validation reports a missing team-slot assignment") {
    Tournament t = canonical4();
    std::vector<Match> matches = t.matches();
    matches.erase(matches.begin());  // drops one slot-1 match
    CHECK_THROWS_WITH_AS(Tournament(4, matches), doctest::Contains("plays 0 matches in slot"),
                         std::invalid_argument);
}

TEST_CASE("validation reports a pair that never meets") {
    Tournament t = canonical4();
    std::vector<Match> matches = t.matches();
    Match flipped{matches[0].slot, matches[0].away, matches[0].home};
    matches[0] = flipped;  // (k,i,j) replaced by (k,j,i): pair (i,j) now missing
    CHECK_THROWS_WITH_AS(Tournament(4, matches), doctest::Contains("occurs"), std::invalid_argument);
}

TEST_CASE("validation rejects malformed keys") {
    CHECK_THROWS_AS(Tournament(4, {Match{1, 2, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Tournament(4, {Match{9, 1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Tournament(3, {}), std::invalid_argument);
}

TEST_CASE("itinerary starts and ends at home and follows venues") {
    Tournament t = canonical4();
    for (int team = 1; team <= 4; ++team) {
        std::vector<int> ven = t.itinerary(team);
        CHECK(ven.size() == 8);
        CHECK(ven.front() == team);
        CHECK(ven.back() == team);
        for (int k = 1; k <= 6; ++k) {
            if (t.plays_home(k, team)) {
                CHECK(ven[k] == team);
            } else {
                CHECK(ven[k] == t.opponent_of(k, team));
            }
        }
    }
}

TEST_CASE("travel legs match itinerary changes and never repeat") {
    enumerate_tournaments(4, [](const Tournament& t) {
        for (int team = 1; team <= 4; ++team) {
            std::vector<int> ven = t.itinerary(team);
            int changes = 0;
            for (std::size_t p = 0; p + 1 < ven.size(); ++p) changes += ven[p] != ven[p + 1];
            auto legs = t.travel_legs(team);
            REQUIRE(static_cast<int>(legs.size()) == changes);
            std::set<std::pair<int, int>> distinct(legs.begin(), legs.end());
            REQUIRE(distinct.size() == legs.size());
        }
    });
}

TEST_CASE("every team leaves home as often as it returns, at least once") {
    enumerate_tournaments(4, [](const Tournament& t) {
        Layout layout(4);
        std::vector<std::uint8_t> y = t.travel_vector();
        for (int team = 1; team <= 4; ++team) {
            int leaves = 0, returns = 0;
            for (int v = 1; v <= 4; ++v) {
                if (v == team) continue;
                leaves += y[layout.travel_index(team, team, v) - layout.play_vars()];
                returns += y[layout.travel_index(team, v, team) - layout.play_vars()];
            }
            REQUIRE(leaves == returns);
            REQUIRE(leaves >= 1);
        }
    });
}

TEST_CASE("foreign venues are entered and left exactly once by every team") {
    enumerate_tournaments(4, [](const Tournament& t) {
        Layout layout(4);
        std::vector<std::uint8_t> y = t.travel_vector();
        for (int team = 1; team <= 4; ++team) {
            for (int venue = 1; venue <= 4; ++venue) {
                if (venue == team) continue;
                int out = 0, in = 0;
                for (int other = 1; other <= 4; ++other) {
                    if (other == venue) continue;
                    out += y[layout.travel_index(team, venue, other) - layout.play_vars()];
                    in += y[layout.travel_index(team, other, venue) - layout.play_vars()];
                }
                REQUIRE(out == 1);
                REQUIRE(in == 1);
            }
        }
    });
}

TEST_CASE("solution point has the expected support and size") {
    Tournament t = canonical4();
    std::vector<std::uint8_t> p = solution_point(t);
    CHECK(p.size() == 120);
    int play_ones = 0;
    for (int c = 0; c < 72; ++c) play_ones += p[c];
    CHECK(play_ones == 12);  // (2n-2) * n/2 matches
}

TEST_CASE("constant distances make the objective count travel legs") {
    Instance con = gen_con(4);
    Tournament t = canonical4();
    long legs = 0;
    for (int team = 1; team <= 4; ++team) legs += static_cast<long>(t.travel_legs(team).size());
    CHECK(total_distance(t, con) == legs);
}

TEST_CASE("instance distances must be nonnegative and off-diagonal") {
    Instance inst(4, "custom");
    CHECK_THROWS_AS(inst.set_distance(2, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(inst.set_distance(1, 2, -1), std::invalid_argument);
    inst.set_distance(1, 2, Rational(1, 3));
    CHECK(inst.distance(1, 2) == Rational(1, 3));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "ttp/construct.hpp"
#include "ttp/instances.hpp"
#include "ttp/model.hpp"

using namespace ttp;

namespace {

int family_rows(const Model& m, const std::string& family) {
    auto counts = m.family_counts();
    auto it = counts.find(family);
    return it == counts.end() ? 0 : it->second;
}

std::map<int, Rational> term_map(const Row& r) {
    std::map<int, Rational> out;
    for (const auto& [col, coef] : r.terms) out[col] = coef;
    return out;
}

}  // namespace

TEST_CASE("variable counts for the published sizes") {
    CHECK(build_model(gen_con(4), {}).num_vars() == 120);
    CHECK(build_model(gen_con(6), {}).num_vars() == 480);
    CHECK(build_model(gen_con(8), {}).num_vars() == 1232);
}

TEST_CASE("structure equation counts") {
    for (int n : {4, 6, 8}) {
        Model m = build_model(gen_con(n), {});
        CHECK(family_rows(m, "team_once") == (2 * n - 3) * n);
        CHECK(family_rows(m, "pair_once") == n * (n - 1));
        CHECK(family_rows(m, "team_once") + family_rows(m, "pair_once") == 3 * n * n - 4 * n);
        CHECK(family_rows(m, "away_away") == (2 * n - 3) * n * (n - 1) * (n - 2));
        CHECK(family_rows(m, "home_to_away") == (2 * n - 3) * n * (n - 1));
        CHECK(family_rows(m, "away_to_home") == (2 * n - 3) * n * (n - 1));
        CHECK(family_rows(m, "first_travel") == n * (n - 1));
        CHECK(family_rows(m, "last_travel") == n * (n - 1));
    }
}

TEST_CASE("variant row counts") {
    for (int n : {4, 6, 8}) {
        BuildOptions o;
        o.mirrored = true;
        o.no_repeaters = true;
        o.streak_cap = 3;
        Model m = build_model(gen_con(n), o);
        CHECK(family_rows(m, "mirror") == (n - 1) * n * (n - 1));
        CHECK(family_rows(m, "no_repeat") == (2 * n - 3) * n * (n - 1));
        CHECK(family_rows(m, "home_stand") == (2 * n - 2 - 3) * n);
        CHECK(family_rows(m, "road_trip") == (2 * n - 2 - 3) * n);
    }
}

TEST_CASE("strengthening row counts match the published additions") {
    const std::map<int, int> flow_expected = {{4, 24}, {6, 60}, {8, 112}};
    const std::map<int, int> streak_expected = {{4, 8}, {6, 12}, {8, 16}};
    for (int n : {4, 6, 8}) {
        BuildOptions o;
        o.lifted_away_away = true;
        o.lifted_home_away = true;
        o.flow_bounds = true;
        o.home_flow = true;
        o.flow_equations = true;
        o.streak_flow = true;
        o.streak_cap = 3;
        Model m = build_model(gen_con(n), o);
        CHECK(family_rows(m, "lifted_away_away_a") + family_rows(m, "lifted_away_away_b") ==
              2 * (2 * n - 3) * n * (n - 1) * (n - 2));
        CHECK(family_rows(m, "lifted_home_to_away") == (2 * n - 3) * n * (n - 1));
        CHECK(family_rows(m, "lifted_away_to_home") == (2 * n - 3) * n * (n - 1));
        CHECK(family_rows(m, "leave_venue") + family_rows(m, "enter_venue") == flow_expected.at(n));
        CHECK(family_rows(m, "home_flow_out_home") + family_rows(m, "home_flow_out_away") +
                  family_rows(m, "home_flow_in_home") + family_rows(m, "home_flow_in_away") ==
              4 * (n - 1) * n);
        CHECK(family_rows(m, "leave_venue_eq") + family_rows(m, "enter_venue_eq") == 2 * n * (n - 1));
        CHECK(family_rows(m, "min_departures") + family_rows(m, "min_returns") == streak_expected.at(n));
        // replaced families are gone unless kept explicitly
        CHECK(family_rows(m, "away_away") == 0);
        CHECK(family_rows(m, "home_to_away") == 0);
        CHECK(family_rows(m, "away_to_home") == 0);
    }
}

TEST_CASE("streak-flow right-hand side is the ceiling of (n-1)/cap") {
    BuildOptions o;
    o.streak_flow = true;
    o.streak_cap = 3;
    Model m8 = build_model(gen_con(8), o);
    for (const Row& r : m8.rows) {
        if (r.tag.rfind("min_departures", 0) == 0) CHECK(r.rhs == 3);  // ceil(7/3)
    }
    Model m4 = build_model(gen_con(4), o);
    for (const Row& r : m4.rows) {
        if (r.tag.rfind("min_returns", 0) == 0) CHECK(r.rhs == 1);
    }
}

TEST_CASE("option conflicts are rejected") {
    BuildOptions o;
    o.streak_flow = true;
    CHECK_THROWS_AS(build_model(gen_con(4), o), std::invalid_argument);
    Model m = build_model(gen_con(4), {});
    CHECK_THROWS_AS(add_streak_caps(m, 6), std::invalid_argument);  // cap spanning all slots is vacuous
    CHECK_THROWS_AS(add_streak_caps(m, 0), std::invalid_argument);
}

TEST_CASE("relax drops integrality and nothing else") {
    Model m = build_model(gen_con(4), {});
    Model r = relax(m);
    CHECK(m.integral);
    CHECK(!r.integral);
    CHECK(r.num_rows() == m.num_rows());
    CHECK(r.num_vars() == m.num_vars());
    Model rr = relax(r);
    CHECK(!rr.integral);
    CHECK(rr.num_rows() == r.num_rows());
}

TEST_CASE("tags are unique and objective sits on travel columns") {
    BuildOptions o;
    o.mirrored = true;
    o.no_repeaters = true;
    o.streak_cap = 3;
    o.lifted_away_away = true;
    o.lifted_home_away = true;
    o.flow_bounds = true;
    o.flow_bounds_home = true;
    o.home_flow = true;
    o.flow_equations = true;
    o.streak_flow = true;
    o.keep_unlifted = true;
    Model m = build_model(gen_circ(4), o);
    std::set<std::string> tags;
    for (const Row& r : m.rows) tags.insert(r.tag);
    CHECK(tags.size() == m.rows.size());
    Layout layout(4);
    for (int c = 0; c < layout.play_vars(); ++c) CHECK(m.objective[c] == 0);
    Instance circ = gen_circ(4);
    for (int t = 1; t <= 4; ++t) {
        for (int i = 1; i <= 4; ++i) {
            for (int j = 1; j <= 4; ++j) {
                if (i != j) CHECK(m.objective[layout.travel_index(t, i, j)] == circ.distance(i, j));
            }
        }
    }
}

TEST_CASE("every row of every family holds at every enumerated point") {
    BuildOptions o;
    o.no_repeaters = false;
    o.lifted_away_away = true;
    o.lifted_home_away = true;
    o.flow_bounds = true;
    o.flow_bounds_home = true;
    o.home_flow = true;
    o.flow_equations = true;
    o.streak_flow = true;
    o.streak_cap = 3;  // ceil(3/3) = 1 departure, valid for every schedule
    o.keep_unlifted = true;
    Model m = build_model(gen_con(4), o);
    std::vector<IntRow> rows;
    std::vector<std::string> names;
    for (const Row& r : m.rows) {
        if (r.tag.rfind("home_stand", 0) == 0 || r.tag.rfind("road_trip", 0) == 0) continue;
        rows.push_back(to_int_row(r));
        names.push_back(r.tag);
    }
    long violations = 0;
    enumerate_tournaments(4, [&](const Tournament& t) {
        std::vector<std::uint8_t> p = solution_point(t);
        for (std::size_t ri = 0; ri < rows.size(); ++ri) {
            if (!int_row_satisfied(rows[ri], p)) {
                ++violations;
                if (violations == 1) MESSAGE("first violated row: ", names[ri]);
            }
        }
    });
    CHECK(violations == 0);
}

TEST_CASE("flow equations are tight at every enumerated point") {
    Model m{4, Layout(4), "flow", {}, {}, true};
    add_flow_equations(m);
    std::vector<IntRow> rows;
    for (const Row& r : m.rows) rows.push_back(to_int_row(r));
    enumerate_tournaments(4, [&](const Tournament& t) {
        std::vector<std::uint8_t> p = solution_point(t);
        for (const IntRow& r : rows) REQUIRE(eval_int_row(r, p) == r.rhs);
    });
}

TEST_CASE("lifted rows dominate their base rows coefficientwise") {
    BuildOptions o;
    o.lifted_away_away = true;
    o.lifted_home_away = true;
    o.keep_unlifted = true;
    Model m = build_model(gen_con(4), o);
    std::map<std::string, const Row*> by_tag;
    for (const Row& r : m.rows) by_tag[r.tag] = &r;
    auto dominates = [&](const std::string& strong, const std::string& weak) {
        auto s = term_map(*by_tag.at(strong));
        auto w = term_map(*by_tag.at(weak));
        // same right-hand side, strong coefficients >= weak ones everywhere
        CHECK(by_tag.at(strong)->rhs == by_tag.at(weak)->rhs);
        for (const auto& [col, coef] : w) {
            CHECK(s.count(col));
            CHECK(s.at(col) >= coef);
        }
    };
    dominates("lifted_away_away_a[1,1,2,3]", "away_away[1,1,2,3]");
    dominates("lifted_away_away_b[3,2,4,1]", "away_away[3,2,4,1]");
    dominates("lifted_home_to_away[2,1,3]", "home_to_away[2,1,3]");
    dominates("lifted_away_to_home[4,2,3]", "away_to_home[4,2,3]");
}

TEST_CASE("two home-departure rows minus the slot equations give the home flow bound") {
    // home_flow_out_home[k,t] + home_flow_out_away[k,t] - team_once[k,t]
    // - team_once[k+n-1,t] has the travel coefficients of 2 * leave_home[t]
    // and right-hand side 2
    const int n = 4, k = 2, t = 1;
    Model m{n, Layout(n), "probe", {}, {}, true};
    add_home_flow(m);
    Model base = build_model(gen_con(n), {});
    add_home_venue_flow_bounds(base);
    std::map<std::string, const Row*> by_tag;
    for (const Row& r : m.rows) by_tag[r.tag] = &r;
    for (const Row& r : base.rows) by_tag[r.tag] = &r;

    auto key = [&](const char* fam) {
        return std::string(fam) + "[" + std::to_string(k) + "," + std::to_string(t) + "]";
    };
    std::map<int, Rational> sum = term_map(*by_tag.at(key("home_flow_out_home")));
    for (const auto& [col, coef] : term_map(*by_tag.at(key("home_flow_out_away")))) sum[col] += coef;
    for (const auto& [col, coef] :
         term_map(*by_tag.at("team_once[" + std::to_string(k) + "," + std::to_string(t) + "]"))) {
        sum[col] -= coef;
    }
    for (const auto& [col, coef] :
         term_map(*by_tag.at("team_once[" + std::to_string(k + n - 1) + "," + std::to_string(t) + "]"))) {
        sum[col] -= coef;
    }
    std::map<int, Rational> doubled;
    for (const auto& [col, coef] : term_map(*by_tag.at("leave_home[" + std::to_string(t) + "]"))) {
        doubled[col] = 2 * coef;
    }
    std::erase_if(sum, [](const auto& e) { return e.second == 0; });
    CHECK(sum == doubled);
    Rational rhs = by_tag.at(key("home_flow_out_home"))->rhs + by_tag.at(key("home_flow_out_away"))->rhs -
                   Rational(1) - Rational(1);
    CHECK(rhs == 2 * by_tag.at("leave_home[" + std::to_string(t) + "]")->rhs);
}

TEST_CASE("adding any single family never cuts an enumerated point") {
    // base families are checked above; here each optional family alone
    std::vector<BuildOptions> options;
    for (int fam = 0; fam < 5; ++fam) {
        BuildOptions o;
        o.streak_cap = 3;
        if (fam == 0) o.lifted_away_away = true;
        if (fam == 1) o.lifted_home_away = true;
        if (fam == 2) o.flow_bounds = o.flow_bounds_home = true;
        if (fam == 3) o.home_flow = true;
        if (fam == 4) o.streak_flow = true;
        options.push_back(o);
    }
    std::vector<std::vector<IntRow>> row_sets;
    for (const BuildOptions& o : options) {
        Model m = build_model(gen_con(4), o);
        std::vector<IntRow> rows;
        for (const Row& r : m.rows) {
            if (r.tag.rfind("home_stand", 0) == 0 || r.tag.rfind("road_trip", 0) == 0) continue;
            rows.push_back(to_int_row(r));
        }
        row_sets.push_back(std::move(rows));
    }
    enumerate_tournaments(4, [&](const Tournament& t) {
        std::vector<std::uint8_t> p = solution_point(t);
        for (const auto& rows : row_sets) {
            for (const IntRow& r : rows) REQUIRE(int_row_satisfied(r, p));
        }
    });
}

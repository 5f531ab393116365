#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ttp/instances.hpp"
#include "ttp/model.hpp"
#include "ttp/optimum.hpp"
#include "ttp/simplex.hpp"

using namespace ttp;

namespace {

Model single_travel_var_model(Sense sense, const Rational& rhs) {
    Layout layout(4);
    Model m{4, layout, "tiny", {}, {}, false};
    m.objective.assign(layout.total_vars(), Rational(0));
    int col = layout.travel_index(1, 1, 2);
    m.objective[col] = 1;
    Row r;
    r.tag = "bound[1]";
    r.sense = sense;
    r.rhs = rhs;
    r.terms = {{col, Rational(1)}};
    m.rows.push_back(r);
    return m;
}

Model classic_model(const Instance& inst, bool mirrored, bool flow, bool streak_flow, bool full) {
    BuildOptions o;
    o.mirrored = mirrored;
    o.no_repeaters = true;
    o.streak_cap = 3;
    if (flow) o.flow_bounds = o.flow_bounds_home = true;
    if (streak_flow) o.streak_flow = true;
    if (full) {
        o.lifted_away_away = o.lifted_home_away = true;
        o.home_flow = o.flow_equations = o.streak_flow = true;
    }
    return relax(build_model(inst, o));
}

}  // namespace

TEST_CASE("a one-variable lower bound solves to its bound in both modes") {
    Model m = single_travel_var_model(Sense::GreaterEqual, 1);
    LpResult f = solve_simplex(m, SimplexOptions::float_mode());
    REQUIRE(f.status == LpStatus::Optimal);
    CHECK(f.objective == doctest::Approx(1.0));
    LpResult e = solve_simplex(m, SimplexOptions::exact_mode());
    REQUIRE(e.status == LpStatus::Optimal);
    CHECK(e.objective_exact == 1);
}

TEST_CASE("a bound beyond the variable range is infeasible in both modes") {
    Model m = single_travel_var_model(Sense::GreaterEqual, 2);
    CHECK(solve_simplex(m, SimplexOptions::float_mode()).status == LpStatus::Infeasible);
    CHECK(solve_simplex(m, SimplexOptions::exact_mode()).status == LpStatus::Infeasible);
}

TEST_CASE("integral models are rejected until relaxed") {
    Model m = build_model(gen_con(4), {});
    CHECK_THROWS_AS(solve_simplex(m), std::invalid_argument);
}

TEST_CASE("the iteration limit is reported") {
    Model m = classic_model(gen_con(4), false, false, false, false);
    SimplexOptions o;
    o.max_iterations = 1;
    CHECK(solve_simplex(m, o).status == LpStatus::IterationLimit);
}

TEST_CASE("identical solves are deterministic") {
    Model m = classic_model(gen_circ(4), false, true, false, false);
    LpResult a = solve_simplex(m);
    LpResult b = solve_simplex(m);
    CHECK(a.iterations == b.iterations);
    CHECK(a.objective == b.objective);
}

TEST_CASE("optimal results satisfy the rows within tolerance") {
    Model m = classic_model(gen_line(4), true, true, false, false);
    LpResult f = solve_simplex(m);
    REQUIRE(f.status == LpStatus::Optimal);
    CHECK(max_row_residual(m, f) <= 1e-7);
    LpResult e = solve_simplex(m, SimplexOptions::exact_mode());
    REQUIRE(e.status == LpStatus::Optimal);
    CHECK(max_row_residual(m, e) == 0.0);
}

TEST_CASE("exact bounds for the four-team families are the known rationals") {
    CHECK(solve_simplex(classic_model(gen_con(4), false, false, false, false),
                        SimplexOptions::exact_mode())
              .objective_exact == 4);
    CHECK(solve_simplex(classic_model(gen_incr(4), false, false, false, false),
                        SimplexOptions::exact_mode())
              .objective_exact == 8);
    CHECK(solve_simplex(classic_model(gen_incr(4), true, false, false, false),
                        SimplexOptions::exact_mode())
              .objective_exact == 12);
    CHECK(solve_simplex(classic_model(gen_line(4), true, true, false, false),
                        SimplexOptions::exact_mode())
              .objective_exact == Rational(56, 3));
    CHECK(solve_simplex(classic_model(gen_incr(4), false, false, true, false),
                        SimplexOptions::exact_mode())
              .objective_exact == 15);
    CHECK(solve_simplex(classic_model(gen_con(4), false, false, false, true),
                        SimplexOptions::exact_mode())
              .objective_exact == 16);
}

TEST_CASE("float and exact kernels agree on a mixed sample") {
    for (bool mirrored : {false, true}) {
        for (int cfg = 0; cfg < 3; ++cfg) {
            Model m = classic_model(gen_circ(4), mirrored, cfg == 1, cfg == 2, false);
            LpResult f = solve_simplex(m);
            LpResult e = solve_simplex(m, SimplexOptions::exact_mode());
            REQUIRE(f.status == LpStatus::Optimal);
            REQUIRE(e.status == LpStatus::Optimal);
            CHECK(std::abs(f.objective - e.objective) <= 1e-6 * std::max(1.0, std::abs(e.objective)));
        }
    }
}

TEST_CASE("adding row families never decreases the bound") {
    for (const Instance& inst : {gen_con(4), gen_circ(4), gen_line(4), gen_incr(4)}) {
        double base = solve_simplex(classic_model(inst, false, false, false, false)).objective;
        double flow = solve_simplex(classic_model(inst, false, true, false, false)).objective;
        double full = solve_simplex(classic_model(inst, false, true, true, true)).objective;
        CHECK(base <= flow + 1e-7);
        CHECK(flow <= full + 1e-7);
    }
}

TEST_CASE("bounds never exceed the enumeration optimum") {
    for (const Instance& inst : {gen_con(4), gen_circ(4), gen_line(4), gen_incr(4)}) {
        VariantFilter filter{false, true, 3};
        Rational best = enumeration_optimum(inst, filter).best;
        Model m = classic_model(inst, false, true, true, true);
        LpResult f = solve_simplex(m);
        REQUIRE(f.status == LpStatus::Optimal);
        CHECK(f.objective <= best.get_d() + 1e-6);
    }
    // one exact data point on the strongest model
    Model m = classic_model(gen_circ(4), false, false, false, true);
    LpResult e = solve_simplex(m, SimplexOptions::exact_mode());
    REQUIRE(e.status == LpStatus::Optimal);
    CHECK(e.objective_exact <= enumeration_optimum(gen_circ(4), VariantFilter{false, true, 3}).best);
}

TEST_CASE("the six-team base bound is six") {
    Model m = classic_model(gen_con(6), false, false, false, false);
    LpResult f = solve_simplex(m);
    REQUIRE(f.status == LpStatus::Optimal);
    CHECK(f.objective == doctest::Approx(6.0).epsilon(1e-7));
}

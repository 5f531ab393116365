#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ttp/instances.hpp"
#include "ttp/optimum.hpp"

using namespace ttp;

TEST_CASE("four-team optima by exhaustive enumeration") {
    VariantFilter none;
    CHECK(enumeration_optimum(gen_con(4), none).best == 17);
    CHECK(enumeration_optimum(gen_circ(4), none).best == 20);
    CHECK(enumeration_optimum(gen_line(4), none).best == 24);
    CHECK(enumeration_optimum(gen_incr(4), none).best == 48);
}

TEST_CASE("classic restrictions do not change the four-team optima") {
    VariantFilter classic{false, true, 3};
    EnumeratedOptimum con = enumeration_optimum(gen_con(4), classic);
    CHECK(con.best == 17);
    CHECK(con.feasible_count == 1920);
    VariantFilter mirrored{true, true, 3};
    EnumeratedOptimum line = enumeration_optimum(gen_line(4), mirrored);
    CHECK(line.best == 24);
    CHECK(line.feasible_count == 384);
}

TEST_CASE("the reported schedule attains the reported optimum") {
    for (const Instance& inst : {gen_con(4), gen_circ(4), gen_line(4), gen_incr(4)}) {
        EnumeratedOptimum o = enumeration_optimum(inst, VariantFilter{});
        REQUIRE(o.schedule.has_value());
        CHECK(total_distance(*o.schedule, inst) == o.best);
    }
}

TEST_CASE("relabeling the venues leaves the optimum unchanged") {
    Instance circ = gen_circ(4);
    const int perm[5] = {0, 3, 1, 4, 2};  // venue i of the copy is perm[i] of the original
    Instance shuffled(4, "shuffled");
    for (int i = 1; i <= 4; ++i) {
        for (int j = 1; j <= 4; ++j) {
            if (i != j) shuffled.set_distance(i, j, circ.distance(perm[i], perm[j]));
        }
    }
    CHECK(enumeration_optimum(shuffled, VariantFilter{}).best ==
          enumeration_optimum(circ, VariantFilter{}).best);
}

TEST_CASE("larger instances and over-restricted filters are rejected") {
    CHECK_THROWS_AS(enumeration_optimum(gen_con(6), VariantFilter{}), std::invalid_argument);
    VariantFilter impossible{true, true, 1};  // a streak cap of 1 forbids any double round robin half
    CHECK_THROWS_AS(enumeration_optimum(gen_con(4), impossible), std::runtime_error);
}

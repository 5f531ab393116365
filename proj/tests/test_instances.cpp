#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "ttp/instances.hpp"

using namespace ttp;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("ttp_test_" + name) {}
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("constant family") {
    Instance inst = gen_con(6);
    for (int i = 1; i <= 6; ++i) {
        for (int j = 1; j <= 6; ++j) {
            if (i != j) CHECK(inst.distance(i, j) == 1);
        }
    }
    CHECK(inst.name() == "CON6");
}

TEST_CASE("circle family distances and triangle inequality") {
    Instance inst = gen_circ(4);
    CHECK(inst.distance(1, 2) == 1);
    CHECK(inst.distance(1, 3) == 2);
    CHECK(inst.distance(1, 4) == 1);
    CHECK(inst.symmetric());
    for (int n : {4, 6, 8}) {
        Instance big = gen_circ(n);
        for (int a = 1; a <= n; ++a) {
            for (int b = 1; b <= n; ++b) {
                for (int c = 1; c <= n; ++c) {
                    if (a == b || b == c || a == c) continue;
                    CHECK(big.distance(a, c) <= big.distance(a, b) + big.distance(b, c));
                }
            }
        }
    }
}

TEST_CASE("line family") {
    Instance inst = gen_line(4);
    CHECK(inst.distance(1, 4) == 3);
    CHECK(inst.distance(2, 3) == 1);
    CHECK(inst.symmetric());
}

TEST_CASE("increasing-gap family puts venues at 0, 1, 3, 6") {
    Instance inst = gen_incr(4);
    CHECK(inst.distance(1, 2) == 1);
    CHECK(inst.distance(2, 3) == 2);
    CHECK(inst.distance(3, 4) == 3);
    CHECK(inst.distance(1, 4) == 6);
    CHECK(inst.symmetric());
    CHECK(inst.distance(1, 2) < inst.distance(2, 3));
    CHECK(inst.distance(2, 3) < inst.distance(3, 4));
}

TEST_CASE("generators reject odd sizes") {
    CHECK_THROWS_AS(gen_con(5), std::invalid_argument);
    CHECK_THROWS_AS(gen_family("nope", 4), std::invalid_argument);
}

TEST_CASE("instance files round-trip through the exchange subset") {
    for (const char* fam : {"con", "circ", "line", "incr"}) {
        TempFile f(std::string("roundtrip_") + fam + ".xml");
        Instance a = gen_family(fam, 4);
        write_robinx(a, f.path);
        Instance b = parse_robinx(f.path);
        REQUIRE(b.team_count() == a.team_count());
        for (int i = 1; i <= 4; ++i) {
            for (int j = 1; j <= 4; ++j) {
                if (i != j) CHECK(b.distance(i, j) == a.distance(i, j));
            }
        }
    }
}

TEST_CASE("a handwritten 1-based fixture matches the circle generator") {
    TempFile f("fixture_circ4.xml");
    std::ofstream out(f.path);
    out << "<Instance><Resources><Teams>\n";
    for (int i = 1; i <= 4; ++i) out << "<team id=\"" << i << "\"/>\n";
    out << "</Teams></Resources><Data><Distances>\n";
    Instance circ = gen_circ(4);
    for (int i = 1; i <= 4; ++i) {
        for (int j = 1; j <= 4; ++j) {
            if (i == j) continue;
            out << "<distance team1=\"" << i << "\" team2=\"" << j << "\" dist=\""
                << rational_to_text(circ.distance(i, j)) << "\"/>\n";
        }
    }
    out << "</Distances></Data></Instance>\n";
    out.close();
    Instance parsed = parse_robinx(f.path);
    for (int i = 1; i <= 4; ++i) {
        for (int j = 1; j <= 4; ++j) {
            if (i != j) CHECK(parsed.distance(i, j) == circ.distance(i, j));
        }
    }
}

TEST_CASE("a missing distance entry is reported with the pair") {
    TempFile f("missing_pair.xml");
    std::ofstream out(f.path);
    out << "<Instance><Resources><Teams>\n";
    for (int i = 0; i < 4; ++i) out << "<team id=\"" << i << "\"/>\n";
    out << "</Teams></Resources><Data><Distances>\n";
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            if (i == j || (i == 1 && j == 2)) continue;  // drop one entry
            out << "<distance team1=\"" << i << "\" team2=\"" << j << "\" dist=\"1\"/>\n";
        }
    }
    out << "</Distances></Data></Instance>\n";
    out.close();
    CHECK_THROWS_WITH_AS(parse_robinx(f.path), doctest::Contains("missing distance for pair (2,3)"),
                         std::runtime_error);
}

TEST_CASE("malformed xml and empty files are rejected") {
    TempFile f("broken.xml");
    {
        std::ofstream out(f.path);
        out << "<Instance><unclosed></Instance>\n";
    }
    CHECK_THROWS_AS(parse_robinx(f.path), std::runtime_error);
    TempFile g("noteams.xml");
    {
        std::ofstream out(g.path);
        out << "<Instance><Data></Data></Instance>\n";
    }
    CHECK_THROWS_WITH_AS(parse_robinx(g.path), doctest::Contains("no team entries"), std::runtime_error);
}

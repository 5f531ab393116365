#include "ttp/verify.hpp"

#include <json.hpp>

#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ttp/construct.hpp"
#include "ttp/instances.hpp"

namespace ttp {

namespace {

class Timer {
public:
    double millis() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Claim make_claim(const std::string& name, const std::string& expected, const std::string& computed,
                 double millis) {
    return Claim{name, expected, computed, expected == computed, millis};
}

std::vector<int> tag_indices(const std::string& tag) {
    std::vector<int> idx;
    auto lb = tag.find('[');
    if (lb == std::string::npos) return idx;
    int v = 0;
    bool have = false;
    for (std::size_t p = lb + 1; p < tag.size(); ++p) {
        char c = tag[p];
        if (c >= '0' && c <= '9') {
            v = v * 10 + (c - '0');
            have = true;
        } else {
            if (have) idx.push_back(v);
            v = 0;
            have = false;
        }
    }
    return idx;
}

}  // namespace

bool Report::all_pass() const {
    for (const Claim& c : claims) {
        if (!c.pass) return false;
    }
    return true;
}

void Report::append(Report other) {
    for (Claim& c : other.claims) claims.push_back(std::move(c));
}

void print_report(const Report& r, std::ostream& out) {
    for (const Claim& c : r.claims) {
        out << (c.pass ? "PASS " : "FAIL ") << c.name << ": expected " << c.expected << ", computed "
            << c.computed << " (" << static_cast<long>(c.millis) << " ms)\n";
    }
    out << (r.all_pass() ? "all claims pass" : "SOME CLAIMS FAILED") << " (" << r.claims.size()
        << " claims)\n";
}

void write_report_json(const Report& r, const std::string& path) {
    nlohmann::json j;
    j["all_pass"] = r.all_pass();
    j["claims"] = nlohmann::json::array();
    for (const Claim& c : r.claims) {
        j["claims"].push_back({{"claim", c.name},
                               {"expected", c.expected},
                               {"computed", c.computed},
                               {"status", c.pass ? "PASS" : "FAIL"},
                               {"millis", c.millis}});
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << j.dump(2) << "\n";
}

void for_each_polytope_point(int n, const std::function<bool(std::span<const std::uint8_t>)>& visit) {
    Layout layout(n);
    bool stop = false;
    enumerate_tournaments(n, [&](const Tournament& t) {
        if (stop) return;
        std::vector<std::uint8_t> point = solution_point(t);
        if (!visit(point)) {
            stop = true;
            return;
        }
        for (int c = layout.play_vars(); c < layout.total_vars(); ++c) {
            if (point[c]) continue;
            point[c] = 1;
            bool go = visit(point);
            point[c] = 0;
            if (!go) {
                stop = true;
                return;
            }
        }
    });
}

IntMatrix structure_equations(int n) {
    Layout layout(n);
    const int width = layout.total_vars();
    const int rows = (2 * n - 3) * n + n * (n - 1);
    IntMatrix m(rows, width);
    int r = 0;
    for (int k = 2; k <= layout.slots(); ++k) {
        for (int i = 1; i <= n; ++i, ++r) {
            for (int j = 1; j <= n; ++j) {
                if (j == i) continue;
                m.at(r, layout.play_index(k, i, j)) = 1;
                m.at(r, layout.play_index(k, j, i)) = 1;
            }
        }
    }
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            for (int k = 1; k <= layout.slots(); ++k) m.at(r, layout.play_index(k, i, j)) = 1;
            ++r;
        }
    }
    return m;
}

bool basis_columns_invertible(int n, int pivot_slot) {
    Layout layout(n);
    std::vector<int> cols;
    for (int k = 1; k <= layout.slots(); ++k) {
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
                if (i == j) continue;
                if (k == pivot_slot || i == 1 || (i == 2 && j == 3)) {
                    cols.push_back(layout.play_index(k, i, j));
                }
            }
        }
    }
    const long expected = 3L * n * n - 4 * n;
    if (static_cast<long>(cols.size()) != expected) return false;
    IntMatrix eq = structure_equations(n);
    if (static_cast<long>(eq.rows()) != expected) return false;
    IntMatrix sub(eq.rows(), cols.size());
    for (std::size_t r = 0; r < eq.rows(); ++r) {
        for (std::size_t c = 0; c < cols.size(); ++c) sub.at(r, c) = eq.at(r, cols[c]);
    }
    return is_nonsingular(sub);
}

bool slot1_equations_redundant(int n) {
    Layout layout(n);
    IntMatrix eq = structure_equations(n);
    long base_rank = exact_rank(eq);
    std::vector<BigInt> row(layout.total_vars());
    for (int i = 1; i <= n; ++i) {
        for (BigInt& x : row) x = 0;
        for (int j = 1; j <= n; ++j) {
            if (j == i) continue;
            row[layout.play_index(1, i, j)] = 1;
            row[layout.play_index(1, j, i)] = 1;
        }
        eq.append_row(row);
    }
    return exact_rank(eq) == base_rank;
}

PolytopeDimensionResult polytope_dimension(int n) {
    Layout layout(n);
    PolytopeDimensionResult res;
    IntMatrix eq = structure_equations(n);
    res.equation_rank = exact_rank(eq);
    const long upper = layout.total_vars() - res.equation_rank;

    // spot-check the equations on the streamed points while collecting rank
    std::vector<IntRow> eq_rows;
    {
        Model probe = build_model(gen_con(n), BuildOptions{});
        for (const Row& r : probe.rows) {
            if (r.tag.rfind("team_once", 0) == 0 || r.tag.rfind("pair_once", 0) == 0) {
                eq_rows.push_back(to_int_row(r));
            }
        }
    }

    AffineRankTracker tracker(layout.total_vars(), upper);
    for_each_polytope_point(n, [&](std::span<const std::uint8_t> p) {
        for (const IntRow& r : eq_rows) {
            if (!int_row_satisfied(r, p)) throw std::logic_error("structure equation violated by a point");
        }
        tracker.offer(p);
        return !tracker.target_reached();
    });
    res.points_streamed = tracker.points_offered();
    res.dim = tracker.rank();
    if (tracker.exact_rank_certificate() != res.dim) {
        throw std::logic_error("exact rank certificate disagrees with tracked rank");
    }
    return res;
}

FaceDimensionResult face_dimension(int n, const FaceSpec& spec) {
    Layout layout(n);
    FaceDimensionResult res;

    IntMatrix eq = structure_equations(n);
    std::vector<BigInt> row(layout.total_vars());
    for (const Row& r : spec.tight_rows) {
        for (BigInt& x : row) x = 0;
        for (const auto& [col, coef] : r.terms) {
            if (coef.get_den() != 1) throw std::invalid_argument("face rows must have integer coefficients");
            row[col] = coef.get_num();
        }
        eq.append_row(row);
    }
    for (int col : spec.forced_zero_columns) {
        for (BigInt& x : row) x = 0;
        row[col] = 1;
        eq.append_row(row);
    }
    res.upper_bound = layout.total_vars() - exact_rank(std::move(eq));

    std::vector<IntRow> tight;
    tight.reserve(spec.tight_rows.size());
    for (const Row& r : spec.tight_rows) tight.push_back(to_int_row(r));

    AffineRankTracker tracker(layout.total_vars(), res.upper_bound);
    long onface = 0;
    long streamed = 0;
    for_each_polytope_point(n, [&](std::span<const std::uint8_t> p) {
        ++streamed;
        bool on_face = true;
        for (const IntRow& r : tight) {
            long v = eval_int_row(r, p);
            bool ok = r.sense == Sense::LessEqual ? v <= r.rhs
                                                  : (r.sense == Sense::GreaterEqual ? v >= r.rhs : v == r.rhs);
            if (!ok) {
                throw std::logic_error("face inequality " + spec.name + " is violated by a polytope point");
            }
            if (v != r.rhs) on_face = false;
        }
        if (on_face) {
            ++onface;
            for (int col : spec.forced_zero_columns) {
                if (p[col] != 0) {
                    throw std::logic_error("forced-zero column is nonzero on face " + spec.name);
                }
            }
            tracker.offer(p);
            if (tracker.target_reached()) return false;
        }
        return true;
    });
    res.points_streamed = streamed;
    res.onface_points = onface;
    res.dim = tracker.has_anchor() ? tracker.rank() : -1;
    if (tracker.exact_rank_certificate() != tracker.rank()) {
        throw std::logic_error("exact rank certificate disagrees with tracked rank");
    }
    return res;
}

FlowFaceResult verify_flow_equation_face(int n) {
    Layout layout(n);
    Model m{n, layout, "flow-face", {}, {}, true};
    add_flow_equations(m);
    std::vector<IntRow> rows;
    for (const Row& r : m.rows) rows.push_back(to_int_row(r));

    FlowFaceResult res;
    bool ok = true;
    long tournaments = 0;
    enumerate_tournaments(n, [&](const Tournament& t) {
        ++tournaments;
        std::vector<std::uint8_t> point = solution_point(t);
        for (const IntRow& r : rows) {
            // true travel vectors satisfy every flow equation with equality
            if (eval_int_row(r, point) != r.rhs) ok = false;
        }
        ++res.onface_points;
        for (int c = layout.play_vars(); c < layout.total_vars(); ++c) {
            if (point[c]) continue;
            point[c] = 1;
            bool all_tight = true;
            for (const IntRow& r : rows) {
                if (eval_int_row(r, point) != r.rhs) {
                    all_tight = false;
                    break;
                }
            }
            // an augmented travel entry must break some flow equation
            if (all_tight) ok = false;
            point[c] = 0;
        }
    });
    res.expected_points = tournaments;
    res.pass = ok && res.onface_points == res.expected_points;
    return res;
}

namespace {

struct FaceClass {
    std::string family;
    long claimed_dim;
};

Row x_nonneg_row(const Layout& layout, int k, int i, int j) {
    Row r;
    r.tag = "x_nonneg[" + std::to_string(k) + "," + std::to_string(i) + "," + std::to_string(j) + "]";
    r.sense = Sense::GreaterEqual;
    r.rhs = 0;
    r.terms = {{layout.play_index(k, i, j), Rational(1)}};
    return r;
}

std::vector<int> sample_indices(std::size_t count, const VerifyOptions& opt) {
    std::vector<int> idx;
    if (count == 0) return idx;
    if (opt.all_tuples || static_cast<std::size_t>(opt.tuples_per_class) >= count) {
        for (std::size_t p = 0; p < count; ++p) idx.push_back(static_cast<int>(p));
        return idx;
    }
    int k = opt.tuples_per_class;
    for (int s = 0; s < k; ++s) {
        idx.push_back(static_cast<int>(s * (count - 1) / (k - 1 == 0 ? 1 : k - 1)));
    }
    // dedupe while keeping order
    std::vector<int> out;
    for (int v : idx) {
        if (out.empty() || out.back() != v) out.push_back(v);
    }
    return out;
}

}  // namespace

Report verify_dimension(const VerifyOptions&) {
    Report rep;
    const int n = 4;
    Timer t;
    PolytopeDimensionResult d = polytope_dimension(n);
    const long expected = 3L * n * n * n - 8L * n * n + 6L * n;
    rep.claims.push_back(make_claim("dimension[n=4]", std::to_string(expected), std::to_string(d.dim),
                                    t.millis()));
    Timer t2;
    rep.claims.push_back(make_claim("dimension_matches_equation_rank[n=4]",
                                    std::to_string(Layout(n).total_vars() - expected),
                                    std::to_string(d.equation_rank), t2.millis()));
    return rep;
}

Report verify_basis(const VerifyOptions&) {
    Report rep;
    for (int n : {4, 6}) {
        Timer t;
        IntMatrix eq = structure_equations(n);
        long rows = static_cast<long>(eq.rows());
        long rank = exact_rank(std::move(eq));
        const long expected = 3L * n * n - 4 * n;
        rep.claims.push_back(make_claim("equation_rank[n=" + std::to_string(n) + "]",
                                        std::to_string(expected),
                                        std::to_string(rank) + (rows == expected ? "" : " (row count off)"),
                                        t.millis()));
        for (int k = 1; k <= 2 * n - 2; ++k) {
            Timer tk;
            bool ok = basis_columns_invertible(n, k);
            rep.claims.push_back(make_claim(
                "basis_invertible[n=" + std::to_string(n) + ",slot=" + std::to_string(k) + "]", "true",
                ok ? "true" : "false", tk.millis()));
        }
    }
    return rep;
}

Report verify_redundancy(const VerifyOptions&) {
    Report rep;
    for (int n : {4, 6}) {
        Timer t;
        bool ok = slot1_equations_redundant(n);
        rep.claims.push_back(make_claim("slot1_redundant[n=" + std::to_string(n) + "]", "true",
                                        ok ? "true" : "false", t.millis()));
    }
    return rep;
}

Report verify_facets(const VerifyOptions& opt) {
    Report rep;
    const int n = 4;
    Layout layout(n);

    // all strengthening families over a reference instance; unlifted rows kept
    BuildOptions all;
    all.lifted_away_away = true;
    all.lifted_home_away = true;
    all.flow_bounds = true;
    all.home_flow = true;
    all.keep_unlifted = true;
    Model model = build_model(gen_con(n), all);

    const std::vector<FaceClass> classes = {
        {"x_nonneg", 87},          {"away_away", 86},
        {"lifted_away_away_a", 87}, {"lifted_away_away_b", 87},
        {"lifted_home_to_away", 87}, {"lifted_away_to_home", 87},
        {"first_travel", 87},      {"last_travel", 87},
        {"leave_venue", 87},       {"enter_venue", 87},
        {"home_flow_out_home", 87}, {"home_flow_out_away", 87},
        {"home_flow_in_home", 87},  {"home_flow_in_away", 87},
        {"lifted_pair_intersection", 86},
    };

    for (const FaceClass& cls : classes) {
        std::vector<FaceSpec> specs;
        if (cls.family == "x_nonneg") {
            std::vector<Row> rows;
            for (int k = 1; k <= layout.slots(); ++k) {
                for (int i = 1; i <= n; ++i) {
                    for (int j = 1; j <= n; ++j) {
                        if (i != j) rows.push_back(x_nonneg_row(layout, k, i, j));
                    }
                }
            }
            for (int p : sample_indices(rows.size(), opt)) {
                specs.push_back(FaceSpec{rows[p].tag, {rows[p]}, {}, cls.claimed_dim});
            }
        } else if (cls.family == "lifted_pair_intersection") {
            // both lifted relatives of one away-away row tight simultaneously
            std::map<std::string, const Row*> b_rows;
            for (const Row& r : model.rows) {
                if (r.tag.rfind("lifted_away_away_b[", 0) == 0) b_rows[r.tag.substr(r.tag.find('['))] = &r;
            }
            std::vector<std::pair<Row, Row>> pairs;
            for (const Row& r : model.rows) {
                if (r.tag.rfind("lifted_away_away_a[", 0) == 0) {
                    pairs.emplace_back(r, *b_rows.at(r.tag.substr(r.tag.find('['))));
                }
            }
            for (int p : sample_indices(pairs.size(), opt)) {
                std::string name = "lifted_pair_intersection" + pairs[p].first.tag.substr(
                                                                    pairs[p].first.tag.find('['));
                specs.push_back(FaceSpec{name, {pairs[p].first, pairs[p].second}, {}, cls.claimed_dim});
            }
        } else {
            std::vector<Row> rows;
            for (const Row& r : model.rows) {
                if (r.tag.rfind(cls.family + "[", 0) == 0) rows.push_back(r);
            }
            for (int p : sample_indices(rows.size(), opt)) {
                FaceSpec spec{rows[p].tag, {rows[p]}, {}, cls.claimed_dim};
                if (cls.family == "away_away") {
                    // on this face the two extra play entries of the lifted
                    // relatives vanish (their rows are valid, so tightness
                    // here forces them to zero)
                    std::vector<int> kijt = tag_indices(rows[p].tag);
                    int k = kijt[0], i = kijt[1], j = kijt[2], t = kijt[3];
                    spec.forced_zero_columns = {layout.play_index(k, j, t), layout.play_index(k + 1, i, t)};
                }
                specs.push_back(std::move(spec));
            }
        }

        for (FaceSpec& spec : specs) {
            if (!opt.inject_fault.empty() &&
                spec.name.rfind(opt.inject_fault, 0) == 0) {  // corrupt: stays valid, face empties
                for (Row& r : spec.tight_rows) r.rhs += (r.sense == Sense::GreaterEqual ? -1 : 1);
                spec.forced_zero_columns.clear();
            }
            Timer t;
            FaceDimensionResult fd = face_dimension(n, spec);
            std::ostringstream computed;
            computed << fd.dim;
            rep.claims.push_back(make_claim("face_dim[" + spec.name + "]", std::to_string(spec.claimed_dim),
                                            computed.str(), t.millis()));
        }
    }
    return rep;
}

Report verify_face_flow_equations(const VerifyOptions&) {
    Report rep;
    Timer t;
    FlowFaceResult r = verify_flow_equation_face(4);
    rep.claims.push_back(make_claim("flow_equation_face[n=4]", "exact-travel-points-only",
                                    r.pass ? "exact-travel-points-only" : "mismatch", t.millis()));
    Timer t2;
    rep.claims.push_back(make_claim("flow_equation_face_points[n=4]", std::to_string(r.expected_points),
                                    std::to_string(r.onface_points), t2.millis()));
    return rep;
}

Report verify_all(const VerifyOptions& opt) {
    Report rep = verify_dimension(opt);
    rep.append(verify_basis(opt));
    rep.append(verify_redundancy(opt));
    rep.append(verify_facets(opt));
    rep.append(verify_face_flow_equations(opt));
    return rep;
}

}  // namespace ttp

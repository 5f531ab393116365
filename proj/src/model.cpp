#include "ttp/model.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ttp {

namespace {

class RowBuilder {
public:
    RowBuilder(std::string tag, Sense sense, Rational rhs) {
        row_.tag = std::move(tag);
        row_.sense = sense;
        row_.rhs = std::move(rhs);
    }

    RowBuilder& add(int col, Rational coef) {
        row_.terms.emplace_back(col, std::move(coef));
        return *this;
    }

    Row done() {
        std::sort(row_.terms.begin(), row_.terms.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<std::pair<int, Rational>> merged;
        for (auto& [col, coef] : row_.terms) {
            if (!merged.empty() && merged.back().first == col) {
                merged.back().second += coef;
            } else {
                merged.emplace_back(col, std::move(coef));
            }
        }
        std::erase_if(merged, [](const auto& t) { return t.second == 0; });
        row_.terms = std::move(merged);
        return std::move(row_);
    }

private:
    Row row_;
};

std::string tag(const std::string& family, std::initializer_list<int> idx) {
    std::ostringstream s;
    s << family << '[';
    bool first = true;
    for (int v : idx) {
        if (!first) s << ',';
        s << v;
        first = false;
    }
    s << ']';
    return s.str();
}

void base_structure_rows(Model& m) {
    const Layout& L = m.layout;
    const int n = m.n;
    // one match per team per slot; slot 1 is implied by the remaining rows
    for (int k = 2; k <= L.slots(); ++k) {
        for (int i = 1; i <= n; ++i) {
            RowBuilder r(tag("team_once", {k, i}), Sense::Equal, 1);
            for (int j = 1; j <= n; ++j) {
                if (j == i) continue;
                r.add(L.play_index(k, i, j), 1);
                r.add(L.play_index(k, j, i), 1);
            }
            m.rows.push_back(r.done());
        }
    }
    // each ordered pair meets exactly once
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            RowBuilder r(tag("pair_once", {i, j}), Sense::Equal, 1);
            for (int k = 1; k <= L.slots(); ++k) r.add(L.play_index(k, i, j), 1);
            m.rows.push_back(r.done());
        }
    }
}

void away_away_rows(Model& m) {
    const Layout& L = m.layout;
    const int n = m.n;
    for (int k = 1; k <= L.slots() - 1; ++k) {
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
                if (i == j) continue;
                for (int t = 1; t <= n; ++t) {
                    if (t == i || t == j) continue;
                    m.rows.push_back(RowBuilder(tag("away_away", {k, i, j, t}), Sense::LessEqual, 1)
                                         .add(L.play_index(k, i, t), 1)
                                         .add(L.play_index(k + 1, j, t), 1)
                                         .add(L.travel_index(t, i, j), -1)
                                         .done());
                }
            }
        }
    }
}

void home_to_away_rows(Model& m) {
    const Layout& L = m.layout;
    const int n = m.n;
    for (int k = 1; k <= L.slots() - 1; ++k) {
        for (int t = 1; t <= n; ++t) {
            for (int j = 1; j <= n; ++j) {
                if (t == j) continue;
                RowBuilder r(tag("home_to_away", {k, t, j}), Sense::LessEqual, 1);
                for (int i = 1; i <= n; ++i) {
                    if (i != t) r.add(L.play_index(k, t, i), 1);
                }
                r.add(L.play_index(k + 1, j, t), 1);
                r.add(L.travel_index(t, t, j), -1);
                m.rows.push_back(r.done());
            }
        }
    }
}

void away_to_home_rows(Model& m) {
    const Layout& L = m.layout;
    const int n = m.n;
    for (int k = 2; k <= L.slots(); ++k) {
        for (int i = 1; i <= n; ++i) {
            for (int t = 1; t <= n; ++t) {
                if (i == t) continue;
                RowBuilder r(tag("away_to_home", {k, i, t}), Sense::LessEqual, 1);
                r.add(L.play_index(k - 1, i, t), 1);
                for (int j = 1; j <= n; ++j) {
                    if (j != t) r.add(L.play_index(k, t, j), 1);
                }
                r.add(L.travel_index(t, i, t), -1);
                m.rows.push_back(r.done());
            }
        }
    }
}

void boundary_rows(Model& m) {
    const Layout& L = m.layout;
    const int n = m.n;
    for (int t = 1; t <= n; ++t) {
        for (int j = 1; j <= n; ++j) {
            if (t == j) continue;
            m.rows.push_back(RowBuilder(tag("first_travel", {t, j}), Sense::LessEqual, 0)
                                 .add(L.play_index(1, j, t), 1)
                                 .add(L.travel_index(t, t, j), -1)
                                 .done());
        }
    }
    for (int i = 1; i <= n; ++i) {
        for (int t = 1; t <= n; ++t) {
            if (i == t) continue;
            m.rows.push_back(RowBuilder(tag("last_travel", {i, t}), Sense::LessEqual, 0)
                                 .add(L.play_index(L.slots(), i, t), 1)
                                 .add(L.travel_index(t, i, t), -1)
                                 .done());
        }
    }
}

}  // namespace

long Model::num_nonzeros() const {
    long nz = 0;
    for (const Row& r : rows) nz += static_cast<long>(r.terms.size());
    return nz;
}

std::string Model::var_name(int col) const {
    std::ostringstream s;
    if (layout.is_play(col)) {
        auto [k, i, j] = layout.play_key(col);
        s << "x_" << k << '_' << i << '_' << j;
    } else {
        auto [t, i, j] = layout.travel_key(col);
        s << "y_" << t << '_' << i << '_' << j;
    }
    return s.str();
}

std::map<std::string, int> Model::family_counts() const {
    std::map<std::string, int> counts;
    for (const Row& r : rows) {
        std::string family = r.tag.substr(0, r.tag.find('['));
        ++counts[family];
    }
    return counts;
}

Model build_model(const Instance& inst, const BuildOptions& opts) {
    if (opts.streak_flow && !opts.streak_cap) {
        throw std::invalid_argument("streak_flow needs a streak_cap value");
    }
    const int n = inst.team_count();
    Model m{n, Layout(n), inst.name(), {}, {}, true};
    m.objective.assign(m.layout.total_vars(), Rational(0));
    for (int t = 1; t <= n; ++t) {
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
                if (i != j) m.objective[m.layout.travel_index(t, i, j)] = inst.distance(i, j);
            }
        }
    }

    base_structure_rows(m);
    if (!opts.lifted_away_away || opts.keep_unlifted) away_away_rows(m);
    if (!opts.lifted_home_away || opts.keep_unlifted) {
        home_to_away_rows(m);
        away_to_home_rows(m);
    }
    boundary_rows(m);

    if (opts.mirrored) add_mirrored(m);
    if (opts.no_repeaters) add_no_repeaters(m);
    if (opts.streak_cap) add_streak_caps(m, *opts.streak_cap);

    if (opts.lifted_away_away) add_lifted_away_away(m);
    if (opts.lifted_home_away) {
        add_lifted_home_away(m);
        add_lifted_away_home(m);
    }
    if (opts.flow_bounds) {
        add_flow_bounds(m, opts.flow_bounds_home);
    } else if (opts.flow_bounds_home) {
        add_home_venue_flow_bounds(m);
    }
    if (opts.home_flow) add_home_flow(m);
    if (opts.flow_equations) add_flow_equations(m);
    if (opts.streak_flow) add_streak_flow(m, *opts.streak_cap);
    return m;
}

Model relax(Model m) {
    m.integral = false;
    return m;
}

void add_mirrored(Model& m) {
    const Layout& L = m.layout;
    for (int k = 1; k <= m.n - 1; ++k) {
        for (int i = 1; i <= m.n; ++i) {
            for (int j = 1; j <= m.n; ++j) {
                if (i == j) continue;
                m.rows.push_back(RowBuilder(tag("mirror", {k, i, j}), Sense::Equal, 0)
                                     .add(L.play_index(k, i, j), 1)
                                     .add(L.play_index(k + m.n - 1, j, i), -1)
                                     .done());
            }
        }
    }
}

void add_no_repeaters(Model& m) {
    const Layout& L = m.layout;
    for (int k = 1; k <= L.slots() - 1; ++k) {
        for (int i = 1; i <= m.n; ++i) {
            for (int j = 1; j <= m.n; ++j) {
                if (i == j) continue;
                m.rows.push_back(RowBuilder(tag("no_repeat", {k, i, j}), Sense::LessEqual, 1)
                                     .add(L.play_index(k, i, j), 1)
                                     .add(L.play_index(k + 1, j, i), 1)
                                     .done());
            }
        }
    }
}

void add_streak_caps(Model& m, int cap) {
    const Layout& L = m.layout;
    if (cap < 1 || cap >= L.slots()) {
        throw std::invalid_argument("streak cap must lie in 1..2n-3 to be meaningful");
    }
    for (int k = 1; k <= L.slots() - cap; ++k) {
        for (int t = 1; t <= m.n; ++t) {
            RowBuilder home(tag("home_stand", {k, t}), Sense::LessEqual, cap);
            RowBuilder away(tag("road_trip", {k, t}), Sense::LessEqual, cap);
            for (int l = 0; l <= cap; ++l) {
                for (int i = 1; i <= m.n; ++i) {
                    if (i == t) continue;
                    home.add(L.play_index(k + l, t, i), 1);
                    away.add(L.play_index(k + l, i, t), 1);
                }
            }
            m.rows.push_back(home.done());
            m.rows.push_back(away.done());
        }
    }
}

void add_lifted_away_away(Model& m) {
    const Layout& L = m.layout;
    const int n = m.n;
    for (int k = 1; k <= L.slots() - 1; ++k) {
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
                if (i == j) continue;
                for (int t = 1; t <= n; ++t) {
                    if (t == i || t == j) continue;
                    m.rows.push_back(RowBuilder(tag("lifted_away_away_a", {k, i, j, t}), Sense::LessEqual, 1)
                                         .add(L.play_index(k, j, t), 1)
                                         .add(L.play_index(k, i, t), 1)
                                         .add(L.play_index(k + 1, j, t), 1)
                                         .add(L.travel_index(t, i, j), -1)
                                         .done());
                    m.rows.push_back(RowBuilder(tag("lifted_away_away_b", {k, i, j, t}), Sense::LessEqual, 1)
                                         .add(L.play_index(k + 1, i, t), 1)
                                         .add(L.play_index(k, i, t), 1)
                                         .add(L.play_index(k + 1, j, t), 1)
                                         .add(L.travel_index(t, i, j), -1)
                                         .done());
                }
            }
        }
    }
}

void add_lifted_home_away(Model& m) {
    const Layout& L = m.layout;
    const int n = m.n;
    for (int k = 1; k <= L.slots() - 1; ++k) {
        for (int t = 1; t <= n; ++t) {
            for (int j = 1; j <= n; ++j) {
                if (t == j) continue;
                RowBuilder r(tag("lifted_home_to_away", {k, t, j}), Sense::LessEqual, 1);
                r.add(L.play_index(1, j, t), 1);
                r.add(L.play_index(k, j, t), 1);
                for (int i = 1; i <= n; ++i) {
                    if (i != t) r.add(L.play_index(k, t, i), 1);
                }
                r.add(L.play_index(k + 1, j, t), 1);
                r.add(L.travel_index(t, t, j), -1);
                m.rows.push_back(r.done());
            }
        }
    }
}

void add_lifted_away_home(Model& m) {
    const Layout& L = m.layout;
    const int n = m.n;
    for (int k = 2; k <= L.slots(); ++k) {
        for (int i = 1; i <= n; ++i) {
            for (int t = 1; t <= n; ++t) {
                if (i == t) continue;
                RowBuilder r(tag("lifted_away_to_home", {k, i, t}), Sense::LessEqual, 1);
                r.add(L.play_index(L.slots(), i, t), 1);
                r.add(L.play_index(k, i, t), 1);
                for (int j = 1; j <= n; ++j) {
                    if (j != t) r.add(L.play_index(k, t, j), 1);
                }
                r.add(L.play_index(k - 1, i, t), 1);
                r.add(L.travel_index(t, i, t), -1);
                m.rows.push_back(r.done());
            }
        }
    }
}

void add_flow_bounds(Model& m, bool include_home_venue) {
    const Layout& L = m.layout;
    const int n = m.n;
    for (int t = 1; t <= n; ++t) {
        for (int i = 1; i <= n; ++i) {
            if (i == t) continue;
            RowBuilder out(tag("leave_venue", {t, i}), Sense::GreaterEqual, 1);
            RowBuilder in(tag("enter_venue", {t, i}), Sense::GreaterEqual, 1);
            for (int j = 1; j <= n; ++j) {
                if (j == i) continue;
                out.add(L.travel_index(t, i, j), 1);
                in.add(L.travel_index(t, j, i), 1);
            }
            m.rows.push_back(out.done());
            m.rows.push_back(in.done());
        }
    }
    if (include_home_venue) add_home_venue_flow_bounds(m);
}

void add_home_venue_flow_bounds(Model& m) {
    const Layout& L = m.layout;
    const int n = m.n;
    for (int t = 1; t <= n; ++t) {
        RowBuilder out(tag("leave_home", {t}), Sense::GreaterEqual, 1);
        RowBuilder in(tag("enter_home", {t}), Sense::GreaterEqual, 1);
        for (int j = 1; j <= n; ++j) {
            if (j == t) continue;
            out.add(L.travel_index(t, t, j), 1);
            in.add(L.travel_index(t, j, t), 1);
        }
        m.rows.push_back(out.done());
        m.rows.push_back(in.done());
    }
}

void add_home_flow(Model& m) {
    const Layout& L = m.layout;
    const int n = m.n;
    // slot k + n - 1 stays within range for k <= n - 1, no wraparound
    for (int k = 1; k <= n - 1; ++k) {
        for (int t = 1; t <= n; ++t) {
            RowBuilder out_home(tag("home_flow_out_home", {k, t}), Sense::GreaterEqual, 2);
            RowBuilder out_away(tag("home_flow_out_away", {k, t}), Sense::GreaterEqual, 2);
            RowBuilder in_home(tag("home_flow_in_home", {k, t}), Sense::GreaterEqual, 2);
            RowBuilder in_away(tag("home_flow_in_away", {k, t}), Sense::GreaterEqual, 2);
            for (int j = 1; j <= n; ++j) {
                if (j == t) continue;
                out_home.add(L.travel_index(t, t, j), 1);
                out_away.add(L.travel_index(t, t, j), 1);
                in_home.add(L.travel_index(t, j, t), 1);
                in_away.add(L.travel_index(t, j, t), 1);
                out_home.add(L.play_index(k, t, j), 1).add(L.play_index(k + n - 1, t, j), 1);
                out_away.add(L.play_index(k, j, t), 1).add(L.play_index(k + n - 1, j, t), 1);
                in_home.add(L.play_index(k, t, j), 1).add(L.play_index(k + n - 1, t, j), 1);
                in_away.add(L.play_index(k, j, t), 1).add(L.play_index(k + n - 1, j, t), 1);
            }
            m.rows.push_back(out_home.done());
            m.rows.push_back(out_away.done());
            m.rows.push_back(in_home.done());
            m.rows.push_back(in_away.done());
        }
    }
}

void add_flow_equations(Model& m) {
    const Layout& L = m.layout;
    const int n = m.n;
    for (int t = 1; t <= n; ++t) {
        for (int i = 1; i <= n; ++i) {
            if (i == t) continue;
            RowBuilder out(tag("leave_venue_eq", {t, i}), Sense::Equal, 1);
            RowBuilder in(tag("enter_venue_eq", {t, i}), Sense::Equal, 1);
            for (int j = 1; j <= n; ++j) {
                if (j == i) continue;
                out.add(L.travel_index(t, i, j), 1);
                in.add(L.travel_index(t, j, i), 1);
            }
            m.rows.push_back(out.done());
            m.rows.push_back(in.done());
        }
    }
}

void add_streak_flow(Model& m, int cap) {
    const Layout& L = m.layout;
    const int n = m.n;
    if (cap < 1) throw std::invalid_argument("streak cap must be positive");
    const int trips = (n - 2) / cap + 1;  // ceil((n-1)/cap)
    for (int t = 1; t <= n; ++t) {
        RowBuilder out(tag("min_departures", {t}), Sense::GreaterEqual, trips);
        RowBuilder in(tag("min_returns", {t}), Sense::GreaterEqual, trips);
        for (int j = 1; j <= n; ++j) {
            if (j == t) continue;
            out.add(L.travel_index(t, t, j), 1);
            in.add(L.travel_index(t, j, t), 1);
        }
        m.rows.push_back(out.done());
        m.rows.push_back(in.done());
    }
}

IntRow to_int_row(const Row& row) {
    IntRow r;
    r.sense = row.sense;
    if (row.rhs.get_den() != 1) throw std::invalid_argument("non-integer right-hand side");
    r.rhs = static_cast<long>(row.rhs.get_num().get_si());
    r.terms.reserve(row.terms.size());
    for (const auto& [col, coef] : row.terms) {
        if (coef.get_den() != 1) throw std::invalid_argument("non-integer coefficient");
        r.terms.emplace_back(col, static_cast<long>(coef.get_num().get_si()));
    }
    return r;
}

long eval_int_row(const IntRow& row, std::span<const std::uint8_t> point) {
    long v = 0;
    for (auto [col, coef] : row.terms) {
        if (point[col]) v += coef;
    }
    return v;
}

bool int_row_satisfied(const IntRow& row, std::span<const std::uint8_t> point) {
    long v = eval_int_row(row, point);
    switch (row.sense) {
        case Sense::LessEqual:
            return v <= row.rhs;
        case Sense::Equal:
            return v == row.rhs;
        case Sense::GreaterEqual:
            return v >= row.rhs;
    }
    return false;
}

}  // namespace ttp

// Command-line front end: instance generation, model building and export,
// LP relaxation bounds, exact n=4 optima by enumeration, the polyhedral
// verification suite and the size/bound summary tables.

#include <CLI11.hpp>

#include <cctype>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <optional>

#include "ttp/external.hpp"
#include "ttp/instances.hpp"
#include "ttp/lp_io.hpp"
#include "ttp/model.hpp"
#include "ttp/optimum.hpp"
#include "ttp/simplex.hpp"
#include "ttp/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRuntime = 3;

struct ModelFlags {
    bool mirrored = false;
    bool no_repeaters = false;
    int cap = 0;  // 0 = off
    bool lifted = false;
    bool flow = false;
    bool flow_home = false;
    bool home_flow = false;
    bool flow_eq = false;
    bool streak_flow = false;
    bool keep_unlifted = false;
    bool no_classic = false;
};

void add_model_flags(CLI::App* cmd, ModelFlags& f, bool classic_default) {
    cmd->add_flag("--mirrored", f.mirrored, "second half repeats the first with home rights exchanged");
    cmd->add_flag("--no-repeaters", f.no_repeaters, "forbid a pair from meeting in consecutive slots");
    cmd->add_option("--cap", f.cap, "limit consecutive home/away matches (window rows)");
    cmd->add_flag("--lifted", f.lifted, "replace the travel-link rows by their lifted versions");
    cmd->add_flag("--flow", f.flow, "leave/enter each foreign venue at least once");
    cmd->add_flag("--flow-home", f.flow_home, "leave/enter the own venue at least once");
    cmd->add_flag("--home-flow", f.home_flow, "slot-coupled home departure/return rows");
    cmd->add_flag("--flow-eq", f.flow_eq, "foreign-venue flow rows as equations");
    cmd->add_flag("--streak-flow", f.streak_flow, "departures/returns forced by the streak cap");
    cmd->add_flag("--keep-unlifted", f.keep_unlifted, "keep replaced rows next to lifted ones");
    if (classic_default) {
        cmd->add_flag("--no-classic", f.no_classic,
                      "drop the default no-repeater and streak-cap (3) rows");
    }
}

ttp::BuildOptions to_options(ModelFlags f, bool classic_default) {
    if (classic_default && !f.no_classic) {
        f.no_repeaters = true;
        if (f.cap == 0) f.cap = 3;
    }
    if (f.streak_flow && f.cap == 0) f.cap = 3;  // conventional default
    ttp::BuildOptions o;
    o.mirrored = f.mirrored;
    o.no_repeaters = f.no_repeaters;
    if (f.cap > 0) o.streak_cap = f.cap;
    o.lifted_away_away = f.lifted;
    o.lifted_home_away = f.lifted;
    o.flow_bounds = f.flow;
    o.flow_bounds_home = f.flow_home;
    o.home_flow = f.home_flow;
    o.flow_equations = f.flow_eq;
    o.streak_flow = f.streak_flow;
    o.keep_unlifted = f.keep_unlifted;
    return o;
}

ttp::Instance resolve_instance(const std::string& spec) {
    if (spec.find('/') != std::string::npos || spec.find(".xml") != std::string::npos ||
        std::filesystem::exists(spec)) {
        return ttp::parse_robinx(spec);
    }
    std::size_t p = 0;
    while (p < spec.size() && !std::isdigit(static_cast<unsigned char>(spec[p]))) ++p;
    if (p == 0 || p == spec.size()) {
        throw CLI::ValidationError("instance", "expected a family+size token like circ4 or a file path");
    }
    return ttp::gen_family(spec.substr(0, p), std::stoi(spec.substr(p)));
}

ttp::VariantFilter filter_from(const ttp::BuildOptions& o) {
    ttp::VariantFilter f;
    f.mirrored = o.mirrored;
    f.no_repeaters = o.no_repeaters;
    f.streak_cap = o.streak_cap.value_or(0);
    return f;
}

void print_size_report(const ttp::Model& m) {
    std::cout << m.name << ": " << m.num_vars() << " variables, " << m.num_rows() << " constraints, "
              << m.num_nonzeros() << " nonzeros\n";
    for (const auto& [family, count] : m.family_counts()) {
        std::cout << "  +" << count << " " << family << "\n";
    }
}

// the nine model configurations of the bound table, applied on top of the
// classic base (no-repeaters + streak cap 3, mirrored where requested)
std::vector<std::pair<std::string, ttp::BuildOptions>> bound_table_configs(bool mirrored) {
    ttp::BuildOptions base;
    base.mirrored = mirrored;
    base.no_repeaters = true;
    base.streak_cap = 3;
    auto with = [&](auto mod) {
        ttp::BuildOptions o = base;
        mod(o);
        return o;
    };
    return {
        {"base", base},
        {"+lifted", with([](auto& o) { o.lifted_away_away = o.lifted_home_away = true; })},
        {"+flow", with([](auto& o) { o.flow_bounds = o.flow_bounds_home = true; })},
        {"+homeflow/eq", with([](auto& o) { o.home_flow = o.flow_equations = true; })},
        {"+streakflow", with([](auto& o) { o.streak_flow = true; })},
        {"full", with([](auto& o) {
             o.lifted_away_away = o.lifted_home_away = true;
             o.home_flow = o.flow_equations = o.streak_flow = true;
         })},
        {"full-lifted", with([](auto& o) { o.home_flow = o.flow_equations = o.streak_flow = true; })},
        {"full-homeflow/eq", with([](auto& o) {
             o.lifted_away_away = o.lifted_home_away = true;
             o.streak_flow = true;
         })},
        {"full-streakflow", with([](auto& o) {
             o.lifted_away_away = o.lifted_home_away = true;
             o.home_flow = o.flow_equations = true;
         })},
    };
}

// published bound ratios (percent) for the nine configurations
const std::map<std::string, std::vector<double>>& published_ratios(bool mirrored) {
    static const std::map<std::string, std::vector<double>> plain = {
        {"NL4", {24.2, 24.2, 96.9, 96.9, 30.4, 96.9, 96.9, 32.6, 96.9}},
        {"SUP4", {5.2, 5.2, 20.9, 20.9, 10.4, 20.9, 20.9, 10.4, 20.9}},
        {"GAL4", {22.6, 22.6, 90.4, 90.4, 35.0, 90.4, 90.4, 36.7, 90.4}},
        {"INCR4", {16.7, 16.7, 66.7, 66.7, 31.3, 66.7, 66.7, 31.3, 66.7}},
        {"LINE4", {16.7, 16.7, 66.7, 66.7, 33.3, 66.7, 66.7, 33.3, 66.7}},
        {"CIRC4", {20.0, 20.0, 80.0, 80.0, 40.0, 80.0, 80.0, 40.0, 80.0}},
        {"CON4", {23.5, 23.5, 94.1, 94.1, 47.1, 94.1, 94.1, 47.1, 94.1}},
    };
    static const std::map<std::string, std::vector<double>> mirror = {
        {"NL4", {24.3, 24.3, 97.0, 97.0, 30.8, 97.0, 97.0, 34.6, 97.0}},
        {"SUP4", {24.9, 24.9, 41.0, 41.0, 28.3, 41.0, 41.0, 28.3, 41.0}},
        {"GAL4", {24.8, 24.8, 94.1, 94.1, 35.4, 94.1, 94.1, 38.3, 94.1}},
        {"INCR4", {25.0, 25.0, 77.1, 77.1, 35.4, 77.1, 77.1, 37.5, 77.1}},
        {"LINE4", {25.0, 25.0, 77.8, 77.8, 41.7, 77.8, 77.8, 41.7, 77.8}},
        {"CIRC4", {20.0, 20.0, 80.0, 80.0, 40.0, 80.0, 80.0, 40.0, 80.0}},
        {"CON4", {23.5, 23.5, 94.1, 94.1, 47.1, 94.1, 94.1, 47.1, 94.1}},
    };
    return mirrored ? mirror : plain;
}

int cmd_gen(const std::string& family, int n, const std::string& out) {
    ttp::Instance inst = ttp::gen_family(family, n);
    ttp::write_robinx(inst, out);
    std::cout << "wrote " << inst.name() << " to " << out << "\n";
    return kExitOk;
}

int cmd_build(const std::string& spec, const ModelFlags& flags, const std::string& format,
              const std::string& out) {
    ttp::Instance inst = resolve_instance(spec);
    ttp::Model m = ttp::build_model(inst, to_options(flags, false));
    print_size_report(m);
    if (!format.empty()) {
        if (out.empty()) throw CLI::ValidationError("--out", "export needs an output path");
        if (format == "lp") {
            ttp::export_lp(m, out);
        } else {
            ttp::export_mps(m, out);
        }
        std::cout << "exported " << format << " to " << out << "\n";
    }
    return kExitOk;
}

int cmd_lp(const std::string& spec, const ModelFlags& flags, const std::string& mode, double best_arg,
           const std::string& ext_cmd) {
    ttp::Instance inst = resolve_instance(spec);
    ttp::BuildOptions opts = to_options(flags, true);
    ttp::Model m = ttp::relax(ttp::build_model(inst, opts));

    double objective = 0;
    std::string objective_text;
    if (mode == "external") {
        ttp::ExternalLpResult r = ttp::solve_external(m, ext_cmd, std::filesystem::temp_directory_path());
        if (r.skipped) {
            std::cout << "no external solver configured (set TTP_EXT_SOLVER or --ext-cmd); skipping\n";
            return kExitOk;
        }
        if (r.status != ttp::LpStatus::Optimal) {
            std::cout << "external solver status: " << ttp::to_string(r.status) << "\n";
            return kExitRuntime;
        }
        objective = r.objective;
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.6f", objective);
        objective_text = buf;
    } else {
        ttp::SimplexOptions sopt =
            mode == "exact" ? ttp::SimplexOptions::exact_mode() : ttp::SimplexOptions::float_mode();
        ttp::LpResult r = ttp::solve_simplex(m, sopt);
        if (r.status != ttp::LpStatus::Optimal) {
            std::cout << "solver status: " << ttp::to_string(r.status) << " after " << r.iterations
                      << " iterations\n";
            return kExitRuntime;
        }
        objective = r.objective;
        objective_text =
            r.exact ? ttp::rational_to_text(r.objective_exact) : std::to_string(r.objective);
        std::cout << "iterations: " << r.iterations << "\n";
    }
    std::cout << "lp bound: " << objective_text << "\n";

    std::optional<double> best;
    if (best_arg > 0) {
        best = best_arg;
    } else if (inst.team_count() == 4) {
        ttp::EnumeratedOptimum o = ttp::enumeration_optimum(inst, filter_from(opts));
        best = o.best.get_d();
        std::cout << "best (enumeration): " << ttp::rational_to_text(o.best) << "\n";
    }
    if (best) {
        std::cout << "ratio: " << ttp::percent_to_text(100.0 * objective / *best) << "%\n";
    } else {
        std::cout << "ratio: unavailable (pass --best for n > 4)\n";
    }
    return kExitOk;
}

int cmd_ip4(const std::string& spec, const ModelFlags& flags) {
    ttp::Instance inst = resolve_instance(spec);
    if (inst.team_count() != 4) {
        std::cerr << "exhaustive optimum needs an n = 4 instance\n";
        return kExitUsage;
    }
    ttp::EnumeratedOptimum o = ttp::enumeration_optimum(inst, filter_from(to_options(flags, false)));
    const ttp::Tournament& t = *o.schedule;
    std::cout << "optimum " << ttp::rational_to_text(o.best) << " over " << o.feasible_count
              << " feasible schedules\n";
    for (int k = 1; k <= t.slot_count(); ++k) {
        std::cout << "slot " << k << ":";
        for (const ttp::Match& mt : t.matches()) {
            if (mt.slot == k) std::cout << "  " << mt.home << " vs " << mt.away;
        }
        std::cout << "\n";
    }
    for (int team = 1; team <= 4; ++team) {
        std::cout << "team " << team << ":";
        for (int v : t.itinerary(team)) std::cout << " " << v;
        std::cout << "\n";
    }
    std::cout << "check: schedule distance " << ttp::rational_to_text(ttp::total_distance(t, inst)) << "\n";
    return kExitOk;
}

int cmd_verify(const std::string& suite, const ttp::VerifyOptions& vopt, const std::string& json_path) {
    ttp::Report rep;
    if (suite == "dimension") {
        rep = ttp::verify_dimension(vopt);
    } else if (suite == "basis") {
        rep = ttp::verify_basis(vopt);
    } else if (suite == "redundancy") {
        rep = ttp::verify_redundancy(vopt);
    } else if (suite == "facets") {
        rep = ttp::verify_facets(vopt);
    } else if (suite == "face15") {
        rep = ttp::verify_face_flow_equations(vopt);
    } else {
        rep = ttp::verify_all(vopt);
    }
    ttp::print_report(rep, std::cout);
    if (!json_path.empty()) {
        ttp::write_report_json(rep, json_path);
        std::cout << "report written to " << json_path << "\n";
    }
    return rep.all_pass() ? kExitOk : kExitVerifyFailed;
}

int cmd_table2(int max_n) {
    const std::map<int, long> published_vars = {{4, 120}, {6, 480}, {8, 1232}};
    const std::map<int, long> published_flow = {{4, 24}, {6, 60}, {8, 112}};
    const std::map<int, long> published_streakflow = {{4, 8}, {6, 12}, {8, 16}};
    bool all_ok = true;
    std::cout << "n | variables | flow rows | streak-flow rows\n";
    for (int n = 4; n <= max_n; n += 2) {
        ttp::Instance inst = ttp::gen_con(n);
        ttp::Model base = ttp::build_model(inst, ttp::BuildOptions{});
        ttp::Model flow = base;
        ttp::add_flow_bounds(flow, false);
        ttp::Model sf = base;
        ttp::add_streak_flow(sf, 3);
        long vars = base.num_vars();
        long flow_rows = flow.num_rows() - base.num_rows();
        long sf_rows = sf.num_rows() - base.num_rows();
        auto check = [&](long got, const std::map<int, long>& pub) -> std::string {
            auto it = pub.find(n);
            if (it == pub.end()) return std::to_string(got);
            bool ok = got == it->second;
            all_ok = all_ok && ok;
            return std::to_string(got) + (ok ? " PASS" : " FAIL(expected " + std::to_string(it->second) + ")");
        };
        std::cout << n << " | " << check(vars, published_vars) << " | +" << check(flow_rows, published_flow)
                  << " | +" << check(sf_rows, published_streakflow) << "\n";
    }
    return all_ok ? kExitOk : kExitVerifyFailed;
}

int cmd_table3(const std::vector<std::string>& families, const std::string& data_dir, bool exact) {
    bool all_ok = true;
    std::vector<ttp::Instance> instances;
    for (const std::string& fam : families) instances.push_back(ttp::gen_family(fam, 4));
    if (!data_dir.empty()) {
        for (const char* name : {"NL4", "SUP4", "GAL4"}) {
            std::string path = data_dir + "/" + name + ".xml";
            if (std::filesystem::exists(path)) instances.push_back(ttp::parse_robinx(path));
        }
    }
    for (bool mirrored : {false, true}) {
        const auto& published = published_ratios(mirrored);
        for (const ttp::Instance& inst : instances) {
            ttp::VariantFilter filter{mirrored, true, 3};
            ttp::EnumeratedOptimum best = ttp::enumeration_optimum(inst, filter);
            std::string label = inst.name() + (mirrored ? " mirrored" : "");
            std::cout << label << " (best " << ttp::rational_to_text(best.best) << "):";
            std::string upper = inst.name();
            for (char& c : upper) c = std::toupper(static_cast<unsigned char>(c));
            auto pub = published.find(upper);
            int col = 0;
            for (const auto& [cfg_name, opts] : bound_table_configs(mirrored)) {
                ttp::Model m = ttp::relax(ttp::build_model(inst, opts));
                ttp::SimplexOptions sopt =
                    exact ? ttp::SimplexOptions::exact_mode() : ttp::SimplexOptions::float_mode();
                ttp::LpResult r = ttp::solve_simplex(m, sopt);
                if (r.status != ttp::LpStatus::Optimal) {
                    std::cout << " " << cfg_name << "=<" << ttp::to_string(r.status) << ">";
                    all_ok = false;
                    ++col;
                    continue;
                }
                double pct = 100.0 * r.objective / best.best.get_d();
                std::string cell = ttp::percent_to_text(pct);
                if (pub != published.end()) {
                    bool ok = std::abs(pct - pub->second[col]) <= 0.05 + 1e-6;
                    all_ok = all_ok && ok;
                    cell += ok ? "" : "(FAIL exp " + ttp::percent_to_text(pub->second[col]) + ")";
                }
                std::cout << " " << cell;
                ++col;
            }
            std::cout << "\n";
        }
    }
    std::cout << (all_ok ? "all compared cells match" : "SOME CELLS MISMATCH") << "\n";
    return all_ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Traveling tournament polytope toolkit"};
    app.require_subcommand(1);
    std::function<int()> action;

    // gen
    auto* gen = app.add_subcommand("gen", "write a synthetic instance file");
    static std::string gen_family_arg, gen_out = "instance.xml";
    static int gen_n = 4;
    gen->add_option("family", gen_family_arg, "con, circ, line or incr")->required();
    gen->add_option("n", gen_n, "team count (even, >= 4)")->required();
    gen->add_option("-o,--out", gen_out, "output path");
    gen->callback([&] { action = [] { return cmd_gen(gen_family_arg, gen_n, gen_out); }; });

    // build
    auto* build = app.add_subcommand("build", "build a model and report its size");
    static std::string build_spec, build_format, build_out;
    static ModelFlags build_flags;
    build->add_option("instance", build_spec, "family+size token or RobinX file")->required();
    add_model_flags(build, build_flags, false);
    build->add_option("--export", build_format, "lp or mps")
        ->check(CLI::IsMember({"lp", "mps"}));
    build->add_option("-o,--out", build_out, "export path");
    build->callback([&] { action = [] { return cmd_build(build_spec, build_flags, build_format, build_out); }; });

    // lp
    auto* lp = app.add_subcommand("lp", "solve the LP relaxation and report the bound ratio");
    static std::string lp_spec, lp_mode = "float", lp_ext;
    static double lp_best = 0;
    static ModelFlags lp_flags;
    lp->add_option("instance", lp_spec, "family+size token or RobinX file")->required();
    add_model_flags(lp, lp_flags, true);
    lp->add_option("--mode", lp_mode, "float, exact or external")
        ->check(CLI::IsMember({"float", "exact", "external"}));
    lp->add_option("--best", lp_best, "best known value for the ratio (auto-enumerated at n = 4)");
    lp->add_option("--ext-cmd", lp_ext, "external command with {input} and {output} placeholders");
    lp->callback([&] { action = [] { return cmd_lp(lp_spec, lp_flags, lp_mode, lp_best, lp_ext); }; });

    // ip4
    auto* ip4 = app.add_subcommand("ip4", "exact n = 4 optimum by exhaustive enumeration");
    static std::string ip4_spec;
    static ModelFlags ip4_flags;
    ip4->add_option("instance", ip4_spec, "family+size token or RobinX file")->required();
    add_model_flags(ip4, ip4_flags, false);
    ip4->callback([&] { action = [] { return cmd_ip4(ip4_spec, ip4_flags); }; });

    // verify
    auto* verify = app.add_subcommand("verify", "run the polyhedral verification suite");
    static std::string verify_suite = "all", verify_json, verify_fault;
    static bool verify_all_tuples = false;
    static int verify_tuples = 3;
    verify->add_option("--suite", verify_suite, "dimension, basis, redundancy, facets, face15 or all")
        ->check(CLI::IsMember({"dimension", "basis", "redundancy", "facets", "face15", "all"}));
    verify->add_option("--json", verify_json, "write the machine-readable report here");
    verify->add_flag("--all-tuples", verify_all_tuples, "verify every index tuple of every class");
    verify->add_option("--tuples-per-class", verify_tuples, "sampled tuples per inequality class");
    verify->add_option("--inject-fault", verify_fault,
                       "corrupt the named face (testing hook; forces a FAIL)");
    verify->callback([&] {
        action = [] {
            ttp::VerifyOptions vopt;
            vopt.all_tuples = verify_all_tuples;
            vopt.tuples_per_class = verify_tuples;
            vopt.inject_fault = verify_fault;
            return cmd_verify(verify_suite, vopt, verify_json);
        };
    });

    // table2
    auto* table2 = app.add_subcommand("table2", "model size summary against the published counts");
    static int table2_max_n = 8;
    table2->add_option("--max-n", table2_max_n, "largest team count (even)");
    table2->callback([&] { action = [] { return cmd_table2(table2_max_n); }; });

    // table3
    auto* table3 = app.add_subcommand("table3", "LP bound ratios against the published table (n = 4)");
    static std::vector<std::string> table3_families = {"con", "circ", "line", "incr"};
    static std::string table3_data_dir;
    static bool table3_exact = false;
    table3->add_option("--families", table3_families, "synthetic families to include")->delimiter(',');
    table3->add_option("--data-dir", table3_data_dir, "directory with NL4.xml / SUP4.xml / GAL4.xml");
    table3->add_flag("--exact", table3_exact, "use the exact simplex kernel");
    table3->callback([&] { action = [] { return cmd_table3(table3_families, table3_data_dir, table3_exact); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }
    try {
        return action();
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
}

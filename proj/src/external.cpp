#include "ttp/external.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ttp/lp_io.hpp"

namespace ttp {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

void replace_all(std::string& s, const std::string& from, const std::string& to) {
    std::size_t p = 0;
    while ((p = s.find(from, p)) != std::string::npos) {
        s.replace(p, from.size(), to);
        p += to.size();
    }
}

}  // namespace

std::string external_solver_command(const std::string& explicit_template) {
    if (!explicit_template.empty()) return explicit_template;
    const char* env = std::getenv("TTP_EXT_SOLVER");
    return env ? env : "";
}

std::optional<std::pair<LpStatus, double>> parse_solver_output(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::optional<double> objective;
    std::optional<LpStatus> status;
    while (std::getline(in, line)) {
        std::string low = lower(line);
        if (low.find("infeasible") != std::string::npos) status = LpStatus::Infeasible;
        if (low.find("unbounded") != std::string::npos) status = LpStatus::Unbounded;
        if (!objective && low.find("objective") != std::string::npos) {
            // take the last numeric token on the line
            std::istringstream ls(line);
            std::string tok;
            std::optional<double> last;
            while (ls >> tok) {
                while (!tok.empty() && (tok.back() == ',' || tok.back() == ')')) tok.pop_back();
                try {
                    std::size_t used = 0;
                    double v = std::stod(tok, &used);
                    if (used == tok.size()) last = v;
                } catch (...) {
                }
            }
            if (last) objective = *last;
        }
    }
    if (status && *status != LpStatus::Optimal) return std::make_pair(*status, 0.0);
    if (objective) return std::make_pair(LpStatus::Optimal, *objective);
    return std::nullopt;
}

ExternalLpResult solve_external(const Model& model, const std::string& command_template,
                                const std::string& work_dir) {
    std::string cmd = external_solver_command(command_template);
    if (cmd.empty()) return ExternalLpResult{true, LpStatus::Optimal, 0.0};
    if (cmd.find("{input}") == std::string::npos || cmd.find("{output}") == std::string::npos) {
        throw std::runtime_error("external solver template needs {input} and {output} placeholders");
    }

    std::string input = work_dir + "/external_model.lp";
    std::string output = work_dir + "/external_model.sol";
    export_lp(model, input);
    std::remove(output.c_str());

    replace_all(cmd, "{input}", input);
    replace_all(cmd, "{output}", output);
    int rc = std::system(cmd.c_str());
    if (rc != 0) throw std::runtime_error("external solver exited with status " + std::to_string(rc));

    std::ifstream in(output);
    if (!in) throw std::runtime_error("external solver produced no output file " + output);
    std::ostringstream text;
    text << in.rdbuf();
    auto parsed = parse_solver_output(text.str());
    if (!parsed) throw std::runtime_error("could not find a status or objective in " + output);
    return ExternalLpResult{false, parsed->first, parsed->second};
}

}  // namespace ttp

#include "ttp/lp_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ttp {

namespace {

void write_terms(std::ostream& out, const std::vector<std::pair<int, Rational>>& terms, const Model& m) {
    bool first = true;
    for (const auto& [col, coef] : terms) {
        Rational a = abs(coef);
        out << (coef < 0 ? " - " : (first ? " " : " + "));
        if (a != 1) out << rational_to_text(a) << ' ';
        out << m.var_name(col);
        first = false;
    }
}

const char* sense_text(Sense s) {
    switch (s) {
        case Sense::LessEqual:
            return "<=";
        case Sense::Equal:
            return "=";
        case Sense::GreaterEqual:
            return ">=";
    }
    return "?";
}

}  // namespace

void export_lp(const Model& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << "\\ " << (m.name.empty() ? "model" : m.name) << "\n";
    out << "Minimize\n obj:";
    {
        std::vector<std::pair<int, Rational>> terms;
        for (int c = 0; c < m.num_vars(); ++c) {
            if (m.objective[c] != 0) terms.emplace_back(c, m.objective[c]);
        }
        if (terms.empty()) {
            out << " 0 " << m.var_name(0);  // readers reject empty objectives
        } else {
            write_terms(out, terms, m);
        }
    }
    out << "\nSubject To\n";
    for (const Row& r : m.rows) {
        out << ' ' << r.tag << ':';
        write_terms(out, r.terms, m);
        out << ' ' << sense_text(r.sense) << ' ' << rational_to_text(r.rhs) << "\n";
    }
    out << "Bounds\n";
    for (int c = 0; c < m.num_vars(); ++c) out << " 0 <= " << m.var_name(c) << " <= 1\n";
    if (m.integral) {
        out << "Binaries\n";
        for (int c = 0; c < m.num_vars(); ++c) out << ' ' << m.var_name(c) << "\n";
    }
    out << "End\n";
    if (!out) throw std::runtime_error("failed writing " + path);
}

void export_mps(const Model& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    auto pad = [](const std::string& s, std::size_t w) {
        return s.size() >= w ? s + ' ' : s + std::string(w - s.size(), ' ');
    };
    out << "NAME          " << (m.name.empty() ? "model" : m.name) << "\n";
    out << "ROWS\n";
    out << " N  obj\n";
    for (const Row& r : m.rows) {
        char c = r.sense == Sense::LessEqual ? 'L' : (r.sense == Sense::Equal ? 'E' : 'G');
        out << ' ' << c << "  " << r.tag << "\n";
    }

    // column-major entries: collect per variable
    std::vector<std::vector<std::pair<std::string, Rational>>> col_entries(m.num_vars());
    for (int c = 0; c < m.num_vars(); ++c) {
        if (m.objective[c] != 0) col_entries[c].emplace_back("obj", m.objective[c]);
    }
    for (const Row& r : m.rows) {
        for (const auto& [col, coef] : r.terms) col_entries[col].emplace_back(r.tag, coef);
    }
    out << "COLUMNS\n";
    if (m.integral) {
        out << "    " << pad("M1", 10) << pad("'MARKER'", 25) << "'INTORG'\n";
    }
    for (int c = 0; c < m.num_vars(); ++c) {
        for (const auto& [row, coef] : col_entries[c]) {
            out << "    " << pad(m.var_name(c), 10) << pad(row, 25) << rational_to_text(coef) << "\n";
        }
    }
    if (m.integral) {
        out << "    " << pad("M2", 10) << pad("'MARKER'", 25) << "'INTEND'\n";
    }
    out << "RHS\n";
    for (const Row& r : m.rows) {
        if (r.rhs != 0) {
            out << "    " << pad("RHS", 10) << pad(r.tag, 25) << rational_to_text(r.rhs) << "\n";
        }
    }
    out << "BOUNDS\n";
    for (int c = 0; c < m.num_vars(); ++c) {
        out << " UP " << pad("BND", 10) << pad(m.var_name(c), 25) << "1\n";
    }
    out << "ENDATA\n";
    if (!out) throw std::runtime_error("failed writing " + path);
}

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

bool is_number_start(const std::string& tok) {
    return !tok.empty() && (std::isdigit(static_cast<unsigned char>(tok[0])) || tok[0] == '.' ||
                            ((tok[0] == '+' || tok[0] == '-') && tok.size() > 1 &&
                             (std::isdigit(static_cast<unsigned char>(tok[1])) || tok[1] == '.')));
}

// parses "[+-] [coef] name" sequences
std::vector<std::pair<std::string, double>> parse_terms(const std::vector<std::string>& toks, std::size_t from,
                                                        std::size_t to) {
    std::vector<std::pair<std::string, double>> terms;
    double sign = 1.0;
    double coef = 1.0;
    bool have_coef = false;
    for (std::size_t p = from; p < to; ++p) {
        const std::string& t = toks[p];
        if (t == "+") {
            if (!have_coef) sign = 1.0;
            continue;
        }
        if (t == "-") {
            sign = have_coef ? -sign : -1.0;
            continue;
        }
        if (is_number_start(t)) {
            coef = std::stod(t);
            have_coef = true;
            continue;
        }
        terms.emplace_back(t, sign * (have_coef ? coef : 1.0));
        sign = 1.0;
        coef = 1.0;
        have_coef = false;
    }
    return terms;
}

}  // namespace

LpFileData parse_lp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<std::string> toks;
    std::string line;
    while (std::getline(in, line)) {
        if (auto pos = line.find('\\'); pos != std::string::npos) line.erase(pos);
        // split relational operators and colons into their own tokens
        std::string spaced;
        for (std::size_t p = 0; p < line.size(); ++p) {
            char c = line[p];
            if (c == ':' || c == '<' || c == '>' || c == '=') {
                spaced += ' ';
                spaced += c;
                if ((c == '<' || c == '>') && p + 1 < line.size() && line[p + 1] == '=') {
                    spaced += '=';
                    ++p;
                }
                spaced += ' ';
            } else {
                spaced += c;
            }
        }
        std::istringstream is(spaced);
        std::string t;
        while (is >> t) toks.push_back(t);
    }

    LpFileData data;
    enum Section { None, Objective, Rows, BoundsSec, BinariesSec, Done };
    std::size_t p = 0;
    auto peek_keyword = [&](std::size_t at) -> Section {
        if (at >= toks.size()) return Done;
        std::string k = lower(toks[at]);
        if (k == "minimize" || k == "maximize" || k == "min" || k == "max") return Objective;
        if (k == "subject") return Rows;
        if (k == "st" || k == "s.t.") return Rows;
        if (k == "bounds") return BoundsSec;
        if (k == "binaries" || k == "binary" || k == "bin" || k == "general" || k == "generals") return BinariesSec;
        if (k == "end") return Done;
        return None;
    };

    while (p < toks.size()) {
        Section k = peek_keyword(p);
        if (k == Objective) {
            data.minimize = lower(toks[p])[1] != 'a';
            ++p;
            // objective: [name :] terms, up to the next section keyword
            std::size_t q = p;
            while (q < toks.size() && peek_keyword(q) == None) ++q;
            std::size_t from = p;
            if (from + 1 < q && toks[from + 1] == ":") from += 2;
            data.objective = parse_terms(toks, from, q);
            p = q;
        } else if (k == Rows) {
            p += lower(toks[p]) == "subject" ? 2 : 1;  // "subject to" or "st"
            while (p < toks.size() && peek_keyword(p) == None) {
                // row: name : terms sense rhs
                std::string name = toks[p];
                if (p + 1 >= toks.size() || toks[p + 1] != ":") {
                    throw std::runtime_error("LP parse: expected 'name:' at token " + name);
                }
                p += 2;
                std::size_t q = p;
                while (q < toks.size() && toks[q] != "<=" && toks[q] != ">=" && toks[q] != "=") ++q;
                if (q >= toks.size() || q + 1 >= toks.size()) {
                    throw std::runtime_error("LP parse: row " + name + " lacks sense/rhs");
                }
                LpFileRow row;
                row.name = name;
                row.terms = parse_terms(toks, p, q);
                row.sense = toks[q] == "<=" ? Sense::LessEqual
                                            : (toks[q] == ">=" ? Sense::GreaterEqual : Sense::Equal);
                row.rhs = std::stod(toks[q + 1]);
                for (const auto& [v, c] : row.terms) data.variables.insert(v);
                data.rows.push_back(std::move(row));
                p = q + 2;
            }
        } else if (k == BoundsSec) {
            ++p;
            // lines of the form: lo <= var <= hi
            while (p < toks.size() && peek_keyword(p) == None) {
                if (p + 4 < toks.size() && toks[p + 1] == "<=" && toks[p + 3] == "<=") {
                    double lo = std::stod(toks[p]);
                    double hi = std::stod(toks[p + 4]);
                    data.bounds[toks[p + 2]] = {lo, hi};
                    data.variables.insert(toks[p + 2]);
                    p += 5;
                } else {
                    ++p;  // tolerate other bound forms
                }
            }
        } else if (k == BinariesSec) {
            ++p;
            while (p < toks.size() && peek_keyword(p) == None) {
                data.binaries.insert(toks[p]);
                data.variables.insert(toks[p]);
                ++p;
            }
        } else if (k == Done) {
            break;
        } else {
            throw std::runtime_error("LP parse: unexpected token " + toks[p]);
        }
    }
    for (const auto& [v, c] : data.objective) data.variables.insert(v);
    return data;
}

}  // namespace ttp

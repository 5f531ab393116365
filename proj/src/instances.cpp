#include "ttp/instances.hpp"

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace ttp {

namespace {

void require_even(int n) {
    if (n < 4 || n % 2 != 0) throw std::invalid_argument("generated instances need an even n >= 4");
}

}  // namespace

Instance gen_con(int n) {
    require_even(n);
    Instance inst(n, "CON" + std::to_string(n));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (i != j) inst.set_distance(i, j, 1);
        }
    }
    return inst;
}

Instance gen_circ(int n) {
    require_even(n);
    Instance inst(n, "CIRC" + std::to_string(n));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (i != j) inst.set_distance(i, j, std::min(std::abs(i - j), n - std::abs(i - j)));
        }
    }
    return inst;
}

Instance gen_line(int n) {
    require_even(n);
    Instance inst(n, "LINE" + std::to_string(n));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (i != j) inst.set_distance(i, j, std::abs(i - j));
        }
    }
    return inst;
}

Instance gen_incr(int n) {
    require_even(n);
    std::vector<long> pos(n + 1, 0);
    for (int i = 2; i <= n; ++i) pos[i] = pos[i - 1] + (i - 1);
    Instance inst(n, "INCR" + std::to_string(n));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (i != j) inst.set_distance(i, j, std::abs(pos[i] - pos[j]));
        }
    }
    return inst;
}

Instance gen_family(const std::string& family, int n) {
    if (family == "con") return gen_con(n);
    if (family == "circ") return gen_circ(n);
    if (family == "line") return gen_line(n);
    if (family == "incr") return gen_incr(n);
    throw std::invalid_argument("unknown instance family: " + family);
}

namespace {

using boost::property_tree::ptree;

void collect_teams(const ptree& node, std::vector<long>& ids) {
    for (const auto& [key, child] : node) {
        if (key == "team") {
            if (auto id = child.get_optional<long>("<xmlattr>.id")) ids.push_back(*id);
        } else {
            collect_teams(child, ids);
        }
    }
}

struct RawDistance {
    long team1, team2, dist;
};

void collect_distances(const ptree& node, std::vector<RawDistance>& out) {
    for (const auto& [key, child] : node) {
        if (key == "distance") {
            auto t1 = child.get_optional<long>("<xmlattr>.team1");
            auto t2 = child.get_optional<long>("<xmlattr>.team2");
            auto d = child.get_optional<long>("<xmlattr>.dist");
            if (!t1 || !t2 || !d) throw std::runtime_error("distance entry without team1/team2/dist attributes");
            out.push_back(RawDistance{*t1, *t2, *d});
        } else {
            collect_distances(child, out);
        }
    }
}

}  // namespace

Instance parse_robinx(const std::string& path) {
    ptree doc;
    try {
        boost::property_tree::read_xml(path, doc);
    } catch (const std::exception& e) {
        throw std::runtime_error("cannot parse " + path + ": " + e.what());
    }

    std::vector<long> team_ids;
    collect_teams(doc, team_ids);
    if (team_ids.empty()) throw std::runtime_error(path + ": no team entries found");
    const int n = static_cast<int>(team_ids.size());
    if (n < 4 || n % 2 != 0) {
        throw std::runtime_error(path + ": team count " + std::to_string(n) + " is not an even number >= 4");
    }

    std::vector<RawDistance> raw;
    collect_distances(doc, raw);
    if (raw.empty()) throw std::runtime_error(path + ": no distance entries found");

    long min_id = team_ids[0], max_id = team_ids[0];
    for (long id : team_ids) {
        min_id = std::min(min_id, id);
        max_id = std::max(max_id, id);
    }
    for (const RawDistance& r : raw) {
        min_id = std::min({min_id, r.team1, r.team2});
        max_id = std::max({max_id, r.team1, r.team2});
    }
    long base;  // 0- or 1-based ids, detected from the range
    if (min_id == 0 && max_id == n - 1) {
        base = 0;
    } else if (min_id == 1 && max_id == n) {
        base = 1;
    } else {
        throw std::runtime_error(path + ": team ids neither 0.." + std::to_string(n - 1) + " nor 1.." +
                                 std::to_string(n));
    }

    std::string name = path;
    if (auto slash = name.find_last_of('/'); slash != std::string::npos) name = name.substr(slash + 1);
    if (auto dot = name.find_last_of('.'); dot != std::string::npos) name = name.substr(0, dot);

    Instance inst(n, name);
    std::vector<bool> seen(n * n, false);
    for (const RawDistance& r : raw) {
        int i = static_cast<int>(r.team1 - base) + 1;
        int j = static_cast<int>(r.team2 - base) + 1;
        if (i == j) continue;  // self distances carry no information
        if (r.dist < 0) {
            std::ostringstream what;
            what << path << ": negative distance for pair (" << i << "," << j << ")";
            throw std::runtime_error(what.str());
        }
        inst.set_distance(i, j, r.dist);
        seen[(i - 1) * n + (j - 1)] = true;
    }
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (i != j && !seen[(i - 1) * n + (j - 1)]) {
                std::ostringstream what;
                what << path << ": missing distance for pair (" << i << "," << j << ")";
                throw std::runtime_error(what.str());
            }
        }
    }
    return inst;
}

void write_robinx(const Instance& inst, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    const int n = inst.team_count();
    out << "<Instance>\n";
    out << "  <MetaData>\n    <InstanceName>" << inst.name() << "</InstanceName>\n  </MetaData>\n";
    out << "  <Resources>\n    <Teams>\n";
    for (int i = 0; i < n; ++i) out << "      <team id=\"" << i << "\" name=\"Team " << i << "\"/>\n";
    out << "    </Teams>\n  </Resources>\n";
    out << "  <Data>\n    <Distances>\n";
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            out << "      <distance team1=\"" << (i - 1) << "\" team2=\"" << (j - 1) << "\" dist=\""
                << rational_to_text(inst.distance(i, j)) << "\"/>\n";
        }
    }
    out << "    </Distances>\n  </Data>\n";
    out << "</Instance>\n";
    if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace ttp

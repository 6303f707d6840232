#include "vb1/report_io.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace vb1 {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    return out + "\"";
}

std::string join_ideal(const std::vector<std::string>& gens) {
    std::string s;
    for (const auto& g : gens) {
        if (!s.empty()) s += "; ";
        s += g;
    }
    return s;
}

ordered_json json_pair(const CharacterClass& c) { return ordered_json::array({c.a(), c.b()}); }

std::string format_ms(double ms) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(3) << ms;
    return os.str();
}

} // namespace

std::string to_json(const DimReport& rep, bool with_timing) {
    ordered_json j;
    j["schema_version"] = 1;
    j["kind"] = "dim_report";
    j["field"] = rep.field;
    j["ideal"] = rep.ideal;
    j["subgroup"] = rep.subgroup;
    j["index"] = rep.index;
    j["dim"] = rep.dimension;
    if (rep.betti) j["betti"] = *rep.betti;
    j["engine"] = rep.engine;
    if (with_timing) j["millis"] = rep.millis;
    return j.dump();
}

std::string to_json(const SigmaReport& rep) {
    ordered_json j;
    j["schema_version"] = 1;
    j["kind"] = "sigma_report";
    j["generator"] = rep.generator;
    j["field"] = rep.field;
    j["complement"] = ordered_json::array();
    for (const auto& c : rep.complement) j["complement"].push_back(json_pair(c));
    j["antipodal_pairs"] = ordered_json::array();
    for (const auto& [a, b] : rep.antipodal_pairs)
        j["antipodal_pairs"].push_back(ordered_json::array({json_pair(a), json_pair(b)}));
    j["two_tame"] = rep.two_tame;
    j["finitely_presented"] = rep.finitely_presented;
    return j.dump();
}

std::string to_json(const StabilizationReport& rep, bool with_timing) {
    (void)with_timing;
    ordered_json j;
    j["schema_version"] = 1;
    j["kind"] = "stabilization_report";
    j["field"] = rep.field;
    j["ideal"] = rep.ideal;
    j["limit"] = rep.limit;
    j["dims"] = ordered_json::array();
    for (const auto& e : rep.dims) {
        ordered_json je;
        je["m"] = e.m;
        je["index"] = e.index;
        if (e.dim) je["dim"] = *e.dim;
        else je["error"] = e.error;
        j["dims"].push_back(je);
    }
    if (rep.sup_observed) j["sup_observed"] = *rep.sup_observed;
    if (rep.argmax) j["argmax"] = *rep.argmax;
    j["claim2"] = ordered_json::array();
    for (const auto& c : rep.claim2) {
        ordered_json jc;
        jc["m"] = c.m;
        jc["r"] = c.r;
        if (c.equal) jc["equal"] = *c.equal;
        else jc["error"] = c.error;
        j["claim2"].push_back(jc);
    }
    j["verdict"] = to_string(rep.verdict);
    return j.dump();
}

std::string to_json(const M0Bound& rep) {
    ordered_json j;
    j["schema_version"] = 1;
    j["kind"] = "m0_bound";
    j["d"] = rep.d;
    j["feasible_orders"] = rep.feasible_orders;
    j["search_limit"] = rep.search_limit;
    j["b"] = rep.b;
    j["m0_factorial"] = rep.m0_factorial.get_str();
    j["m0_lcm"] = rep.m0_lcm.get_str();
    return j.dump();
}

std::string to_json(const CrosscheckReport& rep, bool with_timing) {
    ordered_json j;
    j["schema_version"] = 1;
    j["kind"] = "crosscheck_report";
    j["dim_coinvariants"] = rep.dim_coinvariants;
    j["dim_groebner"] = rep.dim_groebner;
    j["agree"] = true; // disagreement raises instead of reporting
    if (with_timing) {
        j["millis_coinvariants"] = rep.millis_coinvariants;
        j["millis_groebner"] = rep.millis_groebner;
    }
    return j.dump();
}

std::string csv_header_dim() { return "field,ideal,subgroup,index,dim,betti,engine,millis"; }

std::string to_csv(const DimReport& rep, bool with_timing) {
    std::string row = csv_escape(rep.field) + "," + csv_escape(join_ideal(rep.ideal)) + "," +
                      csv_escape(rep.subgroup) + "," + std::to_string(rep.index) + "," +
                      std::to_string(rep.dimension) + ",";
    if (rep.betti) row += std::to_string(*rep.betti);
    row += "," + rep.engine + ",";
    if (with_timing) row += format_ms(rep.millis);
    return row;
}

std::string to_csv(const StabilizationReport& rep) {
    std::string out = "m,index,dim\n";
    for (const auto& e : rep.dims) {
        out += std::to_string(e.m) + "," + std::to_string(e.index) + ",";
        if (e.dim) out += std::to_string(*e.dim);
        out += "\n";
    }
    return out;
}

std::string to_csv(const M0Bound& rep) {
    std::string out = "s\n";
    for (auto s : rep.feasible_orders) out += std::to_string(s) + "\n";
    return out;
}

namespace {

void put(std::ostringstream& os, const std::string& key, const std::string& val) {
    os << std::left << std::setw(12) << key << val << "\n";
}

} // namespace

std::string to_table(const DimReport& rep, bool with_timing) {
    std::ostringstream os;
    put(os, "field", rep.field);
    put(os, "ideal", rep.ideal.empty() ? "(0)" : join_ideal(rep.ideal));
    put(os, "subgroup", rep.subgroup);
    put(os, "index", std::to_string(rep.index));
    put(os, "dim", std::to_string(rep.dimension));
    if (rep.betti) put(os, "betti", std::to_string(*rep.betti));
    put(os, "engine", rep.engine);
    if (with_timing) put(os, "time", format_ms(rep.millis) + " ms");
    return os.str();
}

std::string to_table(const SigmaReport& rep) {
    std::ostringstream os;
    put(os, "generator", rep.generator);
    put(os, "field", rep.field);
    std::string cs;
    for (const auto& c : rep.complement) {
        if (!cs.empty()) cs += " ";
        cs += c.to_string();
    }
    put(os, "complement", cs.empty() ? "(empty)" : cs);
    std::string ap;
    for (const auto& [a, b] : rep.antipodal_pairs) {
        if (!ap.empty()) ap += " ";
        ap += a.to_string() + "/" + b.to_string();
    }
    put(os, "antipodal", ap.empty() ? "none" : ap);
    put(os, "two_tame", rep.two_tame ? "true" : "false");
    put(os, "fin_pres", rep.finitely_presented ? "true" : "false");
    return os.str();
}

std::string to_table(const StabilizationReport& rep, bool claim2_section) {
    std::ostringstream os;
    put(os, "field", rep.field);
    put(os, "ideal", rep.ideal.empty() ? "(0)" : join_ideal(rep.ideal));
    os << std::left << std::setw(6) << "m" << std::setw(10) << "index"
       << "dim\n";
    for (const auto& e : rep.dims) {
        os << std::left << std::setw(6) << e.m << std::setw(10) << e.index;
        if (e.dim) os << *e.dim;
        else os << "(" << e.error << ")";
        os << "\n";
    }
    if (rep.sup_observed)
        os << "sup " << *rep.sup_observed << " first attained at m = " << *rep.argmax << "\n";
    if (claim2_section) {
        for (const auto& c : rep.claim2) {
            os << "J_" << c.m << " = J_" << c.m * c.r << ": ";
            if (c.equal) os << (*c.equal ? "true" : "false");
            else os << "(" << c.error << ")";
            os << "\n";
        }
        os << "verdict     " << to_string(rep.verdict) << "\n";
    }
    return os.str();
}

std::string to_table(const M0Bound& rep) {
    std::ostringstream os;
    put(os, "d", std::to_string(rep.d));
    std::string orders;
    for (auto s : rep.feasible_orders) {
        if (!orders.empty()) orders += " ";
        orders += std::to_string(s);
    }
    put(os, "orders", orders);
    put(os, "limit", std::to_string(rep.search_limit));
    put(os, "b", std::to_string(rep.b));
    put(os, "b!", rep.m0_factorial.get_str());
    put(os, "lcm", rep.m0_lcm.get_str());
    return os.str();
}

std::string to_table(const CrosscheckReport& rep, bool with_timing) {
    std::ostringstream os;
    put(os, "coinv dim", std::to_string(rep.dim_coinvariants));
    put(os, "gb dim", std::to_string(rep.dim_groebner));
    put(os, "agree", "true");
    if (with_timing) {
        put(os, "coinv ms", format_ms(rep.millis_coinvariants));
        put(os, "gb ms", format_ms(rep.millis_groebner));
    }
    return os.str();
}

} // namespace vb1

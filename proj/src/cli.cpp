#include "vb1/cli.hpp"

#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "vb1/errors.hpp"
#include "vb1/groebner.hpp"
#include "vb1/report_io.hpp"
#include "vb1/sigma.hpp"
#include "vb1/stability.hpp"

namespace vb1 {

namespace {

std::int64_t parse_int(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        std::int64_t v = std::stoll(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw invalid_input("expected an integer for " + what + ", got '" + text + "'");
    }
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace

FieldDescriptor parse_field(const std::string& text) {
    if (text == "Q") return FieldDescriptor::rationals();
    if (text.size() > 1 && text[0] == 'F') {
        std::int64_t p = parse_int(text.substr(1), "field characteristic");
        return FieldDescriptor::prime(p);
    }
    if (text.rfind("GF(", 0) == 0 && text.back() == ')') {
        std::string inner = text.substr(3, text.size() - 4);
        auto parts = split(inner, '^');
        if (parts.size() == 1) return FieldDescriptor::prime(parse_int(parts[0], "field order"));
        if (parts.size() == 2)
            return FieldDescriptor::extension(parse_int(parts[0], "field characteristic"),
                                              static_cast<int>(parse_int(parts[1], "field degree")));
    }
    throw invalid_input("unrecognized field descriptor '" + text +
                        "'; expected Q, F<p> or GF(p^r)");
}

std::vector<std::string> parse_variables(const std::string& text, const Limits& lim) {
    auto names = split(text, ',');
    if (names.empty() || static_cast<int>(names.size()) > lim.max_rank)
        throw invalid_input("expected between 1 and " + std::to_string(lim.max_rank) +
                            " variables, got '" + text + "'");
    for (const auto& n : names) {
        if (n.empty()) throw invalid_input("empty variable name in '" + text + "'");
        if (!std::isalpha(static_cast<unsigned char>(n[0])) && n[0] != '_')
            throw invalid_input("variable '" + n + "' must start with a letter");
        for (char c : n)
            if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
                throw invalid_input("variable '" + n + "' contains '" + std::string(1, c) + "'");
    }
    for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t j = i + 1; j < names.size(); ++j)
            if (names[i] == names[j])
                throw invalid_input("duplicate variable '" + names[i] + "'");
    return names;
}

Lattice parse_subgroup(const std::string& text, int rank, const Limits& lim) {
    if (text.rfind("m:", 0) == 0) {
        std::int64_t m = parse_int(text.substr(2), "congruence modulus");
        return congruence_lattice(m, rank, lim);
    }
    if (text.rfind("prop53:", 0) == 0) {
        auto parts = split(text.substr(7), ',');
        if (parts.size() != 2)
            throw invalid_input("expected prop53:<p>,<r>, got '" + text + "'");
        if (rank != 2) throw invalid_input("the prop53 subgroup lives in rank 2");
        return kernel_lattice_prop53(parse_int(parts[0], "p"),
                                     static_cast<int>(parse_int(parts[1], "r")), lim);
    }
    auto groups = split(text, ';');
    if (static_cast<int>(groups.size()) != rank)
        throw invalid_input("subgroup '" + text + "' must list " + std::to_string(rank) +
                            " generating vectors separated by ';'");
    Mat m(static_cast<std::size_t>(rank), Vec(static_cast<std::size_t>(rank)));
    for (int j = 0; j < rank; ++j) {
        auto entries = split(groups[static_cast<std::size_t>(j)], ',');
        if (static_cast<int>(entries.size()) != rank)
            throw invalid_input("generating vector '" + groups[static_cast<std::size_t>(j)] +
                                "' must have " + std::to_string(rank) + " entries");
        for (int i = 0; i < rank; ++i)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                parse_int(entries[static_cast<std::size_t>(i)], "lattice entry");
    }
    return Lattice::from_columns(m, lim);
}

namespace {

enum class Format { table, json, csv };

struct CommonOpts {
    std::string field_text = "Q";
    std::string vars_text;
    std::vector<std::string> ideal_texts;
    std::string subgroup_text;
    Format format = Format::table;
    bool no_timing = false;
    Limits lim;

    FieldDescriptor field = FieldDescriptor::rationals();
    std::vector<std::string> vars;
    std::vector<LaurentPoly> gens;

    // fail-fast: everything parses before any computation starts
    void resolve(bool need_vars_default_rank2 = true) {
        field = parse_field(field_text);
        if (vars_text.empty())
            vars = default_variables(need_vars_default_rank2 ? 2 : 1);
        else
            vars = parse_variables(vars_text, lim);
        for (const auto& t : ideal_texts) gens.push_back(parse_polynomial(t, field, vars, lim));
    }
    int rank() const { return static_cast<int>(vars.size()); }
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_subgroup, bool with_ideal = true) {
    cmd->fallthrough();
    cmd->add_option("--field", o.field_text, "Coefficient field: Q, F<p> or GF(p^r)")
        ->capture_default_str();
    cmd->add_option("--vars", o.vars_text,
                    "Comma-separated variable names; the count sets the rank (default x,y)");
    if (with_ideal)
        cmd->add_option("--ideal", o.ideal_texts,
                        "Ideal generator (repeatable), e.g. \"y - x^2 + x - 1\"");
    if (with_subgroup)
        cmd->add_option("--subgroup", o.subgroup_text,
                        "Finite-index subgroup: m:<int>, prop53:<p>,<r>, or generator "
                        "vectors \"a,b;c,d\"")
            ->required();
}

std::string format_dim(const DimReport& rep, Format f, bool timing) {
    switch (f) {
        case Format::table: return to_table(rep, timing);
        case Format::json: return to_json(rep, timing) + "\n";
        case Format::csv: return csv_header_dim() + "\n" + to_csv(rep, timing) + "\n";
    }
    return "";
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact first Betti numbers of finite-index subgroups of split metabelian "
                 "groups A x| Z^n, Bieri-Strebel sigma invariants, and dimension "
                 "stabilization scans"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string format_text = "table";
    app.add_option("--format", format_text, "Output format: table, json or csv")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
    app.add_flag("--no-timing", o.no_timing, "Suppress timing fields (for byte-stable output)");
    app.add_option("--max-cosets", o.lim.max_cosets, "Coset enumeration cap")
        ->capture_default_str();
    app.add_option("--max-gb-pairs", o.lim.max_gb_pairs, "Groebner pair reduction cap")
        ->capture_default_str();

    auto* betti = app.add_subcommand(
        "betti", "First Betti number of the split extension restricted to a subgroup");
    add_common(betti, o, true);
    auto* dim = app.add_subcommand(
        "dim", "Dimension of the coinvariants k[Z^n]/(ideal + augmentation of the subgroup)");
    add_common(dim, o, true);
    std::int64_t copies = 1;
    for (auto* cmd : {betti, dim})
        cmd->add_option("--copies", copies,
                        "Number of identical cyclic summands; scales the dimension (an upper "
                        "bound for modules with this many generators)")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
    auto* scan = app.add_subcommand("scan", "Dimension sequence over congruence subgroups m = 1..M");
    add_common(scan, o, false);
    std::int64_t scan_limit = 12;
    scan->add_option("--limit", scan_limit, "Scan bound M")->capture_default_str();
    auto* stabilize = app.add_subcommand(
        "stabilize", "Dimension scan plus ideal-equality checks at the argmax and a verdict");
    add_common(stabilize, o, false);
    stabilize->add_option("--limit", scan_limit, "Scan bound M")->capture_default_str();
    auto* sigma = app.add_subcommand(
        "sigma", "Sigma complement, 2-tameness and the finite-presentation verdict (rank 2)");
    add_common(sigma, o, false);
    auto* m0 = app.add_subcommand("m0", "Feasible torsion orders s with phi(s)^2 <= d s and "
                                        "the stabilization moduli b! and lcm");
    m0->fallthrough();
    std::int64_t m0_d = 1;
    m0->add_option("--d", m0_d, "Generator count of the diagonal tensor-square module")
        ->required();
    auto* gb = app.add_subcommand(
        "gb", "Groebner basis of the ideal in the Laurent model k[vars,t]/(t*prod(vars) - 1)");
    add_common(gb, o, false);
    std::string gb_subgroup;
    gb->add_option("--subgroup", gb_subgroup,
                   "Optional finite-index subgroup; adds its relations x^s - 1");
    auto* crosscheck = app.add_subcommand(
        "crosscheck", "Compute the dimension with both engines and insist they agree");
    add_common(crosscheck, o, true);

    auto* demo = app.add_subcommand("demo", "Packaged demonstrations with asserted outputs");
    demo->require_subcommand(1);
    demo->fallthrough();
    std::int64_t dp = 2, dm = 1, dr = 2;
    auto* d51 = demo->add_subcommand("prop51", "Betti number p^m + 2 over F_p at the "
                                               "congruence subgroup of modulus p^m");
    d51->fallthrough();
    d51->add_option("--p", dp, "Prime p")->required();
    d51->add_option("--m", dm, "Exponent m")->required();
    auto* d53 = demo->add_subcommand("prop53", "Betti number >= r + 2 over F_p at a subgroup "
                                               "of index p^r - 1 coprime to p");
    d53->fallthrough();
    d53->add_option("--p", dp, "Prime p")->required();
    d53->add_option("--r", dr, "Extension degree r >= 2")->required();
    auto* dwr = demo->add_subcommand("wreath", "Betti number m + 1 of the index-m subgroup in "
                                               "the rank-1 wreath-like case");
    dwr->fallthrough();
    dwr->add_option("--m", dm, "Index m")->required();

    app.footer("Subgroup text lists generating vectors; \"3,0;-2,1\" spans {(3,0),(-2,1)}.\n"
               "Polynomial grammar: expr ::= ['+'|'-'] term (('+'|'-') term)*;\n"
               "term ::= factor ('*' factor)*;\n"
               "factor ::= integer ('/' integer)? | var ('^' int)? | '(' expr ')'.\n"
               "CSV columns: dim reports field,ideal,subgroup,index,dim,betti,engine,millis;\n"
               "scans m,index,dim. Exit codes: 0 ok, 2 bad input, 3 resource cap, 4 engine "
               "disagreement.");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    Format fmt = format_text == "json" ? Format::json
                                       : (format_text == "csv" ? Format::csv : Format::table);
    o.format = fmt;
    const bool timing = !o.no_timing;

    try {
        if (betti->parsed() || dim->parsed() || crosscheck->parsed()) {
            o.resolve();
            Lattice s = parse_subgroup(o.subgroup_text, o.rank(), o.lim);
            if (crosscheck->parsed()) {
                CrosscheckReport rep = crosscheck_dim(o.gens, s, o.field, o.lim);
                out << (fmt == Format::json ? to_json(rep, timing) + "\n"
                                            : to_table(rep, timing));
                return 0;
            }
            DimReport rep = coinvariant_dim(o.gens, s, o.field, o.lim, o.subgroup_text);
            rep.dimension *= static_cast<std::uint64_t>(copies);
            if (betti->parsed())
                rep.betti = rep.dimension + static_cast<std::uint64_t>(o.rank());
            out << format_dim(rep, fmt, timing);
            return 0;
        }
        if (scan->parsed() || stabilize->parsed()) {
            o.resolve();
            bool claim2 = stabilize->parsed();
            StabilizationReport rep =
                dim_sequence(o.gens, o.field, scan_limit, o.rank(), o.lim, claim2);
            switch (fmt) {
                case Format::table: out << to_table(rep, claim2); break;
                case Format::json: out << to_json(rep, timing) << "\n"; break;
                case Format::csv: out << to_csv(rep); break;
            }
            return 0;
        }
        if (sigma->parsed()) {
            o.resolve();
            if (o.gens.size() != 1)
                throw invalid_input("sigma takes exactly one --ideal generator");
            SigmaReport rep = is_two_tame(o.gens[0], o.vars);
            out << (fmt == Format::json ? to_json(rep) + "\n" : to_table(rep));
            return 0;
        }
        if (m0->parsed()) {
            M0Bound rep = m0_candidates(m0_d);
            switch (fmt) {
                case Format::table: out << to_table(rep); break;
                case Format::json: out << to_json(rep) << "\n"; break;
                case Format::csv: out << to_csv(rep); break;
            }
            return 0;
        }
        if (gb->parsed()) {
            o.resolve();
            std::optional<Lattice> s;
            if (!gb_subgroup.empty()) s = parse_subgroup(gb_subgroup, o.rank(), o.lim);
            GroebnerBasis basis =
                laurent_ideal_basis(o.gens, s ? &*s : nullptr, o.field, o.lim);
            auto stair = staircase_dimension(basis, o.lim);
            std::vector<std::string> model_vars = o.vars;
            std::string tname = "t";
            while (std::find(model_vars.begin(), model_vars.end(), tname) != model_vars.end())
                tname += "_";
            model_vars.push_back(tname);
            if (fmt == Format::json) {
                std::ostringstream basis_json;
                basis_json << "{\"schema_version\":1,\"kind\":\"groebner_basis\",\"field\":\""
                           << o.field.to_string() << "\",\"order\":\"" << basis.order.to_string()
                           << "\",\"variables\":[";
                for (std::size_t i = 0; i < model_vars.size(); ++i)
                    basis_json << (i ? "," : "") << "\"" << model_vars[i] << "\"";
                basis_json << "],\"basis\":[";
                for (std::size_t i = 0; i < basis.polys.size(); ++i)
                    basis_json << (i ? "," : "") << "\""
                               << basis.polys[i].to_string(model_vars, o.field) << "\"";
                basis_json << "],\"staircase\":";
                if (stair) basis_json << *stair;
                else basis_json << "\"infinite\"";
                basis_json << "}";
                out << basis_json.str() << "\n";
            } else {
                for (const auto& g : basis.polys)
                    out << g.to_string(model_vars, o.field) << "\n";
                out << "staircase   " << (stair ? std::to_string(*stair) : "infinite") << "\n";
            }
            return 0;
        }
        if (demo->parsed()) {
            DimReport rep;
            if (d51->parsed()) rep = demo_prop51(dp, static_cast<int>(dm), o.lim);
            else if (d53->parsed()) rep = demo_prop53(dp, static_cast<int>(dr), o.lim);
            else rep = demo_wreath(dm, o.lim);
            out << format_dim(rep, fmt, timing);
            return 0;
        }
    } catch (const resource_limit& e) {
        err << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const crosscheck_mismatch& e) {
        err << "cross-check failure: " << e.what() << "\n";
        return 4;
    } catch (const invalid_input& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "no subcommand\n";
    return 2;
}

} // namespace vb1

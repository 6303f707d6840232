// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. argv[1] is the golden-file directory; pass --write as argv[2] to
// regenerate the golden files after an intentional output change.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "vb1/cli.hpp"
#include "vb1/errors.hpp"
#include "vb1/groebner.hpp"
#include "vb1/sigma.hpp"
#include "vb1/stability.hpp"

using namespace vb1;

namespace {

const FieldDescriptor Q = FieldDescriptor::rationals();

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw Failure(what);
}

LaurentPoly pq(const std::string& s, const FieldDescriptor& F) {
    return parse_polynomial(s, F, default_variables(2));
}

// --- criterion bodies ------------------------------------------------------

void criterion1() {
    for (auto [p, m] : std::vector<std::pair<std::int64_t, int>>{
             {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 1}}) {
        DimReport rep = demo_prop51(p, m);
        std::uint64_t pm = 1;
        for (int i = 0; i < m; ++i) pm *= static_cast<std::uint64_t>(p);
        require(rep.betti && *rep.betti == pm + 2,
                "prop51(" + std::to_string(p) + "," + std::to_string(m) + ") expected " +
                    std::to_string(pm + 2));
    }
}

void criterion2() {
    for (auto [p, r] : std::vector<std::pair<std::int64_t, int>>{
             {2, 2}, {2, 3}, {2, 4}, {3, 2}}) {
        FieldDescriptor F = FieldDescriptor::prime(p);
        DimReport rep = demo_prop53(p, r);
        std::uint64_t pr = 1;
        for (int i = 0; i < r; ++i) pr *= static_cast<std::uint64_t>(p);
        require(rep.betti && *rep.betti >= static_cast<std::uint64_t>(r) + 2,
                "prop53 betti below r + 2");
        require(rep.index == pr - 1, "prop53 index is not p^r - 1");
        require(std::gcd(static_cast<std::int64_t>(rep.index), p) == 1,
                "prop53 index not coprime to p");
        // both engines must report the identical exact value
        LaurentPoly g(F, 2);
        g.add_term({0, 1}, F.one());
        g.add_term({1, 0}, F.neg(F.one()));
        g.add_term({0, 0}, F.neg(F.one()));
        CrosscheckReport cc = crosscheck_dim({g}, kernel_lattice_prop53(p, r), F);
        require(cc.dim_coinvariants + 2 == *rep.betti, "engines disagree with the demo");
    }
}

void criterion3() {
    for (std::int64_t m = 1; m <= 20; ++m) {
        DimReport rep = demo_wreath(m);
        require(rep.betti && *rep.betti == static_cast<std::uint64_t>(m) + 1,
                "wreath betti at m = " + std::to_string(m));
    }
}

void criterion4() {
    FieldDescriptor F2 = FieldDescriptor::prime(2);
    auto cmp = sigma_complement_principal(pq("y - x^2 + x - 1", F2));
    std::set<CharacterClass> got(cmp.begin(), cmp.end());
    std::set<CharacterClass> expect = {CharacterClass(0, 1), CharacterClass(1, 0),
                                       CharacterClass(-1, -2)};
    require(got == expect, "sigma complement of the flagship generator");
    require(is_two_tame(pq("y - x^2 + x - 1", F2)).two_tame, "flagship generator not 2-tame");

    SigmaReport rep53 = is_two_tame(pq("y - x - 1", F2)); // x2 - x1 - 1
    require(rep53.complement.size() == 3, "second generator complement size");
    require(rep53.antipodal_pairs.empty(), "second generator has an antipodal pair");
}

void criterion5() {
    StabilizationReport rep = dim_sequence({pq("y - x^2 + x - 1", Q)}, Q, 12, 2);
    LaurentPoly g1 = parse_polynomial("x^2 - x + 1", Q, {"x"});
    for (const auto& e : rep.dims) {
        require(e.dim.has_value(), "scan entry missing");
        require(*e.dim == substitution_oracle_dim(g1, e.m), "oracle mismatch at m");
        Lattice s = congruence_lattice(e.m, 2);
        auto stair = staircase_dimension(laurent_ideal_basis({pq("y - x^2 + x - 1", Q)}, &s, Q));
        require(stair && *stair == *e.dim, "staircase mismatch at m");
    }
    for (const auto& a : rep.dims)
        for (const auto& b : rep.dims)
            if (b.m % a.m == 0)
                require(*a.dim <= *b.dim, "divisibility monotonicity");
    require(rep.argmax && *rep.argmax == 4, "argmax is not 4");
    require(rep.claim2.size() == 2, "claim2 checks missing");
    for (const auto& c : rep.claim2)
        require(c.equal && *c.equal, "ideal equality fails at the argmax");
    require(rep.verdict == Verdict::stabilized, "verdict");

    StabilizationReport contrast = dim_sequence({pq("x - 1", Q)}, Q, 8, 2);
    for (const auto& e : contrast.dims)
        require(e.dim && *e.dim == static_cast<std::uint64_t>(e.m), "contrast dims not m");
    for (const auto& c : contrast.claim2)
        require(c.equal && !*c.equal, "contrast claim2 unexpectedly holds");
    require(contrast.verdict == Verdict::growing, "contrast verdict");
}

void criterion6() {
    M0Bound b = m0_candidates(1);
    require(b.feasible_orders == std::vector<std::int64_t>{1, 2, 4, 6}, "feasible orders");
    require(b.b == 6, "b");
    require(b.m0_factorial == 720, "b!");
    require(b.m0_lcm == 12, "lcm");
}

void criterion7() {
    std::mt19937_64 rng(20240815);
    std::vector<FieldDescriptor> fields = {Q, FieldDescriptor::prime(2),
                                           FieldDescriptor::prime(3)};
    for (int trial = 0; trial < 100; ++trial) {
        const FieldDescriptor& F = fields[trial % 3];
        int ngens = 1 + static_cast<int>(rng() % 2);
        std::vector<LaurentPoly> gens;
        for (int i = 0; i < ngens; ++i) {
            LaurentPoly g(F, 2);
            int nterms = 1 + static_cast<int>(rng() % 4);
            for (int t = 0; t < nterms; ++t) {
                std::int64_t e1 = static_cast<std::int64_t>(rng() % 4);
                std::int64_t e2 = static_cast<std::int64_t>(rng() % (4 - e1));
                std::int64_t c = static_cast<std::int64_t>(rng() % 5) - 2;
                g.add_term({e1, e2}, F.from_integer(c));
            }
            gens.push_back(std::move(g));
        }
        std::int64_t m = 1 + static_cast<std::int64_t>(rng() % 4);
        crosscheck_dim(gens, congruence_lattice(m, 2), F); // throws on disagreement
    }
}

// --- criterion 8: determinism against golden files -------------------------

const std::vector<std::pair<std::string, std::vector<std::string>>> golden_cases = {
    {"demo_prop51_2_1.json", {"demo", "prop51", "--p", "2", "--m", "1", "--format", "json",
                              "--no-timing"}},
    {"demo_prop51_3_2.json", {"demo", "prop51", "--p", "3", "--m", "2", "--format", "json",
                              "--no-timing"}},
    {"demo_prop51_2_3.json", {"demo", "prop51", "--p", "2", "--m", "3", "--format", "json",
                              "--no-timing"}},
    {"demo_prop53_2_2.json", {"demo", "prop53", "--p", "2", "--r", "2", "--format", "json",
                              "--no-timing"}},
    {"demo_prop53_2_4.json", {"demo", "prop53", "--p", "2", "--r", "4", "--format", "json",
                              "--no-timing"}},
    {"demo_wreath_7.json", {"demo", "wreath", "--m", "7", "--format", "json", "--no-timing"}},
    {"demo_wreath_7.table", {"demo", "wreath", "--m", "7", "--no-timing"}},
    {"demo_wreath_7.csv", {"demo", "wreath", "--m", "7", "--format", "csv", "--no-timing"}},
    {"sigma_flagship.json", {"sigma", "--field", "F2", "--vars", "x,y", "--ideal",
                             "y - x^2 + x - 1", "--format", "json", "--no-timing"}},
    {"m0_d1.json", {"m0", "--d", "1", "--format", "json", "--no-timing"}},
};

std::string run_capture(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    require(code == 0, "golden invocation failed: " + err.str());
    return out.str();
}

void write_golden(const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    for (const auto& [name, args] : golden_cases) {
        std::ofstream f(dir / name, std::ios::binary);
        f << run_capture(args);
    }
}

void criterion8(const std::filesystem::path& dir) {
    for (const auto& [name, args] : golden_cases) {
        std::ifstream f(dir / name, std::ios::binary);
        require(f.good(), "missing golden file " + name);
        std::stringstream buf;
        buf << f.rdbuf();
        std::string first = run_capture(args);
        std::string second = run_capture(args);
        require(first == second, "repeated runs differ for " + name);
        require(first == buf.str(), "output differs from golden " + name);
    }
}

} // namespace

int main(int argc, char** argv) {
    std::filesystem::path golden_dir = argc > 1 ? argv[1] : "tests/golden";
    if (argc > 2 && std::string(argv[2]) == "--write") {
        write_golden(golden_dir);
        std::cout << "golden files written to " << golden_dir << "\n";
        return 0;
    }

    struct Criterion {
        int id;
        std::string label;
        double budget_seconds;
        std::function<void()> body;
    };
    std::vector<Criterion> criteria = {
        {1, "prop51 exact p^m + 2 on the six pinned instances", 5.0, criterion1},
        {2, "prop53 betti >= r + 2, index p^r - 1 coprime to p, engines agree", 10.0,
         criterion2},
        {3, "wreath betti m + 1 for m = 1..20", 1.0, criterion3},
        {4, "sigma complement values and 2-tameness", 5.0, criterion4},
        {5, "stabilization scan: three-way agreement, claim2, growing contrast", 30.0,
         criterion5},
        {6, "m0 bound: orders {1,2,4,6}, b! = 720, lcm = 12", 5.0, criterion6},
        {7, "two-engine agreement on 100 randomized instances", 120.0, criterion7},
        {8, "byte-identical demo outputs against golden files", 30.0,
         [&] { criterion8(golden_dir); }},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::string verdict = "PASS";
        std::string detail;
        try {
            c.body();
        } catch (const std::exception& e) {
            verdict = "FAIL";
            detail = e.what();
            ++failures;
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (verdict == "PASS" && secs > c.budget_seconds) {
            verdict = "FAIL";
            detail = "exceeded the " + std::to_string(c.budget_seconds) + " s budget";
            ++failures;
        }
        std::cout << "[" << verdict << "] criterion " << c.id << ": " << c.label << " ("
                  << std::fixed << std::setprecision(2) << secs << " s)";
        if (!detail.empty()) std::cout << " -- " << detail;
        std::cout << "\n";
    }
    return failures == 0 ? 0 : 1;
}

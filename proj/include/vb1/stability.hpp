#ifndef VB1_STABILITY_HPP
#define VB1_STABILITY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "vb1/coinvariants.hpp"
#include "vb1/field.hpp"
#include "vb1/laurent.hpp"

namespace vb1 {

struct ScanEntry {
    std::int64_t m = 0;
    std::uint64_t index = 0;
    std::optional<std::uint64_t> dim; // empty when the entry hit a cap
    std::string error;
};

struct Claim2Check {
    std::int64_t m = 0;
    std::int64_t r = 0;
    std::optional<bool> equal;
    std::string error;
};

enum class Verdict { stabilized, growing, inconclusive };
std::string to_string(Verdict v);

struct StabilizationReport {
    std::vector<std::string> ideal;
    std::string field;
    std::int64_t limit = 0; // scan bound M
    std::vector<ScanEntry> dims;
    std::optional<std::uint64_t> sup_observed;
    std::optional<std::int64_t> argmax; // first m attaining the sup
    std::vector<Claim2Check> claim2;
    Verdict verdict = Verdict::inconclusive;
};

// Scans m = 1..M over congruence subgroups, checks the ideal equalities
// J_{m*} = J_{m* r} for r in {2, 3} at the first argmax m*, and assigns a
// verdict. A bounded scan cannot prove boundedness, so "stabilized" requires
// the ideal equalities and "growing" a strictly increasing witness chain
// along divisibility reaching the top half of the scan; everything else is
// inconclusive. Per-entry cap errors are recorded and the scan continues.
StabilizationReport dim_sequence(const std::vector<LaurentPoly>& gens,
                                 const FieldDescriptor& k, std::int64_t scan_limit,
                                 int rank_n, const Limits& lim = {},
                                 bool run_claim2 = true);

// dim of k[x,y]/(y - g(x), x^m - 1, y^m - 1) for univariate g: equals
// deg gcd(x^m - 1, g(x)^m - 1), with y eliminated by substitution. Accepts
// Laurent g (exponents are reduced mod m, which is valid mod x^m - 1).
std::uint64_t substitution_oracle_dim(const LaurentPoly& g, std::int64_t m);

struct M0Bound {
    std::int64_t d = 0;
    std::vector<std::int64_t> feasible_orders; // all s with phi(s)^2 <= d*s
    std::int64_t search_limit = 0;             // proven: no solutions beyond it
    std::int64_t b = 0;                        // max feasible order
    mpz_class m0_factorial;                    // b!
    mpz_class m0_lcm;                          // lcm of the feasible orders
};

// Exhaustive enumeration of {s : phi(s)^2 <= d s}. phi(s)^2/s is
// multiplicative and every prime-power factor except the one at 2 is >= 1,
// so a depth-first search over prime powers (2 first) with pruning is
// provably exhaustive; a linear re-scan up to the found limit double-checks.
M0Bound m0_candidates(std::int64_t d);

// Packaged demonstrations; each asserts its expected value internally.
DimReport demo_prop51(std::int64_t p, int m, const Limits& lim = {});
DimReport demo_prop53(std::int64_t p, int r, const Limits& lim = {});
DimReport demo_wreath(std::int64_t m, const Limits& lim = {});

} // namespace vb1

#endif

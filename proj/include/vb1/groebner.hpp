#ifndef VB1_GROEBNER_HPP
#define VB1_GROEBNER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vb1/coinvariants.hpp"
#include "vb1/field.hpp"
#include "vb1/lattice.hpp"
#include "vb1/laurent.hpp"

namespace vb1 {

// Global monomial orders on exponent vectors (nonnegative entries).
// elimination(split): the block of variables [split, nvars) is compared
// first (by grevlex), so those variables are eliminated.
class MonomialOrder {
public:
    enum class Kind { grevlex, lex, elimination };

    static MonomialOrder grevlex() { return MonomialOrder{Kind::grevlex, 0}; }
    static MonomialOrder lex() { return MonomialOrder{Kind::lex, 0}; }
    static MonomialOrder elimination(std::size_t split) {
        return MonomialOrder{Kind::elimination, split};
    }

    Kind kind() const { return kind_; }
    std::size_t split() const { return split_; }
    bool less(const Vec& a, const Vec& b) const;
    std::string to_string() const;

private:
    MonomialOrder(Kind k, std::size_t s) : kind_(k), split_(s) {}
    Kind kind_;
    std::size_t split_;
};

struct GBTerm {
    Vec exps;
    FieldElement coeff;
};

// Ordinary polynomial with terms kept sorted descending in a fixed order.
struct GBPoly {
    std::vector<GBTerm> terms;

    bool is_zero() const { return terms.empty(); }
    const GBTerm& lead() const { return terms.front(); }
    std::string to_string(const std::vector<std::string>& vars, const FieldDescriptor& F) const;
};

// Sorts, merges equal monomials, drops zeros.
GBPoly gb_normalize(std::vector<GBTerm> terms, const MonomialOrder& ord,
                    const FieldDescriptor& F);
// Conversion from a Laurent polynomial with nonnegative exponents, padded to
// `nvars` variables (extra variables get exponent 0).
GBPoly gb_from_laurent(const LaurentPoly& f, const MonomialOrder& ord, std::size_t nvars);

struct GroebnerBasis {
    MonomialOrder order = MonomialOrder::grevlex();
    std::size_t nvars = 0;
    FieldDescriptor field = FieldDescriptor::rationals();
    std::vector<GBPoly> polys; // reduced: monic, pairwise irreducible, sorted by leading term
};

// Full reduction of f modulo the basis; deterministic reducer choice.
GBPoly normal_form(const GBPoly& f, const std::vector<GBPoly>& basis,
                   const MonomialOrder& ord, const FieldDescriptor& F);

GBPoly s_polynomial(const GBPoly& f, const GBPoly& g, const MonomialOrder& ord,
                    const FieldDescriptor& F);

// Buchberger with the normal pair-selection strategy (lcm degree, then pair
// index) and the two classical criteria; returns the reduced basis.
GroebnerBasis buchberger(std::vector<GBPoly> gens, const MonomialOrder& ord,
                         const FieldDescriptor& F, std::size_t nvars,
                         const Limits& lim = {});

// Models k[Z^n] as k[x_1..x_n, t]/(t*x_1*...*x_n - 1): generators are shifted
// to nonnegative exponents, lattice relations enter as x^{s+} - x^{s-}, and
// the basis is computed in an elimination order with the t block dominant,
// so t is eliminable whenever the subgroup has finite index.
GroebnerBasis laurent_ideal_basis(const std::vector<LaurentPoly>& gens, const Lattice* s,
                                  const FieldDescriptor& k, const Limits& lim = {});

// Number of monomials in the first `nvars` variables not divisible by any
// leading term; nullopt means infinite (some variable has no pure power
// among the leading terms). Polys must only involve the first nvars variables.
std::optional<std::uint64_t> staircase_dimension(const std::vector<GBPoly>& polys,
                                                 std::size_t nvars, const Limits& lim = {});
std::optional<std::uint64_t> staircase_dimension(const GroebnerBasis& gb,
                                                 const Limits& lim = {});

// The basis elements not involving t, i.e. a basis of the elimination ideal.
std::vector<GBPoly> eliminate_t(const GroebnerBasis& gb);

struct CrosscheckReport {
    std::uint64_t dim_coinvariants = 0;
    std::uint64_t dim_groebner = 0;
    double millis_coinvariants = 0.0;
    double millis_groebner = 0.0;
};

// Runs both engines and insists they agree; throws crosscheck_mismatch with
// both witnesses otherwise.
CrosscheckReport crosscheck_dim(const std::vector<LaurentPoly>& gens, const Lattice& s,
                                const FieldDescriptor& k, const Limits& lim = {});

} // namespace vb1

#endif

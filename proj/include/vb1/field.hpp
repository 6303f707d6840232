#ifndef VB1_FIELD_HPP
#define VB1_FIELD_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace vb1 {

enum class FieldKind { rationals, prime, extension };

// A field element. Only one member is active, depending on the field the
// element belongs to: `rat` for Q, `vec` for F_p and F_{p^r} (length r,
// entries in [0, p), low degree first). All arithmetic goes through
// FieldDescriptor, which supplies the context.
struct FieldElement {
    mpq_class rat;
    std::vector<std::int64_t> vec;
};

// Immutable descriptor of Q, F_p or F_{p^r}, and the arithmetic on its
// elements. Elements are canonical (rationals in lowest terms with positive
// denominator, residues reduced into [0, p)), so equality is structural.
class FieldDescriptor {
public:
    static FieldDescriptor rationals();
    static FieldDescriptor prime(std::int64_t p);
    // Extension with the canonical modulus: the lexicographically smallest
    // monic irreducible of degree r over F_p (tuples (c_0,...,c_{r-1})
    // compared low-degree-first). r = 1 collapses to the prime field.
    static FieldDescriptor extension(std::int64_t p, int r);
    // Extension with an explicit monic modulus (degree r, low degree first,
    // leading 1 included); irreducibility is checked.
    static FieldDescriptor extension(std::int64_t p, int r, std::vector<std::int64_t> modulus);

    FieldKind kind() const { return kind_; }
    bool finite() const { return kind_ != FieldKind::rationals; }
    std::int64_t characteristic() const { return p_; } // 0 for Q
    int degree() const { return r_; }                  // 1 for Q and F_p
    // p^r; only for finite fields.
    std::uint64_t order() const;
    // Modulus coefficients (length r+1, monic, low degree first); extension only.
    const std::vector<std::int64_t>& modulus() const { return modulus_; }

    bool operator==(const FieldDescriptor& o) const;
    bool operator!=(const FieldDescriptor& o) const { return !(*this == o); }

    // "Q", "F5", "GF(2^3)"
    std::string to_string() const;

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_integer(std::int64_t v) const;
    FieldElement from_integer(const mpz_class& v) const;
    FieldElement from_rational(const mpq_class& v) const; // rationals only
    // Residue class of the variable u of the modulus; extension fields only.
    FieldElement generator_element() const;

    bool is_zero(const FieldElement& a) const;
    bool is_one(const FieldElement& a) const;
    bool eq(const FieldElement& a, const FieldElement& b) const;

    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    FieldElement inv(const FieldElement& a) const; // throws on zero
    FieldElement div(const FieldElement& a, const FieldElement& b) const;
    FieldElement pow(const FieldElement& a, std::int64_t e) const; // negative e via inv

    std::string to_string(const FieldElement& a) const;

private:
    FieldDescriptor() = default;

    FieldKind kind_ = FieldKind::rationals;
    std::int64_t p_ = 0;
    int r_ = 1;
    std::vector<std::int64_t> modulus_;
};

// The element of smallest multiplicative order p^r - 1 in the ordering of
// coefficient tuples; deterministic. Throws invalid_input for Q.
FieldElement multiplicative_generator(const FieldDescriptor& F);

// The unique L in [0, p^r - 1) with base^L = a, by baby-step/giant-step.
// `base` must be a multiplicative generator; a must be nonzero.
std::int64_t discrete_log(const FieldDescriptor& F, const FieldElement& base,
                          const FieldElement& a);

namespace detail {
// Trial-division primality used at descriptor construction; desk scale.
bool is_prime(std::int64_t n, std::int64_t* witness_divisor = nullptr);
// Distinct prime factors by trial division.
std::vector<std::int64_t> prime_factors(std::int64_t n);
} // namespace detail

} // namespace vb1

#endif

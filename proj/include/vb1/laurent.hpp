#ifndef VB1_LAURENT_HPP
#define VB1_LAURENT_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "vb1/character.hpp"
#include "vb1/field.hpp"
#include "vb1/lattice.hpp"

namespace vb1 {

// Graded lexicographic order on exponent vectors: total degree first, then
// lex. Fixed once so printing and matrix assembly are deterministic.
struct GradedLexLess {
    bool operator()(const Vec& a, const Vec& b) const;
};

// Multivariate Laurent polynomial: finite map from exponent vectors in Z^n
// to nonzero field coefficients. Canonical: zero coefficients are never
// stored, so equality is structural (given equal fields).
class LaurentPoly {
public:
    LaurentPoly(FieldDescriptor field, int rank);

    const FieldDescriptor& field() const { return field_; }
    int rank() const { return rank_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Vec, FieldElement, GradedLexLess>& terms() const { return terms_; }

    // Adds c * x^exps; drops the term if the total cancels.
    void add_term(const Vec& exps, const FieldElement& c);
    const FieldElement* coeff(const Vec& exps) const;

    static LaurentPoly monomial(const FieldDescriptor& f, const Vec& exps, const FieldElement& c);
    static LaurentPoly constant(const FieldDescriptor& f, int rank, const FieldElement& c);

    bool equals(const LaurentPoly& o) const;
    std::vector<Vec> support() const;

    // Re-parsable with the given variable names; graded-lex descending.
    std::string to_string(const std::vector<std::string>& vars) const;

private:
    FieldDescriptor field_;
    int rank_;
    std::map<Vec, FieldElement, GradedLexLess> terms_;
};

LaurentPoly add(const LaurentPoly& f, const LaurentPoly& g);
LaurentPoly sub(const LaurentPoly& f, const LaurentPoly& g);
LaurentPoly mul(const LaurentPoly& f, const LaurentPoly& g);
LaurentPoly neg(const LaurentPoly& f);
LaurentPoly scale(const FieldElement& c, const LaurentPoly& f);
// Multiplication by the unit monomial x^v: shifts every exponent by v.
LaurentPoly translate(const LaurentPoly& f, const Vec& v);

// Recursive-descent parser for
//   expression ::= ['+'|'-'] term (('+'|'-') term)*
//   term       ::= factor ('*' factor)*
//   factor     ::= integer ('/' integer)? | variable ('^' signed-integer)?
//                | '(' expression ')'
// Literals are mapped into the field (the quotient form via field division);
// whitespace is insignificant. Errors carry the offending position.
LaurentPoly parse_polynomial(const std::string& text, const FieldDescriptor& field,
                             const std::vector<std::string>& variables,
                             const Limits& lim = {});

// Default variable names: {"x","y"} for rank 2, {"x1",...,"xn"} otherwise.
std::vector<std::string> default_variables(int rank);

using Point2 = std::array<std::int64_t, 2>;

struct PolygonEdge {
    Point2 from;
    Point2 to;
    CharacterClass normal; // primitive; attains its minimum over the support on this edge
};

// Convex hull of the support of a rank-2 Laurent polynomial, with the
// primitive inner normal of each positive-dimensional face. A one-point
// hull has no edges; a segment carries the two opposite orthogonal normals.
struct NewtonPolygon {
    std::vector<Point2> support;
    std::vector<Point2> hull; // counterclockwise vertices
    std::vector<PolygonEdge> edges;
};

NewtonPolygon newton_polygon(const LaurentPoly& f);

} // namespace vb1

#endif

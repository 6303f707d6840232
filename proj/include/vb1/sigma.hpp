#ifndef VB1_SIGMA_HPP
#define VB1_SIGMA_HPP

#include <string>
#include <utility>
#include <vector>

#include "vb1/character.hpp"
#include "vb1/laurent.hpp"

namespace vb1 {

struct SigmaReport {
    std::string generator;
    std::string field;
    std::vector<CharacterClass> complement; // sorted
    std::vector<std::pair<CharacterClass, CharacterClass>> antipodal_pairs;
    bool two_tame = false;
    bool finitely_presented = false; // for the split group (kQ/(f)) x| Z^2
};

// Sigma complement of the cyclic module kQ/(f) for rank-2 Q: the classes
// whose minimum over the support of f is attained at >= 2 support points,
// i.e. the inner normals of the positive-dimensional Newton polygon faces.
// A unit (single monomial) generator presents the zero module: empty set.
std::vector<CharacterClass> sigma_complement_principal(const LaurentPoly& f);

// Antipodal-pair detection over the complement; the finite-presentation
// verdict for the split metabelian group equals 2-tameness.
SigmaReport is_two_tame(const LaurentPoly& f,
                        const std::vector<std::string>& vars = default_variables(2));

} // namespace vb1

#endif

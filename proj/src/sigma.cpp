#include "vb1/sigma.hpp"

#include <algorithm>
#include <set>

namespace vb1 {

std::vector<CharacterClass> sigma_complement_principal(const LaurentPoly& f) {
    if (f.is_zero())
        throw std::domain_error("sigma complement undefined: the zero generator presents "
                                "the full module, not a cyclic quotient");
    NewtonPolygon np = newton_polygon(f);
    std::set<CharacterClass> classes;
    for (const auto& e : np.edges) classes.insert(e.normal);
    return {classes.begin(), classes.end()};
}

SigmaReport is_two_tame(const LaurentPoly& f, const std::vector<std::string>& vars) {
    SigmaReport rep;
    rep.generator = f.to_string(vars);
    rep.field = f.field().to_string();
    rep.complement = sigma_complement_principal(f);
    std::set<CharacterClass> seen(rep.complement.begin(), rep.complement.end());
    for (const auto& chi : rep.complement) {
        CharacterClass anti = chi.antipode();
        if (seen.count(anti) && chi < anti) rep.antipodal_pairs.emplace_back(chi, anti);
    }
    rep.two_tame = rep.antipodal_pairs.empty();
    rep.finitely_presented = rep.two_tame;
    return rep;
}

} // namespace vb1

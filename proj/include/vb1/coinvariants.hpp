#ifndef VB1_COINVARIANTS_HPP
#define VB1_COINVARIANTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vb1/field.hpp"
#include "vb1/lattice.hpp"
#include "vb1/laurent.hpp"
#include "vb1/linalg.hpp"

namespace vb1 {

// Element of the finite group algebra k[Z^n / S], as a coefficient vector
// indexed by the coset table's representative order.
struct GroupAlgebraElement {
    std::vector<FieldElement> coeffs;
};

// Image of the projection k[Z^n] -> k[Z^n / S]; the kernel is exactly the
// augmentation ideal of S, which is what makes the membership tests below
// exact.
GroupAlgebraElement project(const LaurentPoly& f, const CosetTable& table);

// Row space of all coset translates of the projected generators, with its
// canonical reduced-row-echelon basis.
struct IdealImage {
    FieldDescriptor field = FieldDescriptor::rationals();
    std::uint64_t index = 0;
    std::size_t rank = 0;
    std::vector<std::vector<FieldElement>> basis; // RREF rows over the coset basis
    std::vector<std::size_t> pivot_cols;
};

IdealImage ideal_image(const std::vector<LaurentPoly>& gens, const Lattice& s,
                       const FieldDescriptor& k, const Limits& lim = {});

// Rank of the ideal image without materializing the RREF basis (the scans
// only need the corank).
std::uint64_t ideal_rank(const std::vector<LaurentPoly>& gens, const Lattice& s,
                         const FieldDescriptor& k, const Limits& lim = {});

struct DimReport {
    std::string field;
    std::vector<std::string> ideal;
    std::string subgroup;
    std::uint64_t index = 0;
    std::uint64_t dimension = 0;
    std::optional<std::uint64_t> betti;
    std::string engine;
    double millis = 0.0;
};

// dim_k of k[Z^n]/(gens + augmentation ideal of S) = index - rank.
DimReport coinvariant_dim(const std::vector<LaurentPoly>& gens, const Lattice& s,
                          const FieldDescriptor& k, const Limits& lim = {},
                          const std::string& subgroup_desc = "");

// First Betti number of the split extension (k[Z^n]/(gens)) x| Z^n restricted
// to S: coinvariant dimension plus the rank n.
DimReport betti_split(const std::vector<LaurentPoly>& gens, const Lattice& s,
                      const FieldDescriptor& k, const Limits& lim = {},
                      const std::string& subgroup_desc = "");

// Whether f lies in the ideal (gens) + aug(S), i.e. in J for J = (gens, S-1).
bool member_of_Jm(const LaurentPoly& f, const std::vector<LaurentPoly>& gens,
                  const Lattice& s, const FieldDescriptor& k, const Limits& lim = {});

// Whether (gens, Q^m - 1) equals (gens, Q^{m r} - 1): the containment >= is
// automatic, so this tests x_i^m - 1 against the larger-index ideal for each
// coordinate.
bool ideal_equal_Jm_Jmr(const std::vector<LaurentPoly>& gens, std::int64_t m,
                        std::int64_t r, const FieldDescriptor& k, int rank_n,
                        const Limits& lim = {});

} // namespace vb1

#endif

#ifndef VB1_LATTICE_HPP
#define VB1_LATTICE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "vb1/limits.hpp"

namespace vb1 {

using Vec = std::vector<std::int64_t>;
// Integer matrix, row-major: Mat[i][j] is row i, column j.
using Mat = std::vector<Vec>;

// A finite-index subgroup of Z^n, stored as the unique column-style Hermite
// normal form of any generating matrix: lower triangular, positive diagonal,
// off-diagonal entries of each row reduced into [0, diagonal). Two Lattice
// values are equal iff their matrices are identical.
class Lattice {
public:
    // Columns of M generate the subgroup. Throws invalid_input if singular.
    static Lattice from_columns(const Mat& m, const Limits& lim = {});

    int rank() const { return n_; }
    const Mat& basis() const { return basis_; }
    std::uint64_t index() const { return index_; }

    bool contains(const Vec& v) const;
    // True iff every basis vector of other lies in *this.
    bool contains(const Lattice& other) const;

    bool operator==(const Lattice& o) const { return basis_ == o.basis_; }
    bool operator!=(const Lattice& o) const { return !(*this == o); }

    // "[[1,0],[3,6]]"-style row-major print of the HNF basis.
    std::string to_string() const;

private:
    Lattice() = default;
    int n_ = 0;
    Mat basis_;
    std::uint64_t index_ = 0;
};

// The canonical HNF lattice spanned by the columns of M.
Lattice hnf(const Mat& m, const Limits& lim = {});

// m Z^n: diagonal m, index m^n.
Lattice congruence_lattice(std::int64_t m, int n, const Limits& lim = {});

// Kernel of Z^2 -> F_{p^r}^* sending the first generator to the canonical
// multiplicative generator w and the second to w + 1; spanned by
// {(p^r - 1, 0), (-L, 1)} with L = dlog_w(w + 1). Index p^r - 1. Needs r >= 2.
Lattice kernel_lattice_prop53(std::int64_t p, int r, const Limits& lim = {});

// Enumerated transversal of Z^n / S. Representatives live in the box
// prod [0, d_i) over the HNF diagonal, listed with coordinate 0 varying
// fastest (index = c_0 + d_0*(c_1 + d_1*(...))).
class CosetTable {
public:
    explicit CosetTable(Lattice lattice, const Limits& lim = {});

    const Lattice& lattice() const { return lattice_; }
    std::uint64_t size() const { return static_cast<std::uint64_t>(reps_.size()); }
    const std::vector<Vec>& representatives() const { return reps_; }
    const Vec& representative(std::uint64_t i) const { return reps_[i]; }

    // Index of the coset of v.
    std::uint64_t reduce(const Vec& v) const;
    // Index of the coset of representative(i) + representative(j).
    std::uint64_t add(std::uint64_t i, std::uint64_t j) const;

private:
    Lattice lattice_;
    std::vector<Vec> reps_;
    std::vector<std::int64_t> diag_;
};

CosetTable cosets(const Lattice& s, const Limits& lim = {});

} // namespace vb1

#endif

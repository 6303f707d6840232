#ifndef VB1_LINALG_HPP
#define VB1_LINALG_HPP

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "vb1/field.hpp"

namespace vb1 {

// Reduced row echelon basis over an arbitrary exact field, maintained
// incrementally. Canonical: rows are monic at their pivot, pivot columns are
// cleared everywhere else, rows sorted by pivot column.
class ExactRref {
public:
    ExactRref(FieldDescriptor field, std::size_t cols);

    // Reduces the row against the basis and absorbs any nonzero residual.
    // Returns true if the rank grew.
    bool insert(std::vector<FieldElement> row);
    bool reduces_to_zero(std::vector<FieldElement> row) const;

    std::size_t rank() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    const std::vector<std::vector<FieldElement>>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivot_cols() const { return pivots_; }
    const FieldDescriptor& field() const { return field_; }

private:
    void eliminate(std::vector<FieldElement>& row) const;

    FieldDescriptor field_;
    std::size_t cols_;
    std::vector<std::vector<FieldElement>> rows_;
    std::vector<std::size_t> pivots_;
};

// Dense elimination over F_p in double precision with lazy reduction.
// Entries are nonnegative integers below p except transiently during
// accumulation; the panel scheme keeps every intermediate below 2^53, so all
// arithmetic is exact. Built for the group-algebra matrices, where the row
// count makes exact-rational or per-element-mod code paths too slow.
class FpEchelon {
public:
    // Consumes `rows`; each row has length `cols`, entries in [0, p).
    FpEchelon(std::int64_t p, std::size_t cols);

    // Eliminates a batch of rows into the held echelon basis.
    void absorb(std::vector<std::vector<double>> rows);
    // Back-substitutes to reduced row echelon form.
    void to_rref();

    bool reduces_to_zero(std::vector<double> row) const;

    std::int64_t p() const { return p_; }
    std::size_t rank() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    const std::vector<std::vector<double>>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivot_cols() const { return pivots_; }

private:
    std::int64_t p_;
    std::size_t cols_;
    std::vector<std::vector<double>> rows_; // echelon, pivot scaled to 1, fully reduced
    std::vector<std::size_t> pivots_;
};

// Rank by fraction-free (Bareiss) elimination; the integer route used to
// cross-check rational ranks.
std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> m);

} // namespace vb1

#endif

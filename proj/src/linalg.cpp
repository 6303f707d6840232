#include "vb1/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "vb1/errors.hpp"

namespace vb1 {

// ---------------------------------------------------------------------------
// ExactRref

ExactRref::ExactRref(FieldDescriptor field, std::size_t cols)
    : field_(std::move(field)), cols_(cols) {}

void ExactRref::eliminate(std::vector<FieldElement>& row) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const FieldElement& c = row[pivots_[k]];
        if (field_.is_zero(c)) continue;
        FieldElement f = c; // basis rows are monic at their pivot
        const auto& b = rows_[k];
        for (std::size_t j = pivots_[k]; j < cols_; ++j)
            if (!field_.is_zero(b[j]))
                row[j] = field_.sub(row[j], field_.mul(f, b[j]));
    }
}

bool ExactRref::insert(std::vector<FieldElement> row) {
    if (row.size() != cols_) throw invalid_input("row length mismatch in row reduction");
    eliminate(row);
    std::size_t piv = cols_;
    for (std::size_t j = 0; j < cols_; ++j)
        if (!field_.is_zero(row[j])) { piv = j; break; }
    if (piv == cols_) return false;
    FieldElement inv = field_.inv(row[piv]);
    for (std::size_t j = piv; j < cols_; ++j)
        if (!field_.is_zero(row[j])) row[j] = field_.mul(row[j], inv);
    // clear the new pivot column in the existing rows
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        FieldElement c = rows_[k][piv];
        if (field_.is_zero(c)) continue;
        auto& b = rows_[k];
        for (std::size_t j = piv; j < cols_; ++j)
            if (!field_.is_zero(row[j]))
                b[j] = field_.sub(b[j], field_.mul(c, row[j]));
    }
    auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), piv);
    std::size_t at = static_cast<std::size_t>(pos - pivots_.begin());
    pivots_.insert(pos, piv);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(at), std::move(row));
    return true;
}

bool ExactRref::reduces_to_zero(std::vector<FieldElement> row) const {
    if (row.size() != cols_) throw invalid_input("row length mismatch in row reduction");
    eliminate(row);
    for (const auto& c : row)
        if (!field_.is_zero(c)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// FpEchelon

namespace {

constexpr std::size_t kPanel = 64;

std::int64_t inv_mod_i64(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, newt = 1, r = p, newr = a % p;
    if (newr < 0) newr += p;
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt;
        t = newt; newt = tmp;
        tmp = r - q * newr;
        r = newr; newr = tmp;
    }
    if (r != 1) throw invalid_input("non-invertible pivot mod " + std::to_string(p));
    return t < 0 ? t + p : t;
}

} // namespace

FpEchelon::FpEchelon(std::int64_t p, std::size_t cols) : p_(p), cols_(cols) {
    // growth bound: a row accumulates at most ~2*cols axpys of magnitude < p^2
    // before reduction; everything must stay exactly representable in double
    double bound = 2.0 * static_cast<double>(cols + kPanel + 2) *
                   static_cast<double>(p) * static_cast<double>(p);
    if (bound >= 9007199254740992.0 /* 2^53 */)
        throw resource_limit("prime " + std::to_string(p) +
                             " too large for the dense F_p elimination at " +
                             std::to_string(cols) + " columns");
}

void FpEchelon::absorb(std::vector<std::vector<double>> fresh) {
    const double p = static_cast<double>(p_);
    std::vector<std::vector<double>> a = std::move(rows_);
    a.reserve(a.size() + fresh.size());
    for (auto& r : fresh) a.push_back(std::move(r));
    rows_.clear();
    pivots_.clear();

    const std::size_t R = a.size();
    const std::size_t C = cols_;
    std::size_t done = 0; // rows [0, done) are finished pivot rows
    std::size_t col = 0;
    std::vector<double> mult;
    std::vector<std::size_t> pcol_all;

    while (col < C && done < R) {
        const std::size_t pb = std::min(kPanel, C - col);
        const std::size_t act0 = done;
        std::size_t npiv = 0;
        std::vector<std::size_t> pcol;
        mult.assign((R - act0) * kPanel, 0.0);

        // factor the panel slice, recording multipliers
        for (std::size_t c = col; c < col + pb; ++c) {
            std::size_t pi = R;
            for (std::size_t i = act0 + npiv; i < R; ++i)
                if (std::fmod(a[i][c], p) != 0.0) { pi = i; break; }
            if (pi == R) continue;
            std::size_t prow = act0 + npiv;
            if (pi != prow) {
                a[pi].swap(a[prow]);
                for (std::size_t k = 0; k < kPanel; ++k)
                    std::swap(mult[(pi - act0) * kPanel + k], mult[(prow - act0) * kPanel + k]);
            }
            for (std::size_t j = c; j < col + pb; ++j) a[prow][j] = std::fmod(a[prow][j], p);
            const double pinv =
                static_cast<double>(inv_mod_i64(static_cast<std::int64_t>(a[prow][c]), p_));
            for (std::size_t i = prow + 1; i < R; ++i) {
                double m = std::fmod(std::fmod(a[i][c], p) * pinv, p);
                mult[(i - act0) * kPanel + npiv] = m;
                if (m != 0.0) {
                    const double f = p - m;
                    const double* __restrict__ src = a[prow].data();
                    double* __restrict__ dst = a[i].data();
                    for (std::size_t j = c; j < col + pb; ++j) dst[j] += f * src[j];
                }
                a[i][c] = 0.0;
            }
            pcol.push_back(c);
            ++npiv;
        }

        const std::size_t tr0 = col + pb;
        if (tr0 < C && npiv > 0) {
            // finalize the panel pivot rows first (triangular update), keeping
            // them reduced so the bulk pass below stays bounded
            for (std::size_t k = 0; k < npiv; ++k) {
                double* __restrict__ rk = a[act0 + k].data();
                for (std::size_t j = 0; j < k; ++j) {
                    const double m = mult[k * kPanel + j];
                    if (m == 0.0) continue;
                    const double f = p - m;
                    const double* __restrict__ pj = a[act0 + j].data();
                    for (std::size_t t = tr0; t < C; ++t) rk[t] += f * pj[t];
                }
                for (std::size_t t = tr0; t < C; ++t) rk[t] = std::fmod(rk[t], p);
            }
            for (std::size_t i = act0 + npiv; i < R; ++i) {
                double* __restrict__ ri = a[i].data();
                for (std::size_t k = 0; k < npiv; ++k) {
                    const double m = mult[(i - act0) * kPanel + k];
                    if (m == 0.0) continue;
                    const double f = p - m;
                    const double* __restrict__ pk = a[act0 + k].data();
                    for (std::size_t t = tr0; t < C; ++t) ri[t] += f * pk[t];
                }
            }
        }

        // scale pivot rows to unit pivot and canonical range; entries left of
        // the pivot are multiples of p and fmod to an exact zero
        for (std::size_t k = 0; k < npiv; ++k) {
            double* row = a[act0 + k].data();
            const double pinv =
                static_cast<double>(inv_mod_i64(static_cast<std::int64_t>(row[pcol[k]]), p_));
            for (std::size_t j = 0; j < pcol[k]; ++j) row[j] = std::fmod(row[j], p);
            for (std::size_t j = pcol[k]; j < C; ++j)
                row[j] = std::fmod(std::fmod(row[j], p) * pinv, p);
        }
        for (std::size_t c : pcol) pcol_all.push_back(c);
        done += npiv;
        col += pb;
    }

    a.resize(done);
    rows_ = std::move(a);
    pivots_ = std::move(pcol_all);
}

void FpEchelon::to_rref() {
    const double p = static_cast<double>(p_);
    for (std::size_t k = rows_.size(); k-- > 0;) {
        const double* __restrict__ pk = rows_[k].data();
        const std::size_t pc = pivots_[k];
        for (std::size_t j = 0; j < k; ++j) {
            double* __restrict__ rj = rows_[j].data();
            const double m = std::fmod(rj[pc], p);
            if (m == 0.0) continue;
            const double f = p - m;
            for (std::size_t t = pc; t < cols_; ++t) rj[t] += f * pk[t];
            rj[pc] = 0.0;
        }
    }
    for (auto& r : rows_)
        for (auto& v : r) v = std::fmod(v, p);
}

bool FpEchelon::reduces_to_zero(std::vector<double> row) const {
    const double p = static_cast<double>(p_);
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const double m = std::fmod(row[pivots_[k]], p);
        if (m == 0.0) continue;
        const double f = p - m;
        const double* __restrict__ pk = rows_[k].data();
        for (std::size_t t = pivots_[k]; t < cols_; ++t) row[t] += f * pk[t];
    }
    for (double v : row)
        if (std::fmod(v, p) != 0.0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Bareiss

std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> m) {
    if (m.empty()) return 0;
    const std::size_t R = m.size(), C = m[0].size();
    std::size_t rank = 0;
    mpz_class prev = 1;
    for (std::size_t col = 0; col < C && rank < R; ++col) {
        std::size_t piv = R;
        for (std::size_t i = rank; i < R; ++i)
            if (m[i][col] != 0) { piv = i; break; }
        if (piv == R) continue;
        if (piv != rank) m[piv].swap(m[rank]);
        for (std::size_t i = rank + 1; i < R; ++i) {
            for (std::size_t j = col + 1; j < C; ++j) {
                m[i][j] = m[i][j] * m[rank][col] - m[i][col] * m[rank][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            m[i][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

} // namespace vb1

#include "vb1/lattice.hpp"

#include <algorithm>
#include <cstdlib>

#include "vb1/errors.hpp"
#include "vb1/field.hpp"

namespace vb1 {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw invalid_input("integer overflow in lattice arithmetic");
    return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw invalid_input("integer overflow in lattice arithmetic");
    return r;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b, rem = a % b;
    return (rem != 0 && (rem < 0) != (b < 0)) ? q - 1 : q;
}

// col_j -= q * col_i, in place
void col_axpy(Mat& m, int j, int i, std::int64_t q) {
    if (q == 0) return;
    for (auto& row : m)
        row[static_cast<std::size_t>(j)] =
            checked_sub(row[static_cast<std::size_t>(j)], checked_mul(q, row[static_cast<std::size_t>(i)]));
}

} // namespace

Lattice Lattice::from_columns(const Mat& m, const Limits& lim) {
    int n = static_cast<int>(m.size());
    if (n == 0) throw invalid_input("empty matrix");
    if (n > lim.max_rank)
        throw invalid_input("rank " + std::to_string(n) + " exceeds the cap of " +
                            std::to_string(lim.max_rank));
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != n)
            throw invalid_input("lattice matrix must be square");

    Mat b = m;
    // column-style HNF by integer column operations
    for (int i = 0; i < n; ++i) {
        // gcd the entries of row i across columns i..n-1 into column i
        while (true) {
            int piv = -1;
            for (int j = i; j < n; ++j)
                if (b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0 &&
                    (piv == -1 ||
                     std::llabs(b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) <
                         std::llabs(b[static_cast<std::size_t>(i)][static_cast<std::size_t>(piv)])))
                    piv = j;
            if (piv == -1)
                throw invalid_input("singular matrix: columns do not span a finite-index subgroup");
            if (piv != i)
                for (auto& row : b) std::swap(row[static_cast<std::size_t>(i)], row[static_cast<std::size_t>(piv)]);
            bool done = true;
            for (int j = i + 1; j < n; ++j) {
                std::int64_t e = b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                if (e == 0) continue;
                col_axpy(b, j, i, e / b[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)]);
                if (b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0) done = false;
            }
            if (done) break;
        }
        if (b[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] < 0)
            for (auto& row : b) row[static_cast<std::size_t>(i)] = -row[static_cast<std::size_t>(i)];
    }
    // reduce off-diagonal entries of each row into [0, diagonal)
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) {
            std::int64_t q = floor_div(b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                                       b[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)]);
            col_axpy(b, j, i, q);
        }

    Lattice out;
    out.n_ = n;
    out.basis_ = std::move(b);
    std::uint64_t idx = 1;
    for (int i = 0; i < n; ++i)
        idx *= static_cast<std::uint64_t>(out.basis_[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)]);
    out.index_ = idx;
    return out;
}

bool Lattice::contains(const Vec& v) const {
    Vec w = v;
    for (int j = 0; j < n_; ++j) {
        std::int64_t d = basis_[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)];
        if (w[static_cast<std::size_t>(j)] % d != 0) return false;
        std::int64_t q = w[static_cast<std::size_t>(j)] / d;
        for (int i = j; i < n_; ++i)
            w[static_cast<std::size_t>(i)] = checked_sub(
                w[static_cast<std::size_t>(i)],
                checked_mul(q, basis_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
    }
    return true;
}

bool Lattice::contains(const Lattice& other) const {
    if (other.n_ != n_) return false;
    for (int j = 0; j < n_; ++j) {
        Vec col(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i)
            col[static_cast<std::size_t>(i)] = other.basis_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (!contains(col)) return false;
    }
    return true;
}

std::string Lattice::to_string() const {
    std::string s = "[";
    for (int i = 0; i < n_; ++i) {
        s += i ? ",[" : "[";
        for (int j = 0; j < n_; ++j) {
            if (j) s += ",";
            s += std::to_string(basis_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        }
        s += "]";
    }
    return s + "]";
}

Lattice hnf(const Mat& m, const Limits& lim) { return Lattice::from_columns(m, lim); }

Lattice congruence_lattice(std::int64_t m, int n, const Limits& lim) {
    if (m <= 0) throw invalid_input("congruence modulus must be positive, got " + std::to_string(m));
    Mat b(static_cast<std::size_t>(n), Vec(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) b[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = m;
    return Lattice::from_columns(b, lim);
}

Lattice kernel_lattice_prop53(std::int64_t p, int r, const Limits& lim) {
    if (r < 2) throw invalid_input("kernel lattice needs extension degree r >= 2, got " + std::to_string(r));
    FieldDescriptor F = FieldDescriptor::extension(p, r);
    FieldElement w = multiplicative_generator(F);
    FieldElement w1 = F.add(w, F.one());
    std::int64_t L = discrete_log(F, w, w1);
    std::int64_t n = static_cast<std::int64_t>(F.order()) - 1;
    Mat b = {{n, -L}, {0, 1}};
    return Lattice::from_columns(b, lim);
}

CosetTable::CosetTable(Lattice lattice, const Limits& lim) : lattice_(std::move(lattice)) {
    if (lattice_.index() > lim.max_cosets)
        throw resource_limit("subgroup index " + std::to_string(lattice_.index()) +
                             " exceeds the coset cap of " + std::to_string(lim.max_cosets));
    int n = lattice_.rank();
    diag_.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        diag_[static_cast<std::size_t>(i)] = lattice_.basis()[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
    reps_.reserve(lattice_.index());
    Vec c(static_cast<std::size_t>(n), 0);
    while (true) {
        reps_.push_back(c);
        int i = 0;
        while (i < n && ++c[static_cast<std::size_t>(i)] == diag_[static_cast<std::size_t>(i)]) {
            c[static_cast<std::size_t>(i)] = 0;
            ++i;
        }
        if (i == n) break;
    }
}

std::uint64_t CosetTable::reduce(const Vec& v) const {
    int n = lattice_.rank();
    if (static_cast<int>(v.size()) != n)
        throw invalid_input("vector length " + std::to_string(v.size()) +
                            " does not match lattice rank " + std::to_string(n));
    Vec w = v;
    const Mat& b = lattice_.basis();
    std::uint64_t idx = 0, stride = 1;
    for (int j = 0; j < n; ++j) {
        std::int64_t d = diag_[static_cast<std::size_t>(j)];
        std::int64_t q = floor_div(w[static_cast<std::size_t>(j)], d);
        for (int i = j; i < n; ++i)
            w[static_cast<std::size_t>(i)] = checked_sub(
                w[static_cast<std::size_t>(i)],
                checked_mul(q, b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
        idx += static_cast<std::uint64_t>(w[static_cast<std::size_t>(j)]) * stride;
        stride *= static_cast<std::uint64_t>(d);
    }
    return idx;
}

std::uint64_t CosetTable::add(std::uint64_t i, std::uint64_t j) const {
    const Vec& a = reps_[i];
    const Vec& b = reps_[j];
    Vec s(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) s[k] = a[k] + b[k];
    return reduce(s);
}

CosetTable cosets(const Lattice& s, const Limits& lim) { return CosetTable(s, lim); }

} // namespace vb1

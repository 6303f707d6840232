#include "vb1/coinvariants.hpp"

#include <chrono>

#include "vb1/errors.hpp"

namespace vb1 {

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

void check_inputs(const std::vector<LaurentPoly>& gens, const Lattice& s,
                  const FieldDescriptor& k) {
    for (const auto& g : gens) {
        if (g.field() != k)
            throw invalid_input("generator field " + g.field().to_string() +
                                " does not match the requested field " + k.to_string());
        if (g.rank() != s.rank())
            throw invalid_input("generator rank " + std::to_string(g.rank()) +
                                " does not match lattice rank " + std::to_string(s.rank()));
    }
}

// nonzero projected coefficients of g, as (coset index, coefficient)
std::vector<std::pair<std::uint64_t, FieldElement>> project_sparse(const LaurentPoly& g,
                                                                   const CosetTable& table) {
    const FieldDescriptor& F = g.field();
    std::map<std::uint64_t, FieldElement> acc;
    for (const auto& [e, c] : g.terms()) {
        std::uint64_t idx = table.reduce(e);
        auto it = acc.find(idx);
        if (it == acc.end()) acc.emplace(idx, c);
        else it->second = F.add(it->second, c);
    }
    std::vector<std::pair<std::uint64_t, FieldElement>> out;
    for (auto& [idx, c] : acc)
        if (!F.is_zero(c)) out.emplace_back(idx, c);
    return out;
}

bool use_fp_path(const FieldDescriptor& k, std::uint64_t cols) {
    if (k.kind() != FieldKind::prime) return false;
    double p = static_cast<double>(k.characteristic());
    return 2.0 * static_cast<double>(cols + 66) * p * p < 9007199254740992.0;
}

void check_dense(std::uint64_t rows, std::uint64_t cols, const Limits& lim) {
    if (rows * cols > lim.max_dense_cells)
        throw resource_limit("dense matrix of " + std::to_string(rows) + " x " +
                             std::to_string(cols) + " cells exceeds the cap of " +
                             std::to_string(lim.max_dense_cells));
}

// Shared elimination of all coset translates of the projected generators.
struct Engine {
    std::optional<FpEchelon> fp;
    std::optional<ExactRref> exact;

    std::size_t rank() const { return fp ? fp->rank() : exact->rank(); }

    bool contains(const GroupAlgebraElement& v) const {
        if (fp) {
            std::vector<double> row(v.coeffs.size());
            for (std::size_t i = 0; i < row.size(); ++i)
                row[i] = static_cast<double>(v.coeffs[i].vec[0]);
            return fp->reduces_to_zero(std::move(row));
        }
        return exact->reduces_to_zero(v.coeffs);
    }
};

Engine eliminate_translates(const std::vector<LaurentPoly>& gens, const CosetTable& table,
                            const FieldDescriptor& k, const Limits& lim) {
    const std::uint64_t n_cosets = table.size();
    Engine eng;
    const bool fp = use_fp_path(k, n_cosets);
    if (fp) eng.fp.emplace(k.characteristic(), n_cosets);
    else eng.exact.emplace(k, n_cosets);

    // for the rational self-check: the raw translate rows, denominators cleared
    std::vector<std::vector<mpz_class>> raw_rows;
    const bool selfcheck = k.kind() == FieldKind::rationals;

    for (const auto& g : gens) {
        auto proj = project_sparse(g, table);
        if (proj.empty()) continue;
        check_dense(n_cosets, n_cosets, lim);
        // coset-translation permutations, one per projected term
        std::vector<std::vector<std::uint64_t>> perm(proj.size());
        for (std::size_t t = 0; t < proj.size(); ++t) {
            perm[t].resize(n_cosets);
            for (std::uint64_t v = 0; v < n_cosets; ++v)
                perm[t][v] = table.add(proj[t].first, v);
        }
        if (fp) {
            std::vector<std::vector<double>> rows(n_cosets);
            for (std::uint64_t v = 0; v < n_cosets; ++v) {
                rows[v].assign(n_cosets, 0.0);
                for (std::size_t t = 0; t < proj.size(); ++t)
                    rows[v][perm[t][v]] = static_cast<double>(proj[t].second.vec[0]);
            }
            eng.fp->absorb(std::move(rows));
        } else {
            for (std::uint64_t v = 0; v < n_cosets; ++v) {
                std::vector<FieldElement> row(n_cosets, k.zero());
                for (std::size_t t = 0; t < proj.size(); ++t) row[perm[t][v]] = proj[t].second;
                if (selfcheck) {
                    mpz_class den = 1;
                    for (const auto& c : row) den = lcm(den, c.rat.get_den());
                    std::vector<mpz_class> raw(n_cosets);
                    for (std::uint64_t j = 0; j < n_cosets; ++j) {
                        mpq_class v2 = row[j].rat * den;
                        raw[j] = v2.get_num();
                    }
                    raw_rows.push_back(std::move(raw));
                }
                eng.exact->insert(std::move(row));
            }
        }
    }
    if (selfcheck && !raw_rows.empty()) {
        std::size_t ffr = bareiss_rank(std::move(raw_rows));
        if (ffr != eng.rank())
            throw crosscheck_mismatch("rational rank disagreement: row reduction found " +
                                      std::to_string(eng.rank()) +
                                      ", fraction-free elimination found " + std::to_string(ffr));
    }
    return eng;
}

} // namespace

GroupAlgebraElement project(const LaurentPoly& f, const CosetTable& table) {
    if (f.rank() != table.lattice().rank())
        throw invalid_input("polynomial rank " + std::to_string(f.rank()) +
                            " does not match lattice rank " +
                            std::to_string(table.lattice().rank()));
    const FieldDescriptor& F = f.field();
    GroupAlgebraElement out;
    out.coeffs.assign(table.size(), F.zero());
    for (const auto& [e, c] : f.terms()) {
        std::uint64_t idx = table.reduce(e);
        out.coeffs[idx] = F.add(out.coeffs[idx], c);
    }
    return out;
}

IdealImage ideal_image(const std::vector<LaurentPoly>& gens, const Lattice& s,
                       const FieldDescriptor& k, const Limits& lim) {
    check_inputs(gens, s, k);
    CosetTable table(s, lim);
    Engine eng = eliminate_translates(gens, table, k, lim);

    IdealImage out;
    out.field = k;
    out.index = table.size();
    out.rank = eng.rank();
    if (eng.fp) {
        eng.fp->to_rref();
        out.pivot_cols = eng.fp->pivot_cols();
        out.basis.reserve(out.rank);
        for (const auto& r : eng.fp->rows()) {
            std::vector<FieldElement> row(r.size());
            for (std::size_t j = 0; j < r.size(); ++j)
                row[j] = k.from_integer(static_cast<std::int64_t>(r[j]));
            out.basis.push_back(std::move(row));
        }
    } else {
        out.pivot_cols = eng.exact->pivot_cols();
        out.basis = eng.exact->rows();
    }
    return out;
}

std::uint64_t ideal_rank(const std::vector<LaurentPoly>& gens, const Lattice& s,
                         const FieldDescriptor& k, const Limits& lim) {
    check_inputs(gens, s, k);
    CosetTable table(s, lim);
    return eliminate_translates(gens, table, k, lim).rank();
}

DimReport coinvariant_dim(const std::vector<LaurentPoly>& gens, const Lattice& s,
                          const FieldDescriptor& k, const Limits& lim,
                          const std::string& subgroup_desc) {
    auto t0 = std::chrono::steady_clock::now();
    std::uint64_t rank = ideal_rank(gens, s, k, lim);
    DimReport rep;
    rep.field = k.to_string();
    auto vars = default_variables(s.rank());
    for (const auto& g : gens) rep.ideal.push_back(g.to_string(vars));
    rep.subgroup = subgroup_desc.empty() ? s.to_string() : subgroup_desc;
    rep.index = s.index();
    rep.dimension = s.index() - rank;
    rep.engine = "coinvariants";
    rep.millis = elapsed_ms(t0);
    return rep;
}

DimReport betti_split(const std::vector<LaurentPoly>& gens, const Lattice& s,
                      const FieldDescriptor& k, const Limits& lim,
                      const std::string& subgroup_desc) {
    DimReport rep = coinvariant_dim(gens, s, k, lim, subgroup_desc);
    rep.betti = rep.dimension + static_cast<std::uint64_t>(s.rank());
    return rep;
}

bool member_of_Jm(const LaurentPoly& f, const std::vector<LaurentPoly>& gens,
                  const Lattice& s, const FieldDescriptor& k, const Limits& lim) {
    check_inputs(gens, s, k);
    if (f.field() != k || f.rank() != s.rank())
        throw invalid_input("membership candidate does not match the field or rank");
    CosetTable table(s, lim);
    Engine eng = eliminate_translates(gens, table, k, lim);
    return eng.contains(project(f, table));
}

bool ideal_equal_Jm_Jmr(const std::vector<LaurentPoly>& gens, std::int64_t m,
                        std::int64_t r, const FieldDescriptor& k, int rank_n,
                        const Limits& lim) {
    if (m < 1 || r < 1) throw invalid_input("ideal comparison needs m, r >= 1");
    if (r == 1) return true;
    Lattice s = congruence_lattice(m * r, rank_n, lim);
    CosetTable table(s, lim);
    Engine eng = eliminate_translates(gens, table, k, lim);
    for (int i = 0; i < rank_n; ++i) {
        // x_i^m - 1
        LaurentPoly f(k, rank_n);
        Vec e(static_cast<std::size_t>(rank_n), 0);
        e[static_cast<std::size_t>(i)] = m;
        f.add_term(e, k.one());
        f.add_term(Vec(static_cast<std::size_t>(rank_n), 0), k.neg(k.one()));
        if (!eng.contains(project(f, table))) return false;
    }
    return true;
}

} // namespace vb1

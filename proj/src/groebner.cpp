#include "vb1/groebner.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>

#include "vb1/errors.hpp"

namespace vb1 {

namespace {

std::int64_t tot_deg(const Vec& a, std::size_t lo, std::size_t hi) {
    std::int64_t d = 0;
    for (std::size_t i = lo; i < hi; ++i) d += a[i];
    return d;
}

// a < b in grevlex restricted to [lo, hi)
bool grevlex_less(const Vec& a, const Vec& b, std::size_t lo, std::size_t hi) {
    std::int64_t da = tot_deg(a, lo, hi), db = tot_deg(b, lo, hi);
    if (da != db) return da < db;
    for (std::size_t i = hi; i-- > lo;) {
        if (a[i] != b[i]) return a[i] > b[i]; // larger trailing exponent is smaller
    }
    return false;
}

bool lex_less(const Vec& a, const Vec& b, std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

} // namespace

bool MonomialOrder::less(const Vec& a, const Vec& b) const {
    const std::size_t n = a.size();
    switch (kind_) {
        case Kind::grevlex: return grevlex_less(a, b, 0, n);
        case Kind::lex: return lex_less(a, b, 0, n);
        case Kind::elimination: {
            std::int64_t da = tot_deg(a, split_, n), db = tot_deg(b, split_, n);
            if (da != db) return da < db;
            if (grevlex_less(a, b, split_, n)) return true;
            if (grevlex_less(b, a, split_, n)) return false;
            return grevlex_less(a, b, 0, split_);
        }
    }
    return false;
}

std::string MonomialOrder::to_string() const {
    switch (kind_) {
        case Kind::grevlex: return "grevlex";
        case Kind::lex: return "lex";
        case Kind::elimination: return "elimination(" + std::to_string(split_) + ")";
    }
    return "?";
}

GBPoly gb_normalize(std::vector<GBTerm> terms, const MonomialOrder& ord,
                    const FieldDescriptor& F) {
    std::sort(terms.begin(), terms.end(),
              [&](const GBTerm& x, const GBTerm& y) { return ord.less(y.exps, x.exps); });
    GBPoly out;
    for (auto& t : terms) {
        if (!out.terms.empty() && out.terms.back().exps == t.exps) {
            out.terms.back().coeff = F.add(out.terms.back().coeff, t.coeff);
            if (F.is_zero(out.terms.back().coeff)) out.terms.pop_back();
        } else if (!F.is_zero(t.coeff)) {
            out.terms.push_back(std::move(t));
        }
    }
    return out;
}

GBPoly gb_from_laurent(const LaurentPoly& f, const MonomialOrder& ord, std::size_t nvars) {
    std::vector<GBTerm> terms;
    for (const auto& [e, c] : f.terms()) {
        Vec padded(nvars, 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 0)
                throw invalid_input("negative exponent in an ordinary polynomial; "
                                    "clear Laurent denominators first");
            padded[i] = e[i];
        }
        terms.push_back({std::move(padded), c});
    }
    return gb_normalize(std::move(terms), ord, f.field());
}

std::string GBPoly::to_string(const std::vector<std::string>& vars,
                              const FieldDescriptor& F) const {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& t : terms) {
        std::string cs = F.to_string(t.coeff);
        bool negative = !cs.empty() && cs[0] == '-';
        if (out.empty()) {
            if (negative) { out += "-"; cs = cs.substr(1); }
        } else {
            out += negative ? " - " : " + ";
            if (negative) cs = cs.substr(1);
        }
        bool any_var = std::any_of(t.exps.begin(), t.exps.end(),
                                   [](std::int64_t k) { return k != 0; });
        bool plain = cs.find_first_of("/^*+u") == std::string::npos;
        if (!any_var) {
            out += plain ? cs : "(" + cs + ")";
            continue;
        }
        if (cs != "1") out += (plain ? cs : "(" + cs + ")") + "*";
        bool first = true;
        for (std::size_t i = 0; i < t.exps.size(); ++i) {
            if (t.exps[i] == 0) continue;
            if (!first) out += "*";
            first = false;
            out += vars[i];
            if (t.exps[i] != 1) out += "^" + std::to_string(t.exps[i]);
        }
    }
    return out;
}

namespace {

bool divides(const Vec& a, const Vec& b) { // x^a | x^b
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Vec exp_lcm(const Vec& a, const Vec& b) {
    Vec u(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) u[i] = std::max(a[i], b[i]);
    return u;
}

// f - c * x^shift * g
GBPoly axpy(const GBPoly& f, const FieldElement& c, const Vec& shift, const GBPoly& g,
            const MonomialOrder& ord, const FieldDescriptor& F) {
    std::vector<GBTerm> merged;
    merged.reserve(f.terms.size() + g.terms.size());
    auto shifted = [&](std::size_t j) {
        Vec e(g.terms[j].exps.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = g.terms[j].exps[i] + shift[i];
        return e;
    };
    std::size_t i = 0, j = 0;
    while (i < f.terms.size() || j < g.terms.size()) {
        if (j == g.terms.size()) {
            merged.push_back(f.terms[i++]);
            continue;
        }
        Vec ge = shifted(j);
        if (i == f.terms.size()) {
            FieldElement v = F.neg(F.mul(c, g.terms[j].coeff));
            if (!F.is_zero(v)) merged.push_back({std::move(ge), std::move(v)});
            ++j;
            continue;
        }
        if (f.terms[i].exps == ge) {
            FieldElement v = F.sub(f.terms[i].coeff, F.mul(c, g.terms[j].coeff));
            if (!F.is_zero(v)) merged.push_back({f.terms[i].exps, std::move(v)});
            ++i; ++j;
        } else if (ord.less(ge, f.terms[i].exps)) {
            merged.push_back(f.terms[i++]);
        } else {
            FieldElement v = F.neg(F.mul(c, g.terms[j].coeff));
            if (!F.is_zero(v)) merged.push_back({std::move(ge), std::move(v)});
            ++j;
        }
    }
    GBPoly out;
    out.terms = std::move(merged);
    return out;
}

GBPoly make_monic(GBPoly f, const FieldDescriptor& F) {
    if (f.is_zero() || F.is_one(f.lead().coeff)) return f;
    FieldElement inv = F.inv(f.lead().coeff);
    for (auto& t : f.terms) t.coeff = F.mul(t.coeff, inv);
    return f;
}

} // namespace

GBPoly s_polynomial(const GBPoly& f, const GBPoly& g, const MonomialOrder& ord,
                    const FieldDescriptor& F) {
    Vec u = exp_lcm(f.lead().exps, g.lead().exps);
    Vec sf(u.size()), sg(u.size());
    for (std::size_t k = 0; k < u.size(); ++k) {
        sf[k] = u[k] - f.lead().exps[k];
        sg[k] = u[k] - g.lead().exps[k];
    }
    GBPoly zero;
    return axpy(axpy(zero, F.neg(F.inv(f.lead().coeff)), sf, f, ord, F),
                F.inv(g.lead().coeff), sg, g, ord, F);
}

GBPoly normal_form(const GBPoly& f, const std::vector<GBPoly>& basis,
                   const MonomialOrder& ord, const FieldDescriptor& F) {
    GBPoly rem;
    GBPoly work = f;
    while (!work.is_zero()) {
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.is_zero() || !divides(g.lead().exps, work.lead().exps)) continue;
            Vec shift(work.lead().exps.size());
            for (std::size_t i = 0; i < shift.size(); ++i)
                shift[i] = work.lead().exps[i] - g.lead().exps[i];
            FieldElement c = F.div(work.lead().coeff, g.lead().coeff);
            work = axpy(work, c, shift, g, ord, F);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.terms.push_back(work.terms.front());
            work.terms.erase(work.terms.begin());
        }
    }
    return rem;
}

GroebnerBasis buchberger(std::vector<GBPoly> gens, const MonomialOrder& ord,
                         const FieldDescriptor& F, std::size_t nvars, const Limits& lim) {
    std::vector<GBPoly> basis;
    for (auto& g : gens)
        if (!g.is_zero()) basis.push_back(make_monic(std::move(g), F));

    struct Pair {
        std::int64_t deg;
        std::size_t i, j;
        bool operator<(const Pair& o) const {
            if (deg != o.deg) return deg < o.deg;
            if (i != o.i) return i < o.i;
            return j < o.j;
        }
    };
    std::set<Pair> pending;
    auto push_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            Vec u = exp_lcm(basis[i].lead().exps, basis[j].lead().exps);
            pending.insert({tot_deg(u, 0, u.size()), i, j});
        }
    };
    for (std::size_t j = 0; j < basis.size(); ++j) push_pairs(j);

    std::uint64_t reductions = 0;
    while (!pending.empty()) {
        Pair p = *pending.begin();
        pending.erase(pending.begin());
        const Vec& lti = basis[p.i].lead().exps;
        const Vec& ltj = basis[p.j].lead().exps;
        Vec u = exp_lcm(lti, ltj);
        // first criterion: coprime leading terms
        bool coprime = true;
        for (std::size_t k = 0; k < u.size(); ++k)
            if (u[k] != lti[k] + ltj[k]) { coprime = false; break; }
        if (coprime) continue;
        // second (chain) criterion
        bool skip = false;
        for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == p.i || k == p.j) continue;
            if (!divides(basis[k].lead().exps, u)) continue;
            Vec uik = exp_lcm(lti, basis[k].lead().exps);
            Vec ukj = exp_lcm(basis[k].lead().exps, ltj);
            Pair pik{tot_deg(uik, 0, uik.size()), std::min(p.i, k), std::max(p.i, k)};
            Pair pkj{tot_deg(ukj, 0, ukj.size()), std::min(k, p.j), std::max(k, p.j)};
            if (!pending.count(pik) && !pending.count(pkj)) skip = true;
        }
        if (skip) continue;

        if (++reductions > lim.max_gb_pairs)
            throw resource_limit("Groebner pair reductions exceeded the cap of " +
                                 std::to_string(lim.max_gb_pairs));
        GBPoly r = normal_form(s_polynomial(basis[p.i], basis[p.j], ord, F), basis, ord, F);
        if (!r.is_zero()) {
            basis.push_back(make_monic(std::move(r), F));
            push_pairs(basis.size() - 1);
        }
    }

    // minimalize: drop elements whose leading term another one divides
    std::vector<GBPoly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            if (divides(basis[j].lead().exps, basis[i].lead().exps)) {
                // break ties so exactly one of two equal leading terms survives
                if (basis[i].lead().exps == basis[j].lead().exps) redundant = j < i;
                else redundant = true;
            }
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    // interreduce tails
    std::vector<GBPoly> reduced(minimal.size());
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<GBPoly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        reduced[i] = make_monic(normal_form(minimal[i], others, ord, F), F);
    }
    std::sort(reduced.begin(), reduced.end(), [&](const GBPoly& a, const GBPoly& b) {
        return ord.less(a.lead().exps, b.lead().exps);
    });

    GroebnerBasis out;
    out.order = ord;
    out.nvars = nvars;
    out.field = F;
    out.polys = std::move(reduced);
    return out;
}

GroebnerBasis laurent_ideal_basis(const std::vector<LaurentPoly>& gens, const Lattice* s,
                                  const FieldDescriptor& k, const Limits& lim) {
    int n = s ? s->rank() : (gens.empty() ? 0 : gens.front().rank());
    if (n == 0) throw invalid_input("cannot infer the rank: no generators and no subgroup");
    for (const auto& g : gens) {
        if (g.field() != k)
            throw invalid_input("generator field " + g.field().to_string() +
                                " does not match the requested field " + k.to_string());
        if (g.rank() != n) throw invalid_input("generator rank mismatch");
    }
    const std::size_t nv = static_cast<std::size_t>(n) + 1; // + t
    MonomialOrder ord = MonomialOrder::elimination(static_cast<std::size_t>(n));

    std::vector<GBPoly> inputs;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        Vec shift(static_cast<std::size_t>(n), 0);
        for (const auto& [e, c] : g.terms())
            for (std::size_t i = 0; i < e.size(); ++i)
                shift[i] = std::max(shift[i], -e[i]);
        inputs.push_back(gb_from_laurent(translate(g, shift), ord, nv));
    }
    if (s) {
        for (int j = 0; j < n; ++j) {
            Vec plus(nv, 0), minus(nv, 0);
            for (int i = 0; i < n; ++i) {
                std::int64_t e = s->basis()[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                if (e > 0) plus[static_cast<std::size_t>(i)] = e;
                else minus[static_cast<std::size_t>(i)] = -e;
            }
            GBPoly rel = gb_normalize({{plus, k.one()}, {minus, k.neg(k.one())}}, ord, k);
            if (!rel.is_zero()) inputs.push_back(std::move(rel));
        }
    }
    // t * x_1...x_n - 1
    Vec tmono(nv, 1);
    Vec one_e(nv, 0);
    inputs.push_back(gb_normalize({{tmono, k.one()}, {one_e, k.neg(k.one())}}, ord, k));

    return buchberger(std::move(inputs), ord, k, nv, lim);
}

std::vector<GBPoly> eliminate_t(const GroebnerBasis& gb) {
    std::vector<GBPoly> out;
    const std::size_t t = gb.nvars - 1;
    for (const auto& g : gb.polys) {
        bool tfree = true;
        for (const auto& term : g.terms)
            if (term.exps[t] != 0) { tfree = false; break; }
        if (tfree) out.push_back(g);
    }
    return out;
}

std::optional<std::uint64_t> staircase_dimension(const std::vector<GBPoly>& polys,
                                                 std::size_t nvars, const Limits& lim) {
    for (const auto& g : polys)
        if (!g.is_zero() && tot_deg(g.lead().exps, 0, g.lead().exps.size()) == 0)
            return 0; // unit ideal
    std::vector<Vec> lts;
    for (const auto& g : polys)
        if (!g.is_zero()) lts.push_back(g.lead().exps);

    Vec bound(nvars, -1);
    for (const auto& e : lts) {
        std::size_t nz = 0, var = 0;
        for (std::size_t i = 0; i < nvars; ++i)
            if (e[i] != 0) { ++nz; var = i; }
        // pure powers in the counted variables bound the staircase box
        bool outside = false;
        for (std::size_t i = nvars; i < e.size(); ++i)
            if (e[i] != 0) outside = true;
        if (nz == 1 && !outside) {
            if (bound[var] == -1 || e[var] < bound[var]) bound[var] = e[var];
        }
    }
    for (std::size_t i = 0; i < nvars; ++i)
        if (bound[i] == -1) return std::nullopt;

    double cells = 1;
    for (std::size_t i = 0; i < nvars; ++i) cells *= static_cast<double>(bound[i]);
    if (cells > static_cast<double>(lim.max_dense_cells))
        throw resource_limit("staircase box exceeds the cap of " +
                             std::to_string(lim.max_dense_cells) + " cells");

    std::uint64_t count = 0;
    Vec mono(lts.empty() ? nvars : lts[0].size(), 0);
    // odometer over the box
    while (true) {
        bool standard = true;
        for (const auto& e : lts)
            if (divides(e, mono)) { standard = false; break; }
        if (standard) ++count;
        std::size_t i = 0;
        while (i < nvars && ++mono[i] == bound[i]) {
            mono[i] = 0;
            ++i;
        }
        if (i == nvars) break;
    }
    return count;
}

std::optional<std::uint64_t> staircase_dimension(const GroebnerBasis& gb, const Limits& lim) {
    return staircase_dimension(gb.polys, gb.nvars, lim);
}

CrosscheckReport crosscheck_dim(const std::vector<LaurentPoly>& gens, const Lattice& s,
                                const FieldDescriptor& k, const Limits& lim) {
    CrosscheckReport rep;
    auto t0 = std::chrono::steady_clock::now();
    DimReport lin = coinvariant_dim(gens, s, k, lim);
    rep.dim_coinvariants = lin.dimension;
    rep.millis_coinvariants =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    t0 = std::chrono::steady_clock::now();
    GroebnerBasis gb = laurent_ideal_basis(gens, &s, k, lim);
    std::vector<GBPoly> elim = eliminate_t(gb);
    auto dim = staircase_dimension(elim, static_cast<std::size_t>(s.rank()), lim);
    rep.millis_groebner =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (!dim)
        throw crosscheck_mismatch(
            "Groebner route reports an infinite staircase against coinvariant dimension " +
            std::to_string(rep.dim_coinvariants));
    rep.dim_groebner = *dim;
    if (rep.dim_groebner != rep.dim_coinvariants)
        throw crosscheck_mismatch("engine disagreement: coinvariants " +
                                  std::to_string(rep.dim_coinvariants) + ", Groebner staircase " +
                                  std::to_string(rep.dim_groebner));
    return rep;
}

} // namespace vb1

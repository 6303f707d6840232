#include "vb1/stability.hpp"

#include <algorithm>
#include <numeric>

#include "vb1/errors.hpp"

namespace vb1 {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::stabilized: return "stabilized";
        case Verdict::growing: return "growing";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

std::uint64_t ipow(std::int64_t base, int e) {
    std::uint64_t v = 1;
    for (int i = 0; i < e; ++i) {
        if (v > UINT64_MAX / static_cast<std::uint64_t>(base))
            throw invalid_input("power " + std::to_string(base) + "^" + std::to_string(e) +
                                " overflows");
        v *= static_cast<std::uint64_t>(base);
    }
    return v;
}

} // namespace

StabilizationReport dim_sequence(const std::vector<LaurentPoly>& gens,
                                 const FieldDescriptor& k, std::int64_t scan_limit,
                                 int rank_n, const Limits& lim, bool run_claim2) {
    if (scan_limit < 1) throw invalid_input("scan limit must be >= 1");
    StabilizationReport rep;
    rep.field = k.to_string();
    auto vars = default_variables(rank_n);
    for (const auto& g : gens) rep.ideal.push_back(g.to_string(vars));
    rep.limit = scan_limit;

    for (std::int64_t m = 1; m <= scan_limit; ++m) {
        ScanEntry entry;
        entry.m = m;
        entry.index = ipow(m, rank_n);
        try {
            Lattice s = congruence_lattice(m, rank_n, lim);
            DimReport d = coinvariant_dim(gens, s, k, lim, "m:" + std::to_string(m));
            entry.dim = d.dimension;
        } catch (const resource_limit& e) {
            entry.error = e.what();
        }
        rep.dims.push_back(std::move(entry));
    }

    // divisibility monotonicity is a theorem for these ideals; treat a
    // violation as an engine bug
    for (const auto& a : rep.dims)
        for (const auto& b : rep.dims)
            if (a.dim && b.dim && a.m != b.m && b.m % a.m == 0 && *a.dim > *b.dim)
                throw crosscheck_mismatch("divisibility monotonicity violated: dim(" +
                                          std::to_string(a.m) + ") = " + std::to_string(*a.dim) +
                                          " > dim(" + std::to_string(b.m) + ") = " +
                                          std::to_string(*b.dim));

    for (const auto& e : rep.dims) {
        if (!e.dim) continue;
        if (!rep.sup_observed || *e.dim > *rep.sup_observed) {
            rep.sup_observed = *e.dim;
            rep.argmax = e.m;
        }
    }

    if (run_claim2 && rep.argmax) {
        for (std::int64_t r : {std::int64_t{2}, std::int64_t{3}}) {
            Claim2Check chk;
            chk.m = *rep.argmax;
            chk.r = r;
            try {
                chk.equal = ideal_equal_Jm_Jmr(gens, chk.m, r, k, rank_n, lim);
            } catch (const resource_limit& e) {
                chk.error = e.what();
            }
            rep.claim2.push_back(std::move(chk));
        }
    }

    // growing: a strictly increasing chain m_1 | m_2 | ... of length >= 3
    // whose top cannot be doubled within the scan
    bool growing = false;
    {
        std::vector<int> chain_len(static_cast<std::size_t>(scan_limit) + 1, 0);
        for (std::int64_t m = 1; m <= scan_limit; ++m) {
            const auto& em = rep.dims[static_cast<std::size_t>(m - 1)];
            if (!em.dim) continue;
            chain_len[static_cast<std::size_t>(m)] = 1;
            for (std::int64_t d = 1; d * d <= m; ++d) {
                if (m % d != 0) continue;
                for (std::int64_t div : {d, m / d}) {
                    if (div == m) continue;
                    const auto& ed = rep.dims[static_cast<std::size_t>(div - 1)];
                    if (!ed.dim || *ed.dim >= *em.dim) continue;
                    chain_len[static_cast<std::size_t>(m)] =
                        std::max(chain_len[static_cast<std::size_t>(m)],
                                 chain_len[static_cast<std::size_t>(div)] + 1);
                }
            }
            if (2 * m > scan_limit && chain_len[static_cast<std::size_t>(m)] >= 3) growing = true;
        }
    }
    bool stabilized = rep.argmax && !rep.claim2.empty() &&
                      std::all_of(rep.claim2.begin(), rep.claim2.end(),
                                  [](const Claim2Check& c) { return c.equal && *c.equal; });
    rep.verdict = growing ? Verdict::growing
                          : (stabilized ? Verdict::stabilized : Verdict::inconclusive);
    return rep;
}

// ---------------------------------------------------------------------------
// substitution oracle

namespace {

using DensePoly = std::vector<FieldElement>; // low degree first, length = modulus m

int poly_deg(const DensePoly& f, const FieldDescriptor& F) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (!F.is_zero(f[static_cast<std::size_t>(i)])) return i;
    return -1;
}

// cyclic convolution: multiply mod x^m - 1
DensePoly cyclic_mul(const DensePoly& a, const DensePoly& b, std::int64_t m,
                     const FieldDescriptor& F) {
    DensePoly out(static_cast<std::size_t>(m), F.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (F.is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (F.is_zero(b[j])) continue;
            std::size_t k = (i + j) % static_cast<std::size_t>(m);
            out[k] = F.add(out[k], F.mul(a[i], b[j]));
        }
    }
    return out;
}

// Euclidean gcd degree in k[x]
int gcd_degree(DensePoly a, DensePoly b, const FieldDescriptor& F) {
    while (true) {
        int db = poly_deg(b, F);
        if (db < 0) return poly_deg(a, F);
        int da = poly_deg(a, F);
        if (da < db) {
            a.swap(b);
            continue;
        }
        // a -= lead(a)/lead(b) * x^(da-db) * b
        FieldElement c = F.div(a[static_cast<std::size_t>(da)], b[static_cast<std::size_t>(db)]);
        for (int j = 0; j <= db; ++j) {
            auto& t = a[static_cast<std::size_t>(da - db + j)];
            t = F.sub(t, F.mul(c, b[static_cast<std::size_t>(j)]));
        }
    }
}

} // namespace

std::uint64_t substitution_oracle_dim(const LaurentPoly& g, std::int64_t m) {
    if (g.is_zero()) throw std::domain_error("substitution oracle needs a nonzero g");
    if (g.rank() != 1) throw invalid_input("substitution oracle takes a univariate g");
    if (m < 1) throw invalid_input("substitution oracle needs m >= 1");
    const FieldDescriptor& F = g.field();

    // g mod x^m - 1
    DensePoly gm(static_cast<std::size_t>(m), F.zero());
    for (const auto& [e, c] : g.terms()) {
        std::int64_t r = e[0] % m;
        if (r < 0) r += m;
        auto& slot = gm[static_cast<std::size_t>(r)];
        slot = F.add(slot, c);
    }
    // g^m - 1 mod x^m - 1, by repeated squaring
    DensePoly acc(static_cast<std::size_t>(m), F.zero());
    acc[0] = F.one();
    DensePoly base = gm;
    std::int64_t e = m;
    while (e > 0) {
        if (e & 1) acc = cyclic_mul(acc, base, m, F);
        base = cyclic_mul(base, base, m, F);
        e >>= 1;
    }
    acc[0] = F.sub(acc[0], F.one());

    // x^m - 1 as a dense polynomial of degree m
    DensePoly xm(static_cast<std::size_t>(m) + 1, F.zero());
    xm[0] = F.neg(F.one());
    xm[static_cast<std::size_t>(m)] = F.one();

    int d = gcd_degree(xm, acc, F);
    return static_cast<std::uint64_t>(d);
}

// ---------------------------------------------------------------------------
// m0 bound

namespace {

void m0_dfs(const std::vector<std::int64_t>& primes, std::size_t at, std::int64_t d,
            std::int64_t s, std::int64_t phi, std::vector<std::int64_t>& out) {
    // invariant: phi = phi(s); prune once phi(s)^2 > d s, since every further
    // prime-power factor past 2 only raises phi(s)^2 / s
    if (at == primes.size()) {
        if (phi * phi <= d * s) out.push_back(s);
        return;
    }
    m0_dfs(primes, at + 1, d, s, phi, out);
    std::int64_t p = primes[at];
    std::int64_t sp = s, php = phi;
    for (int a = 1;; ++a) {
        if (sp > 100000000 / p)
            throw resource_limit("m0 enumeration outgrew the desk-scale bound at d = " +
                                 std::to_string(d));
        php = a == 1 ? php * (p - 1) : php * p;
        sp *= p;
        // phi(s)^2/s rises with the exponent, and the remaining (odd) primes
        // can only raise it further
        if (php * php > d * sp) break;
        m0_dfs(primes, at + 1, d, sp, php, out);
    }
}

std::int64_t euler_phi(std::int64_t s) {
    std::int64_t result = s;
    for (std::int64_t p = 2; p * p <= s; ++p) {
        if (s % p != 0) continue;
        while (s % p == 0) s /= p;
        result -= result / p;
    }
    if (s > 1) result -= result / s;
    return result;
}

} // namespace

M0Bound m0_candidates(std::int64_t d) {
    if (d < 1) throw invalid_input("module generator count d must be >= 1, got " + std::to_string(d));
    M0Bound out;
    out.d = d;

    // candidate primes: p with (p-1)^2 <= 2 d p (the other factors contribute
    // at least 1/2, all of it from the prime 2)
    std::vector<std::int64_t> primes;
    for (std::int64_t p = 2; (p - 1) * (p - 1) <= 2 * d * p; ++p)
        if (detail::is_prime(p)) primes.push_back(p);

    std::vector<std::int64_t> found;
    m0_dfs(primes, 0, d, 1, 1, found);
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    out.feasible_orders = found;
    out.b = found.back();
    out.search_limit = 2 * out.b;

    // independent linear verification up to the proven limit
    for (std::int64_t s = 1; s <= out.search_limit; ++s) {
        std::int64_t phi = euler_phi(s);
        bool feasible = phi * phi <= d * s;
        bool listed = std::binary_search(found.begin(), found.end(), s);
        if (feasible != listed)
            throw crosscheck_mismatch("m0 enumeration mismatch at s = " + std::to_string(s));
    }

    mpz_fac_ui(out.m0_factorial.get_mpz_t(), static_cast<unsigned long>(out.b));
    out.m0_lcm = 1;
    for (std::int64_t s : found) out.m0_lcm = lcm(out.m0_lcm, mpz_class(s));
    return out;
}

// ---------------------------------------------------------------------------
// demos

DimReport demo_prop51(std::int64_t p, int m, const Limits& lim) {
    FieldDescriptor F = FieldDescriptor::prime(p);
    if (m < 1) throw invalid_input("demo needs m >= 1");
    std::uint64_t pm = ipow(p, m);
    if (pm > static_cast<std::uint64_t>(INT64_MAX))
        throw invalid_input("p^m too large");

    LaurentPoly g(F, 2); // y - x^2 + x - 1
    g.add_term({0, 1}, F.one());
    g.add_term({2, 0}, F.neg(F.one()));
    g.add_term({1, 0}, F.one());
    g.add_term({0, 0}, F.neg(F.one()));

    Lattice s = congruence_lattice(static_cast<std::int64_t>(pm), 2, lim);
    DimReport rep = betti_split({g}, s, F, lim, "m:" + std::to_string(pm));
    std::uint64_t expected = pm + 2;
    if (!rep.betti || *rep.betti != expected)
        throw crosscheck_mismatch("demo expected first Betti number " + std::to_string(expected) +
                                  " but computed " + std::to_string(rep.betti ? *rep.betti : 0));
    return rep;
}

DimReport demo_prop53(std::int64_t p, int r, const Limits& lim) {
    FieldDescriptor F = FieldDescriptor::prime(p);
    if (r < 2) throw invalid_input("demo needs extension degree r >= 2");
    Lattice s = kernel_lattice_prop53(p, r, lim);

    LaurentPoly g(F, 2); // x2 - x1 - 1
    g.add_term({0, 1}, F.one());
    g.add_term({1, 0}, F.neg(F.one()));
    g.add_term({0, 0}, F.neg(F.one()));

    DimReport rep = betti_split({g}, s, F, lim,
                                "prop53:" + std::to_string(p) + "," + std::to_string(r));
    if (std::gcd(static_cast<std::int64_t>(s.index()), p) != 1)
        throw crosscheck_mismatch("subgroup index " + std::to_string(s.index()) +
                                  " is not coprime to " + std::to_string(p));
    std::uint64_t lower = static_cast<std::uint64_t>(r) + 2;
    if (!rep.betti || *rep.betti < lower)
        throw crosscheck_mismatch("demo expected first Betti number >= " + std::to_string(lower) +
                                  " but computed " + std::to_string(rep.betti ? *rep.betti : 0));
    return rep;
}

DimReport demo_wreath(std::int64_t m, const Limits& lim) {
    if (m < 1) throw invalid_input("demo needs m >= 1");
    FieldDescriptor Q = FieldDescriptor::rationals();
    Lattice s = congruence_lattice(m, 1, lim);
    DimReport rep = betti_split({}, s, Q, lim, "m:" + std::to_string(m));
    std::uint64_t expected = static_cast<std::uint64_t>(m) + 1;
    if (!rep.betti || *rep.betti != expected)
        throw crosscheck_mismatch("demo expected first Betti number " + std::to_string(expected) +
                                  " but computed " + std::to_string(rep.betti ? *rep.betti : 0));
    return rep;
}

} // namespace vb1

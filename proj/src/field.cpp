#include "vb1/field.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "vb1/errors.hpp"

namespace vb1 {

namespace detail {

bool is_prime(std::int64_t n, std::int64_t* witness_divisor) {
    if (n < 2) {
        if (witness_divisor) *witness_divisor = n;
        return false;
    }
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            if (witness_divisor) *witness_divisor = d;
            return false;
        }
    }
    return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

} // namespace detail

namespace {

std::int64_t mod_pos(std::int64_t a, std::int64_t p) {
    std::int64_t m = a % p;
    return m < 0 ? m + p : m;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
    // extended Euclid; a nonzero mod p, p prime
    std::int64_t t = 0, newt = 1, r = p, newr = mod_pos(a, p);
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt;
        t = newt; newt = tmp;
        tmp = r - q * newr;
        r = newr; newr = tmp;
    }
    if (r != 1) throw invalid_input("element not invertible mod " + std::to_string(p));
    return mod_pos(t, p);
}

using PolyFp = std::vector<std::int64_t>; // dense, low degree first, may carry trailing zeros

int deg(const PolyFp& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[static_cast<std::size_t>(i)] != 0) return i;
    return -1;
}

// f mod g in F_p[u]; g monic of degree dg >= 1
PolyFp poly_mod(PolyFp f, const PolyFp& g, std::int64_t p) {
    int dg = deg(g);
    for (int i = deg(f); i >= dg; --i) {
        std::int64_t c = f[static_cast<std::size_t>(i)] % p;
        if (c == 0) continue;
        for (int j = 0; j <= dg; ++j) {
            auto& t = f[static_cast<std::size_t>(i - dg + j)];
            t = mod_pos(t - c * g[static_cast<std::size_t>(j)], p);
        }
    }
    f.resize(static_cast<std::size_t>(dg));
    return f;
}

PolyFp poly_mul_mod(const PolyFp& a, const PolyFp& b, const PolyFp& g, std::int64_t p) {
    PolyFp prod(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    return poly_mod(std::move(prod), g, p);
}

// trial division by every monic polynomial of degree 1..r/2
bool is_irreducible(const PolyFp& f, std::int64_t p) {
    int r = deg(f);
    if (r <= 0) return false;
    if (r == 1) return true;
    for (int d = 1; 2 * d <= r; ++d) {
        // odometer over monic divisor candidates of degree d
        PolyFp cand(static_cast<std::size_t>(d) + 1, 0);
        cand[static_cast<std::size_t>(d)] = 1;
        while (true) {
            if (deg(poly_mod(f, cand, p)) < 0) return false;
            int i = 0;
            while (i < d && ++cand[static_cast<std::size_t>(i)] == p) {
                cand[static_cast<std::size_t>(i)] = 0;
                ++i;
            }
            if (i == d) break;
        }
    }
    return true;
}

} // namespace

FieldDescriptor FieldDescriptor::rationals() {
    FieldDescriptor F;
    F.kind_ = FieldKind::rationals;
    return F;
}

FieldDescriptor FieldDescriptor::prime(std::int64_t p) {
    std::int64_t w = 0;
    if (!detail::is_prime(p, &w))
        throw invalid_input("F" + std::to_string(p) + " is not a field: " +
                            std::to_string(p) + (p < 2 ? " is below 2" : " has divisor " + std::to_string(w)));
    FieldDescriptor F;
    F.kind_ = FieldKind::prime;
    F.p_ = p;
    return F;
}

FieldDescriptor FieldDescriptor::extension(std::int64_t p, int r) {
    if (r < 1) throw invalid_input("extension degree must be >= 1, got " + std::to_string(r));
    if (r == 1) return prime(p);
    FieldDescriptor F = prime(p); // validates p
    F.kind_ = FieldKind::extension;
    F.r_ = r;
    // lex-smallest monic irreducible: scan tuples (c_0,...,c_{r-1}) in
    // lexicographic order, last coordinate fastest
    PolyFp f(static_cast<std::size_t>(r) + 1, 0);
    f[static_cast<std::size_t>(r)] = 1;
    while (true) {
        if (is_irreducible(f, p)) break;
        int i = r - 1;
        while (i >= 0 && ++f[static_cast<std::size_t>(i)] == p) {
            f[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) throw crosscheck_mismatch("no irreducible of degree " + std::to_string(r) +
                                             " over F" + std::to_string(p));
    }
    F.modulus_ = std::move(f);
    return F;
}

FieldDescriptor FieldDescriptor::extension(std::int64_t p, int r, std::vector<std::int64_t> modulus) {
    if (r < 1) throw invalid_input("extension degree must be >= 1, got " + std::to_string(r));
    FieldDescriptor F = prime(p);
    if (static_cast<int>(modulus.size()) != r + 1 || modulus[static_cast<std::size_t>(r)] != 1)
        throw invalid_input("modulus must be monic of degree " + std::to_string(r));
    for (auto& c : modulus) c = mod_pos(c, p);
    if (!is_irreducible(modulus, p))
        throw invalid_input("modulus is reducible over F" + std::to_string(p));
    if (r == 1) return F;
    F.kind_ = FieldKind::extension;
    F.r_ = r;
    F.modulus_ = std::move(modulus);
    return F;
}

std::uint64_t FieldDescriptor::order() const {
    if (!finite()) throw invalid_input("Q is not a finite field");
    std::uint64_t q = 1;
    for (int i = 0; i < r_; ++i) q *= static_cast<std::uint64_t>(p_);
    return q;
}

bool FieldDescriptor::operator==(const FieldDescriptor& o) const {
    return kind_ == o.kind_ && p_ == o.p_ && r_ == o.r_ && modulus_ == o.modulus_;
}

std::string FieldDescriptor::to_string() const {
    switch (kind_) {
        case FieldKind::rationals: return "Q";
        case FieldKind::prime: return "F" + std::to_string(p_);
        case FieldKind::extension:
            return "GF(" + std::to_string(p_) + "^" + std::to_string(r_) + ")";
    }
    return "?";
}

FieldElement FieldDescriptor::zero() const {
    FieldElement e;
    if (finite()) e.vec.assign(static_cast<std::size_t>(r_), 0);
    return e;
}

FieldElement FieldDescriptor::one() const { return from_integer(1); }

FieldElement FieldDescriptor::from_integer(std::int64_t v) const {
    FieldElement e = zero();
    if (finite()) e.vec[0] = mod_pos(v, p_);
    else e.rat = v;
    return e;
}

FieldElement FieldDescriptor::from_integer(const mpz_class& v) const {
    FieldElement e = zero();
    if (finite()) {
        mpz_class m = v % p_;
        e.vec[0] = mod_pos(m.get_si(), p_);
    } else {
        e.rat = v;
    }
    return e;
}

FieldElement FieldDescriptor::from_rational(const mpq_class& v) const {
    if (finite()) throw invalid_input("rational literal in a finite field");
    FieldElement e;
    e.rat = v;
    e.rat.canonicalize();
    return e;
}

FieldElement FieldDescriptor::generator_element() const {
    if (kind_ != FieldKind::extension)
        throw invalid_input("field " + to_string() + " has no algebra generator u");
    FieldElement e = zero();
    e.vec[1] = 1;
    return e;
}

bool FieldDescriptor::is_zero(const FieldElement& a) const {
    if (!finite()) return a.rat == 0;
    return std::all_of(a.vec.begin(), a.vec.end(), [](std::int64_t c) { return c == 0; });
}

bool FieldDescriptor::is_one(const FieldElement& a) const { return eq(a, one()); }

bool FieldDescriptor::eq(const FieldElement& a, const FieldElement& b) const {
    if (!finite()) return a.rat == b.rat;
    return a.vec == b.vec;
}

FieldElement FieldDescriptor::add(const FieldElement& a, const FieldElement& b) const {
    FieldElement e;
    if (!finite()) {
        e.rat = a.rat + b.rat;
        return e;
    }
    e.vec.resize(static_cast<std::size_t>(r_));
    for (int i = 0; i < r_; ++i) {
        auto s = static_cast<std::size_t>(i);
        e.vec[s] = mod_pos(a.vec[s] + b.vec[s], p_);
    }
    return e;
}

FieldElement FieldDescriptor::sub(const FieldElement& a, const FieldElement& b) const {
    return add(a, neg(b));
}

FieldElement FieldDescriptor::neg(const FieldElement& a) const {
    FieldElement e;
    if (!finite()) {
        e.rat = -a.rat;
        return e;
    }
    e.vec.resize(static_cast<std::size_t>(r_));
    for (int i = 0; i < r_; ++i) {
        auto s = static_cast<std::size_t>(i);
        e.vec[s] = a.vec[s] == 0 ? 0 : p_ - a.vec[s];
    }
    return e;
}

FieldElement FieldDescriptor::mul(const FieldElement& a, const FieldElement& b) const {
    FieldElement e;
    switch (kind_) {
        case FieldKind::rationals:
            e.rat = a.rat * b.rat;
            return e;
        case FieldKind::prime:
            e.vec = {(a.vec[0] * b.vec[0]) % p_};
            return e;
        case FieldKind::extension:
            e.vec = poly_mul_mod(a.vec, b.vec, modulus_, p_);
            e.vec.resize(static_cast<std::size_t>(r_), 0);
            return e;
    }
    return e;
}

FieldElement FieldDescriptor::inv(const FieldElement& a) const {
    if (is_zero(a)) throw invalid_input("division by zero in " + to_string());
    FieldElement e;
    switch (kind_) {
        case FieldKind::rationals:
            e.rat = 1 / a.rat;
            return e;
        case FieldKind::prime:
            e.vec = {inv_mod(a.vec[0], p_)};
            return e;
        case FieldKind::extension: {
            // extended Euclid in F_p[u] against the modulus
            PolyFp r0 = modulus_, r1 = a.vec;
            PolyFp t0{0}, t1{1};
            while (deg(r1) >= 0) {
                // divide r0 by r1
                PolyFp q(static_cast<std::size_t>(std::max(deg(r0) - deg(r1) + 1, 1)), 0);
                PolyFp rem = r0;
                std::int64_t lead_inv = inv_mod(r1[static_cast<std::size_t>(deg(r1))], p_);
                for (int i = deg(rem); i >= deg(r1); --i) {
                    std::int64_t c = (rem[static_cast<std::size_t>(i)] * lead_inv) % p_;
                    if (c == 0) continue;
                    q[static_cast<std::size_t>(i - deg(r1))] = c;
                    for (int j = 0; j <= deg(r1); ++j) {
                        auto& t = rem[static_cast<std::size_t>(i - deg(r1) + j)];
                        t = mod_pos(t - c * r1[static_cast<std::size_t>(j)], p_);
                    }
                }
                // (t0, t1) <- (t1, t0 - q t1)
                PolyFp qt1(q.size() + t1.size(), 0);
                for (std::size_t i = 0; i < q.size(); ++i)
                    for (std::size_t j = 0; j < t1.size(); ++j)
                        qt1[i + j] = (qt1[i + j] + q[i] * t1[j]) % p_;
                PolyFp nt(std::max(t0.size(), qt1.size()), 0);
                for (std::size_t i = 0; i < nt.size(); ++i) {
                    std::int64_t v = (i < t0.size() ? t0[i] : 0) - (i < qt1.size() ? qt1[i] : 0);
                    nt[i] = mod_pos(v, p_);
                }
                r0 = std::move(r1); r1 = std::move(rem);
                t0 = std::move(t1); t1 = std::move(nt);
            }
            // r0 = gcd, a unit scalar since modulus is irreducible
            std::int64_t scale = inv_mod(r0[0], p_);
            e.vec.assign(static_cast<std::size_t>(r_), 0);
            for (std::size_t i = 0; i < t0.size() && i < e.vec.size(); ++i)
                e.vec[i] = (t0[i] * scale) % p_;
            return e;
        }
    }
    return e;
}

FieldElement FieldDescriptor::div(const FieldElement& a, const FieldElement& b) const {
    return mul(a, inv(b));
}

FieldElement FieldDescriptor::pow(const FieldElement& a, std::int64_t e) const {
    if (e < 0) return pow(inv(a), -e);
    FieldElement base = a, acc = one();
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

std::string FieldDescriptor::to_string(const FieldElement& a) const {
    if (!finite()) return a.rat.get_str();
    if (kind_ == FieldKind::prime) return std::to_string(a.vec[0]);
    // polynomial in u, high degree first
    std::string s;
    for (int i = r_ - 1; i >= 0; --i) {
        std::int64_t c = a.vec[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        if (!s.empty()) s += "+";
        if (i == 0 || c != 1) s += std::to_string(c);
        if (i > 0) {
            if (c != 1) s += "*";
            s += "u";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

FieldElement multiplicative_generator(const FieldDescriptor& F) {
    if (!F.finite())
        throw invalid_input("multiplicative generator: " + F.to_string() + " is not finite");
    std::uint64_t q = F.order();
    std::int64_t n = static_cast<std::int64_t>(q) - 1;
    std::vector<std::int64_t> qs = detail::prime_factors(n);
    // scan coefficient tuples in lexicographic order, last coordinate fastest
    int r = F.degree();
    FieldElement cand = F.zero();
    while (true) {
        int i = r - 1;
        while (i >= 0 && ++cand.vec[static_cast<std::size_t>(i)] == F.characteristic()) {
            cand.vec[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) throw crosscheck_mismatch("no generator found in " + F.to_string());
        bool full_order = true;
        for (std::int64_t f : qs)
            if (F.is_one(F.pow(cand, n / f))) { full_order = false; break; }
        if (full_order) return cand;
    }
}

std::int64_t discrete_log(const FieldDescriptor& F, const FieldElement& base,
                          const FieldElement& a) {
    if (!F.finite()) throw invalid_input("discrete log: " + F.to_string() + " is not finite");
    if (F.is_zero(a)) throw std::domain_error("discrete log of zero");
    std::int64_t n = static_cast<std::int64_t>(F.order()) - 1;
    if (F.is_zero(base) || !F.eq(F.pow(base, n), F.one()))
        throw invalid_input("discrete log base is not a unit of full order");
    for (std::int64_t f : detail::prime_factors(n))
        if (F.is_one(F.pow(base, n / f)))
            throw invalid_input("discrete log base is not a multiplicative generator");
    // baby-step/giant-step
    std::int64_t m = 1;
    while (m * m < n) ++m;
    std::map<std::vector<std::int64_t>, std::int64_t> baby;
    FieldElement cur = F.one();
    for (std::int64_t j = 0; j < m; ++j) {
        baby.emplace(cur.vec, j);
        cur = F.mul(cur, base);
    }
    FieldElement giant_step = F.pow(F.inv(base), m);
    cur = a;
    for (std::int64_t i = 0; i < m + 1; ++i) {
        auto it = baby.find(cur.vec);
        if (it != baby.end()) {
            std::int64_t L = i * m + it->second;
            return L % n;
        }
        cur = F.mul(cur, giant_step);
    }
    throw crosscheck_mismatch("discrete log not found; base claimed to be a generator");
}

} // namespace vb1

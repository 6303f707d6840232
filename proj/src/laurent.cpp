#include "vb1/laurent.hpp"

#include <algorithm>
#include <numeric>

#include "vb1/errors.hpp"

namespace vb1 {

bool GradedLexLess::operator()(const Vec& a, const Vec& b) const {
    std::int64_t da = std::accumulate(a.begin(), a.end(), std::int64_t{0});
    std::int64_t db = std::accumulate(b.begin(), b.end(), std::int64_t{0});
    if (da != db) return da < db;
    return a < b;
}

LaurentPoly::LaurentPoly(FieldDescriptor field, int rank)
    : field_(std::move(field)), rank_(rank) {
    if (rank_ < 1) throw invalid_input("rank must be >= 1, got " + std::to_string(rank_));
}

void LaurentPoly::add_term(const Vec& exps, const FieldElement& c) {
    if (static_cast<int>(exps.size()) != rank_)
        throw invalid_input("exponent vector length " + std::to_string(exps.size()) +
                            " does not match rank " + std::to_string(rank_));
    if (field_.is_zero(c)) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, c);
        return;
    }
    FieldElement s = field_.add(it->second, c);
    if (field_.is_zero(s)) terms_.erase(it);
    else it->second = std::move(s);
}

const FieldElement* LaurentPoly::coeff(const Vec& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? nullptr : &it->second;
}

LaurentPoly LaurentPoly::monomial(const FieldDescriptor& f, const Vec& exps, const FieldElement& c) {
    LaurentPoly p(f, static_cast<int>(exps.size()));
    p.add_term(exps, c);
    return p;
}

LaurentPoly LaurentPoly::constant(const FieldDescriptor& f, int rank, const FieldElement& c) {
    LaurentPoly p(f, rank);
    p.add_term(Vec(static_cast<std::size_t>(rank), 0), c);
    return p;
}

bool LaurentPoly::equals(const LaurentPoly& o) const {
    if (field_ != o.field_ || rank_ != o.rank_ || terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin(), jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt)
        if (it->first != jt->first || !field_.eq(it->second, jt->second)) return false;
    return true;
}

std::vector<Vec> LaurentPoly::support() const {
    std::vector<Vec> s;
    s.reserve(terms_.size());
    for (const auto& [e, c] : terms_) s.push_back(e);
    return s;
}

std::string LaurentPoly::to_string(const std::vector<std::string>& vars) const {
    if (static_cast<int>(vars.size()) != rank_)
        throw invalid_input("expected " + std::to_string(rank_) + " variable names");
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Vec& e = it->first;
        std::string cs = field_.to_string(it->second);
        bool negative = !cs.empty() && cs[0] == '-';
        if (out.empty()) {
            if (negative) { out += "-"; cs = cs.substr(1); }
        } else {
            out += negative ? " - " : " + ";
            if (negative) cs = cs.substr(1);
        }
        bool any_var = std::any_of(e.begin(), e.end(), [](std::int64_t k) { return k != 0; });
        bool plain = cs.find_first_of("/^*+u") == std::string::npos;
        std::string piece;
        if (!any_var) {
            piece = plain ? cs : "(" + cs + ")";
        } else {
            if (cs != "1") piece = (plain ? cs : "(" + cs + ")") + "*";
            bool first = true;
            for (int i = 0; i < rank_; ++i) {
                std::int64_t k = e[static_cast<std::size_t>(i)];
                if (k == 0) continue;
                if (!first) piece += "*";
                first = false;
                piece += vars[static_cast<std::size_t>(i)];
                if (k != 1) piece += "^" + std::to_string(k);
            }
        }
        out += piece;
    }
    return out;
}

namespace {

void require_compatible(const LaurentPoly& f, const LaurentPoly& g) {
    if (f.field() != g.field())
        throw invalid_input("field mismatch: " + f.field().to_string() + " vs " +
                            g.field().to_string());
    if (f.rank() != g.rank())
        throw invalid_input("rank mismatch: " + std::to_string(f.rank()) + " vs " +
                            std::to_string(g.rank()));
}

} // namespace

LaurentPoly add(const LaurentPoly& f, const LaurentPoly& g) {
    require_compatible(f, g);
    LaurentPoly out = f;
    for (const auto& [e, c] : g.terms()) out.add_term(e, c);
    return out;
}

LaurentPoly sub(const LaurentPoly& f, const LaurentPoly& g) { return add(f, neg(g)); }

LaurentPoly neg(const LaurentPoly& f) {
    LaurentPoly out(f.field(), f.rank());
    for (const auto& [e, c] : f.terms()) out.add_term(e, f.field().neg(c));
    return out;
}

LaurentPoly scale(const FieldElement& c, const LaurentPoly& f) {
    LaurentPoly out(f.field(), f.rank());
    for (const auto& [e, k] : f.terms()) out.add_term(e, f.field().mul(c, k));
    return out;
}

LaurentPoly mul(const LaurentPoly& f, const LaurentPoly& g) {
    require_compatible(f, g);
    LaurentPoly out(f.field(), f.rank());
    for (const auto& [ef, cf] : f.terms())
        for (const auto& [eg, cg] : g.terms()) {
            Vec e(ef.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ef[i] + eg[i];
            out.add_term(e, f.field().mul(cf, cg));
        }
    return out;
}

LaurentPoly translate(const LaurentPoly& f, const Vec& v) {
    if (static_cast<int>(v.size()) != f.rank())
        throw invalid_input("translate shift length does not match rank");
    LaurentPoly out(f.field(), f.rank());
    for (const auto& [e, c] : f.terms()) {
        Vec s(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) s[i] = e[i] + v[i];
        out.add_term(s, c);
    }
    return out;
}

std::vector<std::string> default_variables(int rank) {
    if (rank == 2) return {"x", "y"};
    std::vector<std::string> vars;
    for (int i = 1; i <= rank; ++i) vars.push_back("x" + std::to_string(i));
    return vars;
}

// ---------------------------------------------------------------------------
// parser

namespace {

struct Parser {
    const std::string& text;
    const FieldDescriptor& field;
    const std::vector<std::string>& vars;
    const Limits& lim;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw invalid_input("parse error at position " + std::to_string(pos) + ": " + what);
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool accept(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) { ++pos; return true; }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    mpz_class integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected an integer");
        return mpz_class(text.substr(start, pos - start));
    }

    std::int64_t signed_integer() {
        skip_ws();
        bool negative = false;
        if (accept('-')) negative = true;
        else accept('+');
        mpz_class v = integer();
        if (v > lim.max_exponent)
            throw invalid_input("exponent " + v.get_str() + " exceeds the bound of " +
                                std::to_string(lim.max_exponent));
        std::int64_t e = v.get_si();
        return negative ? -e : e;
    }

    int variable_index() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        std::string name = text.substr(start, pos - start);
        auto it = std::find(vars.begin(), vars.end(), name);
        if (it == vars.end()) {
            pos = start;
            fail("unknown variable '" + name + "'");
        }
        return static_cast<int>(it - vars.begin());
    }

    LaurentPoly factor() {
        char c = peek();
        if (c == '(') {
            accept('(');
            LaurentPoly e = expression();
            if (!accept(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class v = integer();
            int n = static_cast<int>(vars.size());
            FieldElement val = field.from_integer(v);
            if (accept('/')) {
                mpz_class den = integer();
                if (den == 0) fail("zero denominator");
                val = field.div(val, field.from_integer(den));
            }
            return LaurentPoly::constant(field, n, val);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            int vi = variable_index();
            std::int64_t e = 1;
            if (accept('^')) e = signed_integer();
            Vec exps(vars.size(), 0);
            exps[static_cast<std::size_t>(vi)] = e;
            return LaurentPoly::monomial(field, exps, field.one());
        }
        fail(c == '\0' ? "unexpected end of input" : std::string("unexpected '") + c + "'");
    }

    LaurentPoly term() {
        LaurentPoly p = factor();
        while (accept('*')) p = mul(p, factor());
        return p;
    }

    LaurentPoly expression() {
        bool negative = false;
        if (accept('-')) negative = true;
        else accept('+');
        LaurentPoly p = term();
        if (negative) p = vb1::neg(p);
        while (true) {
            char c = peek();
            if (c == '+') { accept('+'); p = add(p, term()); }
            else if (c == '-') { accept('-'); p = sub(p, term()); }
            else break;
        }
        return p;
    }
};

} // namespace

LaurentPoly parse_polynomial(const std::string& text, const FieldDescriptor& field,
                             const std::vector<std::string>& variables, const Limits& lim) {
    if (variables.empty()) throw invalid_input("no variables declared");
    Parser p{text, field, variables, lim};
    LaurentPoly out = p.expression();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return out;
}

// ---------------------------------------------------------------------------
// Newton polygon

namespace {

__int128 cross(const Point2& o, const Point2& a, const Point2& b) {
    return static_cast<__int128>(a[0] - o[0]) * (b[1] - o[1]) -
           static_cast<__int128>(a[1] - o[1]) * (b[0] - o[0]);
}

CharacterClass inner_normal(const Point2& from, const Point2& to) {
    // rotate the CCW edge direction by +90 degrees to point into the hull
    return CharacterClass(-(to[1] - from[1]), to[0] - from[0]);
}

} // namespace

NewtonPolygon newton_polygon(const LaurentPoly& f) {
    if (f.rank() != 2)
        throw invalid_input("Newton polygon is only defined here for rank 2, got rank " +
                            std::to_string(f.rank()));
    if (f.is_zero()) throw std::domain_error("Newton polygon of the zero polynomial");

    NewtonPolygon np;
    for (const auto& [e, c] : f.terms()) np.support.push_back({e[0], e[1]});

    std::vector<Point2> pts = np.support;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    if (pts.size() == 1) {
        np.hull = pts;
        return np;
    }

    // Andrew's monotone chain, counterclockwise output
    std::vector<Point2> h(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1); // last point equals the first

    np.hull = h;
    if (np.hull.size() == 2) {
        // collapsed to a segment: both orthogonal classes are normals
        np.edges.push_back({np.hull[0], np.hull[1], inner_normal(np.hull[0], np.hull[1])});
        np.edges.push_back({np.hull[1], np.hull[0], inner_normal(np.hull[1], np.hull[0])});
        return np;
    }
    for (std::size_t i = 0; i < np.hull.size(); ++i) {
        const Point2& a = np.hull[i];
        const Point2& b = np.hull[(i + 1) % np.hull.size()];
        np.edges.push_back({a, b, inner_normal(a, b)});
    }
    return np;
}

} // namespace vb1

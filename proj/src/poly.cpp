#include "grassmorph/poly.hpp"

#include <algorithm>
#include <sstream>

namespace grassmorph {

std::vector<Monomial> monomials(int d) {
    if (d < 0) throw Error("monomials: negative degree");
    std::vector<Monomial> out;
    out.reserve(static_cast<std::size_t>((d + 1) * (d + 2) / 2));
    for (int i = d; i >= 0; --i)
        for (int j = d - i; j >= 0; --j) out.push_back({i, j, d - i - j});
    return out;
}

ProjPoint::ProjPoint(const Rational& x, const Rational& y, const Rational& z) : c_{x, y, z} {
    int last = -1;
    for (int i = 2; i >= 0; --i) {
        if (c_[static_cast<std::size_t>(i)] != 0) { last = i; break; }
    }
    if (last < 0) throw Error("ProjPoint: all coordinates zero");
    Rational scale = c_[static_cast<std::size_t>(last)];
    for (auto& v : c_) v /= scale;
}

std::string ProjPoint::str() const {
    return "(" + to_string(c_[0]) + " : " + to_string(c_[1]) + " : " + to_string(c_[2]) + ")";
}

HomPoly HomPoly::variable(int var) {
    HomPoly p(1);
    Monomial m{0, 0, 0};
    m[static_cast<std::size_t>(var)] = 1;
    p.add_term(m, Rational(1));
    return p;
}

HomPoly HomPoly::constant(const Rational& v) {
    HomPoly p(0);
    if (v != 0) p.add_term({0, 0, 0}, v);
    return p;
}

HomPoly HomPoly::monomial_term(const Monomial& m, const Rational& coeff) {
    HomPoly p(total_degree(m));
    p.add_term(m, coeff);
    return p;
}

void HomPoly::add_term(const Monomial& m, const Rational& coeff) {
    if (coeff == 0) return;
    if (total_degree(m) != degree_)
        throw Error("HomPoly::add_term: monomial degree mismatch");
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational HomPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

const Monomial& HomPoly::leading_monomial() const {
    if (terms_.empty()) throw Error("leading term of zero polynomial");
    return terms_.begin()->first;
}

const Rational& HomPoly::leading_coeff() const {
    if (terms_.empty()) throw Error("leading term of zero polynomial");
    return terms_.begin()->second;
}

Rational HomPoly::eval_raw(const Rational& x, const Rational& y, const Rational& z) const {
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        if (m[0]) t *= rat_pow(x, static_cast<unsigned>(m[0]));
        if (m[1]) t *= rat_pow(y, static_cast<unsigned>(m[1]));
        if (m[2]) t *= rat_pow(z, static_cast<unsigned>(m[2]));
        acc += t;
    }
    return acc;
}

int HomPoly::degree_in(int var) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[static_cast<std::size_t>(var)]);
    return d;
}

std::string HomPoly::str() const {
    if (terms_.empty()) return "0";
    static const char* names[3] = {"X", "Y", "Z"};
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool has_vars = total_degree(m) > 0;
        if (!has_vars || a != 1) os << to_string(a);
        bool printed = !has_vars || a != 1;
        for (int v = 0; v < 3; ++v) {
            int e = m[static_cast<std::size_t>(v)];
            if (e == 0) continue;
            if (printed) os << "*";
            os << names[v];
            if (e > 1) os << "^" << e;
            printed = true;
        }
    }
    return os.str();
}

HomPoly operator+(const HomPoly& a, const HomPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.degree() != b.degree()) throw Error("sum of forms of different degrees");
    HomPoly out = a;
    for (const auto& [m, c] : b.terms()) out.add_term(m, c);
    return out;
}

HomPoly operator-(const HomPoly& a) {
    HomPoly out(a.degree());
    for (const auto& [m, c] : a.terms()) out.add_term(m, -c);
    return out;
}

HomPoly operator-(const HomPoly& a, const HomPoly& b) { return a + (-b); }

HomPoly operator*(const HomPoly& a, const HomPoly& b) {
    HomPoly out(a.degree() + b.degree());
    if (a.is_zero() || b.is_zero()) return out;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms())
            out.add_term({ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]}, ca * cb);
    return out;
}

HomPoly operator*(const HomPoly& a, const Rational& s) {
    HomPoly out(a.degree());
    if (s == 0) return out;
    for (const auto& [m, c] : a.terms()) out.add_term(m, c * s);
    return out;
}

HomPoly pow(const HomPoly& a, int e) {
    if (e < 0) throw Error("negative power of polynomial");
    HomPoly acc = HomPoly::constant(Rational(1));
    for (int i = 0; i < e; ++i) acc = acc * a;
    return acc;
}

HomPoly normalize_monic(const HomPoly& a) {
    if (a.is_zero()) return a;
    return a * (Rational(1) / a.leading_coeff());
}

HomPoly coeff_of_power(const HomPoly& f, int var, int k) {
    HomPoly out(std::max(f.degree() - k, 0));
    for (const auto& [m, c] : f.terms()) {
        if (m[static_cast<std::size_t>(var)] != k) continue;
        Monomial r = m;
        r[static_cast<std::size_t>(var)] = 0;
        out.add_term(r, c);
    }
    return out;
}

HomPoly mul_var_power(const HomPoly& f, int var, int k) {
    HomPoly out(f.degree() + k);
    for (const auto& [m, c] : f.terms()) {
        Monomial r = m;
        r[static_cast<std::size_t>(var)] += k;
        out.add_term(r, c);
    }
    return out;
}

std::optional<HomPoly> try_divide(const HomPoly& f, const HomPoly& g) {
    if (g.is_zero()) throw Error("division by zero polynomial");
    if (f.is_zero()) return HomPoly(std::max(f.degree() - g.degree(), 0));
    if (f.degree() < g.degree()) return std::nullopt;
    HomPoly quot(f.degree() - g.degree());
    HomPoly rem = f;
    const Monomial& gm = g.leading_monomial();
    while (!rem.is_zero()) {
        const Monomial& rm = rem.leading_monomial();
        Monomial q{rm[0] - gm[0], rm[1] - gm[1], rm[2] - gm[2]};
        if (q[0] < 0 || q[1] < 0 || q[2] < 0) return std::nullopt;
        Rational qc = rem.leading_coeff() / g.leading_coeff();
        quot.add_term(q, qc);
        rem = rem - mul_var_power(mul_var_power(mul_var_power(g, 0, q[0]), 1, q[1]), 2, q[2]) * qc;
    }
    return quot;
}

BinaryForm binary_from_hompoly(const HomPoly& f, int u_var, int w_var) {
    BinaryForm bf;
    bf.u_var = u_var;
    bf.w_var = w_var;
    bf.degree = f.degree();
    std::vector<Rational> coeffs(static_cast<std::size_t>(f.degree()) + 1, Rational(0));
    for (const auto& [m, c] : f.terms()) {
        int other = 3 - u_var - w_var;
        if (m[static_cast<std::size_t>(other)] != 0)
            throw Error("binary_from_hompoly: form involves the excluded variable");
        coeffs[static_cast<std::size_t>(m[static_cast<std::size_t>(u_var)])] = c;
    }
    bf.b = UniPoly(std::move(coeffs));
    return bf;
}

HomPoly hompoly_from_binary(const BinaryForm& bf) {
    HomPoly out(bf.degree);
    for (std::size_t i = 0; i < bf.b.c.size(); ++i) {
        if (bf.b.c[i] == 0) continue;
        Monomial m{0, 0, 0};
        m[static_cast<std::size_t>(bf.u_var)] = static_cast<int>(i);
        m[static_cast<std::size_t>(bf.w_var)] = bf.degree - static_cast<int>(i);
        out.add_term(m, bf.b.c[i]);
    }
    return out;
}

namespace {

// gcd of two homogeneous forms in the same two variables, via the
// univariate bridge; the shared w-power is the minimum of the two implicit
// w-valuations.
HomPoly gcd_binary(const HomPoly& f, const HomPoly& g, int u_var, int w_var) {
    BinaryForm bf = binary_from_hompoly(f, u_var, w_var);
    BinaryForm bg = binary_from_hompoly(g, u_var, w_var);
    UniPoly gu = gcd(bf.b, bg.b);
    int vwf = bf.degree - bf.b.degree();
    int vwg = bg.degree - bg.b.degree();
    int vw = std::min(vwf, vwg);
    BinaryForm result;
    result.u_var = u_var;
    result.w_var = w_var;
    result.degree = gu.degree() + vw;
    result.b = gu;
    return normalize_monic(hompoly_from_binary(result));
}

bool uses_only(const HomPoly& f, int u_var, int w_var) {
    int other = 3 - u_var - w_var;
    for (const auto& [m, c] : f.terms())
        if (m[static_cast<std::size_t>(other)] != 0) return false;
    return true;
}

// Content of f viewed as a polynomial in Z: gcd of its Z-coefficients,
// which are forms in (X, Y).
HomPoly content_z(const HomPoly& f) {
    HomPoly content(0); // zero marker
    bool have = false;
    for (int k = 0; k <= f.degree_in(kVarZ); ++k) {
        HomPoly ck = coeff_of_power(f, kVarZ, k);
        if (ck.is_zero()) continue;
        if (!have) {
            content = normalize_monic(ck);
            have = true;
        } else {
            content = gcd_binary(content, ck, kVarX, kVarY);
        }
        if (content.degree() == 0) break;
    }
    if (!have) throw Error("content of zero polynomial");
    return content;
}

HomPoly divide_exact(const HomPoly& f, const HomPoly& g) {
    auto q = try_divide(f, g);
    if (!q) throw Error("divide_exact: not divisible");
    return *q;
}

// One pseudo-remainder step in Z: repeatedly scales by the divisor's
// leading Z-coefficient and cancels the top Z-term, so the Z-degree drops
// strictly; all intermediates stay homogeneous.
HomPoly pseudo_rem_z(HomPoly r, const HomPoly& g) {
    const int dg = g.degree_in(kVarZ);
    const HomPoly lcg = coeff_of_power(g, kVarZ, dg);
    while (!r.is_zero() && r.degree_in(kVarZ) >= dg) {
        const int dr = r.degree_in(kVarZ);
        HomPoly lead = coeff_of_power(r, kVarZ, dr);
        r = r * lcg - mul_var_power(lead * g, kVarZ, dr - dg);
    }
    return r;
}

} // namespace

HomPoly gcd(const HomPoly& f, const HomPoly& g) {
    if (f.is_zero() && g.is_zero()) throw Error("gcd(0, 0) undefined");
    if (f.is_zero()) return normalize_monic(g);
    if (g.is_zero()) return normalize_monic(f);
    if (f.degree() == 0 || g.degree() == 0) return HomPoly::constant(Rational(1));

    const int dfz = f.degree_in(kVarZ);
    const int dgz = g.degree_in(kVarZ);

    if (dfz == 0 && dgz == 0) return gcd_binary(f, g, kVarX, kVarY);
    if (dfz == 0) return gcd(f, content_z(g));
    if (dgz == 0) return gcd(content_z(f), g);

    HomPoly cf = content_z(f);
    HomPoly cg = content_z(g);
    HomPoly cont = gcd_binary(cf, cg, kVarX, kVarY);

    // primitive PRS in Z
    HomPoly a = divide_exact(f, cf);
    HomPoly b = divide_exact(g, cg);
    if (a.degree_in(kVarZ) < b.degree_in(kVarZ)) std::swap(a, b);
    HomPoly prim = HomPoly::constant(Rational(1));
    for (;;) {
        HomPoly r = pseudo_rem_z(a, b);
        if (r.is_zero()) { prim = b; break; }
        if (r.degree_in(kVarZ) == 0) break; // Z-primitive gcd is constant
        a = b;
        b = divide_exact(r, content_z(r));
    }
    return normalize_monic(cont * prim);
}

HomPoly substitute_linear(const HomPoly& f, const std::array<std::array<Rational, 3>, 3>& a) {
    std::array<HomPoly, 3> lin = {HomPoly(1), HomPoly(1), HomPoly(1)};
    for (int v = 0; v < 3; ++v)
        for (int j = 0; j < 3; ++j) {
            Monomial m{0, 0, 0};
            m[static_cast<std::size_t>(j)] = 1;
            lin[static_cast<std::size_t>(v)].add_term(m, a[static_cast<std::size_t>(v)][static_cast<std::size_t>(j)]);
        }

    // memoized powers per variable
    std::array<std::vector<HomPoly>, 3> powers;
    for (int v = 0; v < 3; ++v) {
        powers[static_cast<std::size_t>(v)].push_back(HomPoly::constant(Rational(1)));
        int need = f.degree_in(v);
        for (int e = 1; e <= need; ++e)
            powers[static_cast<std::size_t>(v)].push_back(powers[static_cast<std::size_t>(v)].back() * lin[static_cast<std::size_t>(v)]);
    }

    HomPoly out(f.degree());
    for (const auto& [m, c] : f.terms()) {
        HomPoly term = powers[0][static_cast<std::size_t>(m[0])] * powers[1][static_cast<std::size_t>(m[1])];
        term = term * powers[2][static_cast<std::size_t>(m[2])];
        out = out + term * c;
    }
    return out;
}

UniPoly compose_univariate(const HomPoly& f, const std::array<UniPoly, 3>& p) {
    std::array<std::vector<UniPoly>, 3> powers;
    for (int v = 0; v < 3; ++v) {
        powers[static_cast<std::size_t>(v)].push_back(UniPoly::constant(Rational(1)));
        int need = f.degree_in(v);
        for (int e = 1; e <= need; ++e)
            powers[static_cast<std::size_t>(v)].push_back(powers[static_cast<std::size_t>(v)].back() * p[static_cast<std::size_t>(v)]);
    }
    UniPoly out;
    for (const auto& [m, c] : f.terms()) {
        UniPoly term = powers[0][static_cast<std::size_t>(m[0])] * powers[1][static_cast<std::size_t>(m[1])];
        term = term * powers[2][static_cast<std::size_t>(m[2])];
        out = out + term * c;
    }
    return out;
}

UniPoly fiber_poly(const HomPoly& f, int var, const Rational& u, const Rational& w) {
    int u_var = -1, w_var = -1;
    for (int v = 0; v < 3; ++v) {
        if (v == var) continue;
        if (u_var < 0) u_var = v; else w_var = v;
    }
    std::vector<Rational> coeffs(static_cast<std::size_t>(f.degree_in(var)) + 1, Rational(0));
    for (const auto& [m, c] : f.terms()) {
        Rational t = c;
        int eu = m[static_cast<std::size_t>(u_var)];
        int ew = m[static_cast<std::size_t>(w_var)];
        if (eu) t *= rat_pow(u, static_cast<unsigned>(eu));
        if (ew) t *= rat_pow(w, static_cast<unsigned>(ew));
        coeffs[static_cast<std::size_t>(m[static_cast<std::size_t>(var)])] += t;
    }
    return UniPoly(std::move(coeffs));
}

} // namespace grassmorph

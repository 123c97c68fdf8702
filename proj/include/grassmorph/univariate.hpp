#ifndef GRASSMORPH_UNIVARIATE_HPP
#define GRASSMORPH_UNIVARIATE_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "grassmorph/errors.hpp"
#include "grassmorph/fp.hpp"
#include "grassmorph/rational.hpp"

namespace grassmorph {

/// Dense univariate polynomial over Q. Coefficient i multiplies t^i; the
/// vector is trimmed so the leading coefficient is nonzero. The zero
/// polynomial is the empty vector (degree -1).
struct UniPoly {
    std::vector<Rational> c;

    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : c(std::move(coeffs)) { trim(); }

    static UniPoly constant(const Rational& v) {
        UniPoly p;
        if (v != 0) p.c = {v};
        return p;
    }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    const Rational& lc() const { return c.back(); }

    Rational coeff(std::size_t i) const { return i < c.size() ? c[i] : Rational(0); }

    Rational eval(const Rational& t) const {
        Rational acc(0);
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
        return acc;
    }
};

inline UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> out(std::max(a.c.size(), b.c.size()), Rational(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) out[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) out[i] += b.c[i];
    return UniPoly(std::move(out));
}

inline UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> out(std::max(a.c.size(), b.c.size()), Rational(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) out[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) out[i] -= b.c[i];
    return UniPoly(std::move(out));
}

inline UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rational> out(a.c.size() + b.c.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) out[i + j] += a.c[i] * b.c[j];
    return UniPoly(std::move(out));
}

inline UniPoly operator*(const UniPoly& a, const Rational& s) {
    UniPoly out = a;
    for (auto& x : out.c) x *= s;
    out.trim();
    return out;
}

inline UniPoly derivative(const UniPoly& a) {
    if (a.c.size() <= 1) return UniPoly();
    std::vector<Rational> out(a.c.size() - 1);
    for (std::size_t i = 1; i < a.c.size(); ++i) out[i - 1] = a.c[i] * Rational(static_cast<unsigned>(i));
    return UniPoly(std::move(out));
}

/// Quotient and remainder; divisor must be nonzero.
inline std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw Error("univariate division by zero");
    UniPoly rem = a;
    if (a.degree() < b.degree()) return {UniPoly(), rem};
    std::vector<Rational> quot(a.degree() - b.degree() + 1, Rational(0));
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        std::size_t shift = static_cast<std::size_t>(rem.degree() - b.degree());
        Rational factor = rem.lc() / b.lc();
        quot[shift] = factor;
        for (std::size_t i = 0; i < b.c.size(); ++i) rem.c[shift + i] -= factor * b.c[i];
        rem.trim();
    }
    return {UniPoly(std::move(quot)), rem};
}

inline UniPoly operator/(const UniPoly& a, const UniPoly& b) { return divrem(a, b).first; }

inline bool divides(const UniPoly& d, const UniPoly& a) {
    if (d.is_zero()) return a.is_zero();
    return divrem(a, d).second.is_zero();
}

inline UniPoly make_monic(const UniPoly& a) {
    if (a.is_zero()) return a;
    return a * (Rational(1) / a.lc());
}

/// Monic gcd by the Euclidean algorithm with per-step normalization.
inline UniPoly gcd(UniPoly a, UniPoly b) {
    a = make_monic(a);
    b = make_monic(b);
    while (!b.is_zero()) {
        UniPoly r = divrem(a, b).second;
        a = std::move(b);
        b = make_monic(r);
    }
    return a;
}

/// Yun square-free decomposition of a nonzero polynomial: returns monic
/// pairwise-coprime square-free factors with their multiplicities, sorted by
/// multiplicity; the product of factor^mult reproduces the monic input.
inline std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& f_in) {
    if (f_in.is_zero()) throw Error("square-free decomposition of zero polynomial");
    UniPoly f = make_monic(f_in);
    std::vector<std::pair<UniPoly, int>> out;
    if (f.degree() <= 0) return out;
    UniPoly fp = derivative(f);
    UniPoly g = gcd(f, fp);
    if (g.degree() == 0) {
        out.emplace_back(f, 1);
        return out;
    }
    UniPoly ci = f / g;
    UniPoly di = (fp / g) - derivative(ci);
    int i = 1;
    while (ci.degree() > 0) {
        UniPoly ai = gcd(ci, di);
        if (ai.degree() > 0) out.emplace_back(ai, i);
        UniPoly cnext = ci / ai;
        di = (di / ai) - derivative(cnext);
        ci = std::move(cnext);
        ++i;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Integer scaffolding for certified rational root extraction.
// ---------------------------------------------------------------------------

namespace detail {

inline BigInt ext_gcd(const BigInt& a, const BigInt& b, BigInt& x, BigInt& y) {
    BigInt r0 = a, r1 = b, x0 = 1, x1 = 0, y0 = 0, y1 = 1;
    while (r1 != 0) {
        BigInt q = r0 / r1;
        BigInt r2 = r0 - q * r1; r0 = r1; r1 = r2;
        BigInt x2 = x0 - q * x1; x0 = x1; x1 = x2;
        BigInt y2 = y0 - q * y1; y0 = y1; y1 = y2;
    }
    x = x0; y = y0;
    return r0;
}

inline BigInt mod_positive(const BigInt& a, const BigInt& m) {
    BigInt r = a % m;
    if (r < 0) r += m;
    return r;
}

inline BigInt mod_inverse(const BigInt& a, const BigInt& m) {
    BigInt x, y;
    BigInt g = ext_gcd(mod_positive(a, m), m, x, y);
    if (g != 1) throw Error("modular inverse does not exist");
    return mod_positive(x, m);
}

/// Primitive integer coefficients of a nonzero rational polynomial
/// (common denominator cleared, content removed, leading coefficient > 0).
inline std::vector<BigInt> primitive_integer_coeffs(const UniPoly& f) {
    BigInt lcm(1);
    for (const auto& q : f.c) {
        BigInt d = denominator(q);
        lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
    }
    std::vector<BigInt> z(f.c.size());
    BigInt content(0);
    for (std::size_t i = 0; i < f.c.size(); ++i) {
        z[i] = numerator(f.c[i]) * (lcm / denominator(f.c[i]));
        content = boost::multiprecision::gcd(content, z[i]);
    }
    if (content == 0) throw Error("primitive part of zero polynomial");
    if (z.back() < 0) content = -content;
    for (auto& v : z) v /= content;
    return z;
}

inline BigInt eval_int(const std::vector<BigInt>& c, const BigInt& t, const BigInt& mod) {
    BigInt acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = mod_positive(acc * t + *it, mod);
    return acc;
}

inline std::uint64_t eval_modp(const std::vector<std::uint64_t>& c, std::uint64_t t, std::uint64_t p) {
    unsigned __int128 acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = (acc * t + *it) % p;
    return static_cast<std::uint64_t>(acc);
}

/// gcd degree check of (f, f') over F_p via plain Euclid on coefficient
/// vectors; returns true when f mod p is square-free with full degree.
inline bool squarefree_mod_p(const std::vector<BigInt>& z, std::uint64_t p) {
    const BigInt bp(p);
    std::vector<std::uint64_t> a(z.size());
    for (std::size_t i = 0; i < z.size(); ++i)
        a[i] = static_cast<std::uint64_t>(mod_positive(z[i], bp));
    if (a.empty() || a.back() == 0) return false; // degree dropped
    std::vector<std::uint64_t> b(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) {
        unsigned __int128 w = static_cast<unsigned __int128>(a[i]) * (i % p);
        b[i - 1] = static_cast<std::uint64_t>(w % p);
    }
    auto trim = [](std::vector<std::uint64_t>& v) { while (!v.empty() && v.back() == 0) v.pop_back(); };
    trim(b);
    // Euclid
    auto mod_reduce = [&](std::vector<std::uint64_t> num, const std::vector<std::uint64_t>& den) {
        Fp lc_inv = Fp(den.back(), p).inverse();
        while (num.size() >= den.size() && !num.empty()) {
            std::uint64_t factor = (Fp(num.back(), p) * lc_inv).value();
            std::size_t shift = num.size() - den.size();
            for (std::size_t i = 0; i < den.size(); ++i) {
                Fp v = Fp(num[shift + i], p) - Fp(factor, p) * Fp(den[i], p);
                num[shift + i] = v.value();
            }
            trim(num);
        }
        return num;
    };
    std::vector<std::uint64_t> r0 = a, r1 = b;
    while (!r1.empty()) {
        std::vector<std::uint64_t> r2 = mod_reduce(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    return r0.size() == 1;
}

/// Rational reconstruction of z mod M with numerator and denominator
/// bounded by `bound`; requires M > 2*bound^2 for uniqueness.
inline std::optional<Rational> rational_reconstruct(const BigInt& z, const BigInt& M, const BigInt& bound) {
    BigInt r0 = M, r1 = mod_positive(z, M), t0 = 0, t1 = 1;
    while (r1 > bound) {
        BigInt q = r0 / r1;
        BigInt r2 = r0 - q * r1; r0 = r1; r1 = r2;
        BigInt t2 = t0 - q * t1; t0 = t1; t1 = t2;
    }
    if (t1 == 0) return std::nullopt;
    if (boost::multiprecision::abs(t1) > bound) return std::nullopt;
    if (boost::multiprecision::gcd(boost::multiprecision::abs(r1), boost::multiprecision::abs(t1)) != 1)
        return std::nullopt;
    return Rational(r1, t1);
}

} // namespace detail

/// All rational roots of a nonzero polynomial, without multiplicity.
///
/// Certified complete: the square-free part is reduced mod a prime p that
/// keeps it square-free with full degree, roots mod p are enumerated
/// exhaustively, Hensel-lifted to precision M > 2*B^2 (B bounds numerator
/// and denominator of any rational root), rationally reconstructed and then
/// verified by exact evaluation. Every rational root survives this pipeline
/// and nothing unverified is reported.
inline std::vector<Rational> rational_roots(const UniPoly& f_in) {
    if (f_in.is_zero()) throw Error("rational_roots of zero polynomial");
    std::vector<Rational> roots;
    UniPoly f = make_monic(f_in);
    if (f.degree() <= 0) return roots;

    // square-free part; also strips t = 0 roots into an explicit check
    UniPoly sf = f / gcd(f, derivative(f));
    if (sf.eval(Rational(0)) == 0) {
        roots.push_back(Rational(0));
        std::vector<Rational> shifted(sf.c.begin() + 1, sf.c.end());
        sf = UniPoly(std::move(shifted));
    }
    if (sf.degree() <= 0) return roots;
    if (sf.degree() == 1) {
        roots.push_back(-sf.c[0] / sf.c[1]);
        return roots;
    }

    std::vector<BigInt> z = detail::primitive_integer_coeffs(sf);
    // any rational root n/d in lowest terms has n | z[0], d | z[deg]
    BigInt bound = std::max(boost::multiprecision::abs(z.front()), boost::multiprecision::abs(z.back()));
    if (bound == 0) throw Error("rational_roots: unexpected zero bound");

    std::uint64_t p = 0;
    for (std::uint64_t cand : {10007ULL, 100003ULL, 1009ULL, 257ULL, 65537ULL, 30011ULL, 104729ULL}) {
        if (detail::squarefree_mod_p(z, cand)) { p = cand; break; }
    }
    if (p == 0) throw Error("rational_roots: no good reduction prime found");

    const BigInt bp(p);
    std::vector<std::uint64_t> zp(z.size());
    for (std::size_t i = 0; i < z.size(); ++i)
        zp[i] = static_cast<std::uint64_t>(detail::mod_positive(z[i], bp));

    std::vector<BigInt> dz(z.size() - 1);
    for (std::size_t i = 1; i < z.size(); ++i) dz[i - 1] = z[i] * BigInt(static_cast<unsigned>(i));

    const BigInt target = 2 * bound * bound + 1;
    for (std::uint64_t r = 0; r < p; ++r) {
        if (detail::eval_modp(zp, r, p) != 0) continue;
        // quadratic Hensel lift of the simple root r
        BigInt M = bp;
        BigInt zr(r);
        while (M < target) {
            M = M * M;
            BigInt fz = detail::eval_int(z, zr, M);
            BigInt dfz = detail::eval_int(dz, zr, M);
            zr = detail::mod_positive(zr - fz * detail::mod_inverse(dfz, M), M);
        }
        auto cand = detail::rational_reconstruct(zr, M, bound);
        if (!cand) continue;
        if (sf.eval(*cand) == 0) roots.push_back(*cand);
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

} // namespace grassmorph

#endif

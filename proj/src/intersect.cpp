#include "grassmorph/intersect.hpp"

#include <algorithm>

#include "grassmorph/errors.hpp"
#include "grassmorph/matrix.hpp"
#include "grassmorph/resultant.hpp"

namespace grassmorph {

namespace {

using Change = std::array<std::array<Rational, 3>, 3>;

Change identity_change() {
    Change a{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Rational(i == j ? 1 : 0);
    return a;
}

Change random_change(Rng& rng) {
    for (;;) {
        Change a{};
        QMatrix m(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                Rational v(rng.next_int(-5, 5));
                a[i][j] = v;
                m.at(i, j) = v;
            }
        if (det(m, Rational(0)) != 0) return a;
    }
}

std::array<Rational, 3> apply_change(const Change& a, const Rational& x, const Rational& y, const Rational& z) {
    std::array<Rational, 3> out;
    for (std::size_t i = 0; i < 3; ++i) out[i] = a[i][0] * x + a[i][1] * y + a[i][2] * z;
    return out;
}

// The unique z above a rational projection (u : w), or nullopt when the
// fiber holds more than one distinct point (degenerate projection).
std::optional<Rational> fiber_single_root(const HomPoly& f1, const HomPoly& g1,
                                          const Rational& u, const Rational& w) {
    UniPoly fu = fiber_poly(f1, kVarZ, u, w);
    UniPoly gu = fiber_poly(g1, kVarZ, u, w);
    UniPoly h = gcd(fu, gu);
    if (h.degree() < 1) throw Error("internal: resultant root with empty fiber");
    UniPoly sf = h / gcd(h, derivative(h));
    if (sf.degree() != 1) return std::nullopt;
    return -sf.c[0] / sf.c[1];
}

} // namespace

Intersection common_zeros(const HomPoly& f, const HomPoly& g, Rng& rng, int max_retries) {
    if (f.is_zero() || g.is_zero()) throw Error("common_zeros: zero polynomial input");
    HomPoly d = gcd(f, g);
    if (d.degree() >= 1) throw CommonComponent("common_zeros: inputs share the component " + d.str());

    Intersection ix;
    ix.change = identity_change();
    if (f.degree() == 0 || g.degree() == 0) return ix; // nonzero constant: empty locus

    const int m = f.degree();
    const int n = g.degree();

    for (int attempt = 0; attempt < max_retries; ++attempt) {
        Change a = random_change(rng);
        HomPoly f1 = substitute_linear(f, a);
        HomPoly g1 = substitute_linear(g, a);
        // projection center (0:0:1) must avoid both curves so fibers never
        // degenerate and Bezout is exact
        if (f1.degree_in(kVarZ) != m || g1.degree_in(kVarZ) != n) continue;

        HomPoly res = sylvester_resultant(f1, g1, kVarZ);
        if (res.is_zero()) throw Error("internal: coprime forms with zero resultant");
        BinaryForm rb = binary_from_hompoly(res, kVarX, kVarY);
        const int v_inf = rb.degree - rb.b.degree(); // multiplicity of the root (1:0)

        UniPoly psc1_t, s10_t;
        if (m == 1) {
            psc1_t = UniPoly::constant(coeff_of_power(f1, kVarZ, 1).coeff({0, 0, 0}));
            s10_t = binary_from_hompoly(coeff_of_power(f1, kVarZ, 0), kVarX, kVarY).b;
        } else if (n == 1) {
            psc1_t = UniPoly::constant(coeff_of_power(g1, kVarZ, 1).coeff({0, 0, 0}));
            s10_t = binary_from_hompoly(coeff_of_power(g1, kVarZ, 0), kVarX, kVarY).b;
        } else {
            std::tie(psc1_t, s10_t) = first_subresultant_coeffs(f1, g1, kVarZ);
        }

        Intersection out;
        out.change = a;
        out.psc1_t = psc1_t;
        out.s10_t = s10_t;
        bool degenerate = false;

        auto take_rational = [&](const Rational& u, const Rational& w, int mult) {
            auto z = fiber_single_root(f1, g1, u, w);
            if (!z) { degenerate = true; return; }
            auto c = apply_change(a, u, w, *z);
            ProjPoint p(c[0], c[1], c[2]);
            if (f.eval(p) != 0 || g.eval(p) != 0) throw Error("internal: uncertified rational zero");
            out.rational.push_back({p, mult});
        };

        if (v_inf > 0) take_rational(Rational(1), Rational(0), v_inf);

        if (!degenerate && rb.b.degree() >= 1) {
            for (const auto& [fac, mult] : squarefree_decomposition(rb.b)) {
                std::vector<Rational> roots = rational_roots(fac);
                for (const Rational& u : roots) {
                    take_rational(u, Rational(1), mult);
                    if (degenerate) break;
                }
                if (degenerate) break;
                UniPoly residual = fac;
                for (const Rational& u : roots)
                    residual = residual / UniPoly({-u, Rational(1)});
                if (residual.degree() >= 1) {
                    if (residual.degree() == 1)
                        throw Error("internal: linear residual escaped rational root extraction");
                    if (gcd(residual, psc1_t).degree() > 0) { degenerate = true; break; }
                    out.residual.push_back({make_monic(residual), mult});
                }
            }
        }
        if (degenerate) continue;
        if (out.total() != static_cast<long long>(m) * n)
            throw Error("internal: Bezout total mismatch");
        return out;
    }
    throw RetriesExhausted("common_zeros: no admissible coordinate change after retries (DegenerateCoordinates)");
}

void filter_by_form(Intersection& ix, const HomPoly& h) {
    std::vector<RationalZero> kept;
    for (auto& z : ix.rational)
        if (h.eval(z.point) == 0) kept.push_back(z);
    ix.rational = std::move(kept);

    if (ix.residual.empty()) return;
    HomPoly h1 = substitute_linear(h, ix.change);
    UniPoly t({Rational(0), Rational(1)});
    UniPoly nh = compose_univariate(h1, {t * ix.psc1_t, ix.psc1_t, UniPoly() - ix.s10_t});
    std::vector<ResidualBlock> blocks;
    for (auto& blk : ix.residual) {
        if (nh.is_zero()) { blocks.push_back(blk); continue; }
        UniPoly gg = gcd(blk.factor, nh);
        if (gg.degree() >= 1) blocks.push_back({make_monic(gg), blk.multiplicity});
    }
    ix.residual = std::move(blocks);
}

bool vanishes_on_all(const Intersection& ix, const HomPoly& h) {
    Intersection copy = ix;
    filter_by_form(copy, h);
    return copy.total() == ix.total();
}

SystemZeros system_common_zeros(const std::vector<HomPoly>& forms, Rng& rng, const SystemOptions& opts) {
    SystemZeros out;
    std::vector<HomPoly> nz;
    for (const auto& h : forms)
        if (!h.is_zero()) nz.push_back(h);

    if (nz.empty()) {
        // every form vanishes identically: the whole plane
        out.empty = false;
        out.witness = ProjPoint(Rational(1), Rational(0), Rational(0));
        return out;
    }
    for (const auto& h : nz)
        if (h.degree() > opts.degree_cap)
            throw Inconclusive("system_common_zeros: form degree " + std::to_string(h.degree()) +
                               " exceeds the exact elimination cap " + std::to_string(opts.degree_cap));

    HomPoly shared = nz.front();
    for (std::size_t i = 1; i < nz.size() && shared.degree() > 0; ++i) shared = gcd(shared, nz[i]);
    if (nz.size() == 1 && nz.front().degree() >= 1) shared = normalize_monic(nz.front());

    if (shared.degree() >= 1) {
        // positive-dimensional common locus; search a small rational point
        out.empty = false;
        out.positive_dimensional = shared;
        for (long long x = -8; x <= 8 && !out.witness; ++x)
            for (long long y = -8; y <= 8; ++y) {
                ProjPoint p{Rational(x), Rational(y), Rational(1)};
                if (shared.eval(p) == 0) { out.witness = p; break; }
            }
        if (!out.witness) {
            for (long long x = -8; x <= 8 && !out.witness; ++x) {
                ProjPoint p{Rational(x), Rational(1), Rational(0)};
                if (shared.eval(p) == 0) out.witness = p;
            }
        }
        if (!out.witness) {
            ProjPoint p{Rational(1), Rational(0), Rational(0)};
            if (shared.eval(p) == 0) out.witness = p;
        }
        return out;
    }
    if (nz.size() == 1) {
        // single nonzero constant form, empty locus
        out.empty = true;
        return out;
    }

    const int deg = nz.front().degree();
    for (const auto& h : nz)
        if (h.degree() != deg) throw Error("system_common_zeros: forms of unequal degree");

    const HomPoly& f = nz.front();
    for (int attempt = 0; attempt < opts.max_retries; ++attempt) {
        HomPoly u(deg);
        for (std::size_t i = 1; i < nz.size(); ++i)
            u = u + nz[i] * Rational(rng.next_int(-4, 4));
        if (u.is_zero()) continue;
        if (gcd(f, u).degree() >= 1) continue;

        Intersection ix = common_zeros(f, u, rng, opts.max_retries);
        for (std::size_t i = 1; i < nz.size(); ++i) filter_by_form(ix, nz[i]);

        out.finite = ix;
        out.empty = ix.empty();
        if (!ix.rational.empty()) out.witness = ix.rational.front().point;
        if (!ix.residual.empty())
            out.nonrational = std::make_pair(ix.residual.front().factor, ix.residual.front().multiplicity);
        return out;
    }
    throw Inconclusive("system_common_zeros: no coprime combination found within retry bound");
}

} // namespace grassmorph

#include "grassmorph/morphisms.hpp"

#include <algorithm>

#include "grassmorph/errors.hpp"
#include "grassmorph/fp.hpp"
#include "grassmorph/rng.hpp"

namespace grassmorph {

namespace {

/// Sparse polynomial with coefficients reduced mod p, for fast exhaustive
/// scans of P^2(F_p).
struct FpPoly {
    std::vector<std::pair<Monomial, Fp>> terms;
    std::uint64_t p = 0;

    static FpPoly reduce(const HomPoly& f, std::uint64_t p) {
        FpPoly out;
        out.p = p;
        for (const auto& [m, c] : f.terms()) {
            Fp r = reduce_mod_p(c, p);
            if (!r.is_zero()) out.terms.emplace_back(m, r);
        }
        return out;
    }

    Fp eval(const Fp& x, const Fp& y, const Fp& z) const {
        Fp acc(0, p);
        for (const auto& [m, c] : terms) {
            Fp t = c;
            if (m[0]) t = t * x.pow(static_cast<std::uint64_t>(m[0]));
            if (m[1]) t = t * y.pow(static_cast<std::uint64_t>(m[1]));
            if (m[2]) t = t * z.pow(static_cast<std::uint64_t>(m[2]));
            acc = acc + t;
        }
        return acc;
    }
};

/// Invokes fn on each canonical representative of P^2(F_p): (1, y, z),
/// (0, 1, z), (0, 0, 1). Returns false when fn aborted the walk.
template <typename Fn>
bool for_each_proj_point(std::uint64_t p, Fn&& fn) {
    for (std::uint64_t y = 0; y < p; ++y)
        for (std::uint64_t z = 0; z < p; ++z)
            if (!fn(std::array<std::uint64_t, 3>{1, y, z})) return false;
    for (std::uint64_t z = 0; z < p; ++z)
        if (!fn(std::array<std::uint64_t, 3>{0, 1, z})) return false;
    return fn(std::array<std::uint64_t, 3>{0, 0, 1});
}

std::optional<ProjPoint> lift_fp_zero(const std::array<HomPoly, 6>& minors, std::uint64_t p,
                                      const std::array<std::uint64_t, 3>& pt) {
    // try centered representatives r and r - p for each coordinate
    std::array<std::vector<long long>, 3> cands;
    for (int i = 0; i < 3; ++i) {
        long long r = static_cast<long long>(pt[static_cast<std::size_t>(i)]);
        cands[static_cast<std::size_t>(i)].push_back(r);
        if (r > 0) cands[static_cast<std::size_t>(i)].push_back(r - static_cast<long long>(p));
    }
    for (long long x : cands[0])
        for (long long y : cands[1])
            for (long long z : cands[2]) {
                if (x == 0 && y == 0 && z == 0) continue;
                ProjPoint cand{Rational(x), Rational(y), Rational(z)};
                bool all_zero = true;
                for (const auto& f : minors)
                    if (f.eval(cand) != 0) { all_zero = false; break; }
                if (all_zero) return cand;
            }
    return std::nullopt;
}

SurjectivityReport decide_empty_locus(const std::vector<HomPoly>& forms, std::uint64_t seed, int degree_cap) {
    SurjectivityReport rep;

    // quick refutation: exhaustive F_p scans; a found zero that lifts to Q
    // settles the answer, anything else defers to exact elimination
    std::array<HomPoly, 6> lift_forms{};
    bool liftable = forms.size() <= 6;
    if (liftable)
        for (std::size_t i = 0; i < forms.size(); ++i) lift_forms[i] = forms[i];

    for (std::uint64_t p : {std::uint64_t{31}, std::uint64_t{101}}) {
        std::vector<FpPoly> red;
        red.reserve(forms.size());
        try {
            for (const auto& f : forms) red.push_back(FpPoly::reduce(f, p));
        } catch (const BadPrime&) {
            continue;
        }
        rep.scanned_primes.push_back(p);
        std::optional<std::array<std::uint64_t, 3>> hit;
        for_each_proj_point(p, [&](const std::array<std::uint64_t, 3>& pt) {
            Fp x(pt[0], p), y(pt[1], p), z(pt[2], p);
            for (const auto& f : red)
                if (!f.eval(x, y, z).is_zero()) return true;
            hit = pt;
            return false;
        });
        if (hit && liftable) {
            std::array<HomPoly, 6> padded = lift_forms;
            if (auto lifted = lift_fp_zero(padded, p, *hit)) {
                rep.surjective = false;
                rep.witness = lifted;
                return rep;
            }
        }
    }

    Rng rng = Rng(seed).fork("empty-locus");
    SystemOptions opts;
    opts.degree_cap = degree_cap;
    SystemZeros sys = system_common_zeros(forms, rng, opts);
    rep.surjective = sys.empty;
    rep.witness = sys.witness;
    rep.nonrational_witness = sys.nonrational;
    rep.base_curve = sys.positive_dimensional;
    return rep;
}

} // namespace

SplitSurjection example_split(int a, int b) {
    if (a < 1 || b < 1) throw Error("example_split: degrees must be positive");
    SplitSurjection s;
    s.a = a;
    s.b = b;
    HomPoly X = HomPoly::variable(kVarX), Y = HomPoly::variable(kVarY), Z = HomPoly::variable(kVarZ);
    s.m[0] = {pow(X, a), pow(Y, a), pow(Z, a), pow(X, a)};
    s.m[1] = {pow(Z, b), pow(X, b), pow(Y, b), HomPoly(b)};
    return s;
}

std::array<HomPoly, 6> pluecker_polys(const SplitSurjection& s) {
    std::array<HomPoly, 6> out = {HomPoly(s.a + s.b), HomPoly(s.a + s.b), HomPoly(s.a + s.b),
                                  HomPoly(s.a + s.b), HomPoly(s.a + s.b), HomPoly(s.a + s.b)};
    std::size_t idx = 0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            out[idx++] = s.m[0][i] * s.m[1][j] - s.m[0][j] * s.m[1][i];
    return out;
}

SurjectivityReport is_surjective(const SplitSurjection& s, std::uint64_t seed, int degree_cap) {
    for (int r = 0; r < 2; ++r)
        for (const auto& e : s.m[static_cast<std::size_t>(r)])
            if (!e.is_zero() && e.degree() != (r == 0 ? s.a : s.b))
                throw Error("is_surjective: row degree mismatch");
    auto minors = pluecker_polys(s);
    return decide_empty_locus(std::vector<HomPoly>(minors.begin(), minors.end()), seed, degree_cap);
}

PlueckerPoint evaluate(const SplitSurjection& s, const ProjPoint& x) {
    QMatrix m(2, 4);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 4; ++j) m.at(i, j) = s.m[i][j].eval(x);
    return pluecker_from_rows(m);
}

namespace {

long long dual_incidence_count(const SplitSurjection& s, const std::array<Rational, 4>& xi, std::uint64_t p) {
    // reduce matrix entries and functional mod p
    std::array<std::array<FpPoly, 4>, 2> red;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 4; ++j) red[i][j] = FpPoly::reduce(s.m[i][j], p);
    std::array<Fp, 4> xr = {reduce_mod_p(xi[0], p), reduce_mod_p(xi[1], p), reduce_mod_p(xi[2], p),
                            reduce_mod_p(xi[3], p)};
    long long count = 0;
    for_each_proj_point(p, [&](const std::array<std::uint64_t, 3>& pt) {
        Fp x(pt[0], p), y(pt[1], p), z(pt[2], p);
        FpMatrix m(3, 4, Fp(0, p));
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 4; ++j) m.at(i, j) = red[i][j].eval(x, y, z);
        for (std::size_t j = 0; j < 4; ++j) m.at(2, j) = xr[j];
        FpMatrix top(2, 4, Fp(0, p));
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 4; ++j) top.at(i, j) = m.at(i, j);
        if (rank(top) == 2 && rank(m) == 2) ++count;
        return true;
    });
    return count;
}

} // namespace

ClassResult cohomology_class(const SplitSurjection& s, std::uint64_t seed) {
    SurjectivityReport surj = is_surjective(s, seed);
    if (!surj.surjective)
        throw Unsurjective("cohomology_class: the matrix does not define a morphism");

    Rng rng = Rng(seed).fork("cohomology-class");
    const int total = s.a + s.b;

    for (int attempt = 0; attempt < 32; ++attempt) {
        std::array<Rational, 4> v;
        bool nonzero = false;
        for (auto& vi : v) {
            vi = Rational(rng.next_int(-10, 10));
            if (vi != 0) nonzero = true;
        }
        if (!nonzero) continue;
        HomPoly fv(s.a), gv(s.b);
        for (std::size_t j = 0; j < 4; ++j) {
            fv = fv + s.m[0][j] * v[j];
            gv = gv + s.m[1][j] * v[j];
        }
        if (fv.is_zero() || gv.is_zero()) continue;
        Intersection ix;
        try {
            ix = common_zeros(fv, gv, rng);
        } catch (const CommonComponent&) {
            continue;
        } catch (const RetriesExhausted&) {
            continue;
        }
        long long q2 = ix.total();
        long long s2 = static_cast<long long>(total) * total - q2;

        ClassResult out;
        out.cls = make_cohom_class(q2, s2);
        out.evidence.section_vector = v;
        out.evidence.zeros = ix;
        std::array<Rational, 4> xi;
        for (auto& c : xi) c = Rational(rng.next_nonzero(10));
        out.evidence.dual_functional = xi;
        for (std::uint64_t p : {std::uint64_t{31}, std::uint64_t{101}}) {
            try {
                out.evidence.dual_incidence_counts.emplace_back(p, dual_incidence_count(s, xi, p));
            } catch (const BadPrime&) {
            }
        }
        return out;
    }
    throw RetriesExhausted("cohomology_class: no generic section vector found");
}

std::size_t tangent_section_rank(const TangentSurjection& t) {
    QMatrix m(5, 9, Rational(0));
    auto fill = [&](std::size_t row, const std::array<HomPoly, 3>& triple) {
        for (std::size_t comp = 0; comp < 3; ++comp)
            for (int v = 0; v < 3; ++v) {
                Monomial mono{0, 0, 0};
                mono[static_cast<std::size_t>(v)] = 1;
                m.at(row, comp * 3 + static_cast<std::size_t>(v)) = triple[comp].coeff(mono);
            }
    };
    for (std::size_t i = 0; i < 4; ++i) fill(i, t.sections[i]);
    std::array<HomPoly, 3> euler = {HomPoly::variable(kVarX), HomPoly::variable(kVarY),
                                    HomPoly::variable(kVarZ)};
    fill(4, euler);
    return rank(m);
}

namespace {

HomPoly det3(const std::array<std::array<HomPoly, 3>, 3>& r) {
    return r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1]) -
           r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0]) +
           r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0]);
}

std::vector<HomPoly> tangent_minors(const TangentSurjection& t) {
    std::array<std::array<HomPoly, 3>, 5> rows;
    for (std::size_t i = 0; i < 4; ++i) rows[i] = t.sections[i];
    rows[4] = {HomPoly::variable(kVarX), HomPoly::variable(kVarY), HomPoly::variable(kVarZ)};
    std::vector<HomPoly> minors;
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i + 1; j < 5; ++j)
            for (std::size_t k = j + 1; k < 5; ++k)
                minors.push_back(det3({rows[i], rows[j], rows[k]}));
    return minors;
}

} // namespace

SurjectivityReport tangent_surjectivity_report(const TangentSurjection& t, std::uint64_t seed, int degree_cap) {
    for (const auto& triple : t.sections)
        for (const auto& f : triple)
            if (!f.is_zero() && f.degree() != 1)
                throw Error("tangent section lifts must be linear forms");
    return decide_empty_locus(tangent_minors(t), seed, degree_cap);
}

bool tangent_is_surjective(const TangentSurjection& t, std::uint64_t seed, int degree_cap) {
    return tangent_surjectivity_report(t, seed, degree_cap).surjective;
}

TangentSurjection tangent_random(std::uint64_t seed, int max_retries) {
    Rng rng = Rng(seed).fork("tangent-random");
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        TangentSurjection t;
        for (auto& triple : t.sections)
            for (auto& form : triple) {
                form = HomPoly(1);
                for (int v = 0; v < 3; ++v) {
                    Monomial m{0, 0, 0};
                    m[static_cast<std::size_t>(v)] = 1;
                    form.add_term(m, Rational(rng.next_int(-5, 5)));
                }
            }
        if (tangent_section_rank(t) != 5) continue;
        if (!tangent_is_surjective(t, seed)) continue;
        return t;
    }
    throw RetriesExhausted("tangent_random: no surjective draw within retry bound");
}

TangentClassResult tangent_class(const TangentSurjection& t, std::uint64_t seed) {
    if (!tangent_is_surjective(t, seed))
        throw Unsurjective("tangent_class: sections do not generate the tangent bundle");

    Rng rng = Rng(seed).fork("tangent-class");
    std::array<HomPoly, 3> coord = {HomPoly::variable(kVarX), HomPoly::variable(kVarY),
                                    HomPoly::variable(kVarZ)};
    for (int attempt = 0; attempt < 32; ++attempt) {
        std::array<Rational, 4> v;
        bool nonzero = false;
        for (auto& vi : v) {
            vi = Rational(rng.next_int(-10, 10));
            if (vi != 0) nonzero = true;
        }
        if (!nonzero) continue;

        // s(x) = sum_i v_i L_i(x); zero scheme of the induced section is
        // where s(x) is proportional to x
        std::array<HomPoly, 3> sform = {HomPoly(1), HomPoly(1), HomPoly(1)};
        for (std::size_t comp = 0; comp < 3; ++comp)
            for (std::size_t i = 0; i < 4; ++i) sform[comp] = sform[comp] + t.sections[i][comp] * v[i];

        std::vector<HomPoly> quadrics;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i + 1; j < 3; ++j)
                quadrics.push_back(sform[i] * coord[j] - sform[j] * coord[i]);

        SystemZeros sys;
        try {
            Rng local = rng.fork("system");
            sys = system_common_zeros(quadrics, local);
        } catch (const Error&) {
            continue;
        }
        if (sys.positive_dimensional || !sys.finite) continue;
        const Intersection& ix = *sys.finite;
        if (ix.max_multiplicity() > 1) continue; // non-reduced: v not generic

        long long q2 = ix.total();
        TangentClassResult out;
        out.cls = make_cohom_class(q2, 9 - q2);
        out.section_vector = v;
        out.zeros = ix;
        return out;
    }
    throw RetriesExhausted("tangent_class: no generic section vector found");
}

CollisionReport collision_scan(const SplitSurjection& s, std::uint64_t p, const ScanMode& mode) {
    SurjectivityReport surj = is_surjective(s);
    if (!surj.surjective)
        throw Unsurjective("collision_scan: matrix rejected before scan (not surjective)");

    CollisionReport rep;
    rep.prime = p;
    rep.mode = mode;
    rep.coprime_warning = std::gcd(s.a, s.b) != 1;

    std::array<std::array<FpPoly, 4>, 2> red;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 4; ++j) red[i][j] = FpPoly::reduce(s.m[i][j], p);

    using Key = std::array<std::uint64_t, 6>;
    std::map<Key, std::pair<long long, std::array<std::uint64_t, 3>>> images;

    auto visit = [&](const std::array<std::uint64_t, 3>& pt) {
        ++rep.points_scanned;
        Fp x(pt[0], p), y(pt[1], p), z(pt[2], p);
        std::array<Fp, 4> r0, r1;
        for (std::size_t j = 0; j < 4; ++j) {
            r0[j] = red[0][j].eval(x, y, z);
            r1[j] = red[1][j].eval(x, y, z);
        }
        std::array<Fp, 6> minor{Fp(0, p), Fp(0, p), Fp(0, p), Fp(0, p), Fp(0, p), Fp(0, p)};
        std::size_t idx = 0;
        int last = -1;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i + 1; j < 4; ++j) {
                minor[idx] = r0[i] * r1[j] - r0[j] * r1[i];
                if (!minor[idx].is_zero()) last = static_cast<int>(idx);
                ++idx;
            }
        if (last < 0) return true; // rank < 2 at this point
        ++rep.rank2_points;
        Fp inv = minor[static_cast<std::size_t>(last)].inverse();
        Key key{};
        for (std::size_t i = 0; i < 6; ++i) key[i] = (minor[i] * inv).value();
        auto [it, inserted] = images.try_emplace(key, std::make_pair(0LL, pt));
        it->second.first += 1;
        if (!inserted && rep.sample_collisions.size() < 8)
            rep.sample_collisions.emplace_back(it->second.second, pt);
        return true;
    };

    if (mode.full) {
        for_each_proj_point(p, visit);
    } else {
        Rng rng(mode.seed);
        for (long long i = 0; i < mode.sample_size; ++i) {
            std::uint64_t x = rng.next_u64() % p, y = rng.next_u64() % p, z = rng.next_u64() % p;
            if (x == 0 && y == 0 && z == 0) { --i; continue; }
            // canonicalize: leftmost nonzero coordinate scaled to 1
            std::array<Fp, 3> c = {Fp(x, p), Fp(y, p), Fp(z, p)};
            std::size_t first = c[0].is_zero() ? (c[1].is_zero() ? 2 : 1) : 0;
            Fp inv = c[first].inverse();
            visit({(c[0] * inv).value(), (c[1] * inv).value(), (c[2] * inv).value()});
        }
    }

    rep.distinct_images = static_cast<long long>(images.size());
    for (const auto& [key, entry] : images) rep.fiber_histogram[entry.first] += 1;
    return rep;
}

} // namespace grassmorph

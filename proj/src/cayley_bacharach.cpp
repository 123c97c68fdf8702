#include "grassmorph/cayley_bacharach.hpp"

#include <algorithm>
#include <set>

#include "grassmorph/errors.hpp"
#include "grassmorph/rng.hpp"

namespace grassmorph {

namespace {

long long binom2(int d) { return static_cast<long long>(d + 1) * (d + 2) / 2; }

QMatrix eval_rows(const std::vector<ProjPoint>& pts, int d) {
    const auto monos = monomials(d);
    QMatrix m(pts.size(), monos.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto& p = pts[i];
        for (std::size_t j = 0; j < monos.size(); ++j) {
            const auto& mo = monos[j];
            Rational v(1);
            if (mo[0]) v *= rat_pow(p[0], static_cast<unsigned>(mo[0]));
            if (mo[1]) v *= rat_pow(p[1], static_cast<unsigned>(mo[1]));
            if (mo[2]) v *= rat_pow(p[2], static_cast<unsigned>(mo[2]));
            m.at(i, j) = v;
        }
    }
    return m;
}

HomPoly form_from_coeffs(const std::vector<Rational>& coeffs, int d) {
    const auto monos = monomials(d);
    HomPoly f(d);
    for (std::size_t j = 0; j < monos.size(); ++j) f.add_term(monos[j], coeffs[j]);
    return f;
}

} // namespace

PointConfig make_point_config(std::vector<ProjPoint> points) {
    if (points.empty()) throw Error("point configuration must be nonempty");
    std::set<ProjPoint> seen;
    for (const auto& p : points)
        if (!seen.insert(p).second) throw Error("duplicate point " + p.str() + " in configuration");
    return PointConfig{std::move(points)};
}

QMatrix eval_matrix(const PointConfig& z, int d) {
    if (d < 0) throw Error("eval_matrix: negative degree");
    return eval_rows(z.points, d);
}

long long h0_ideal(const PointConfig& z, int d) {
    return binom2(d) - static_cast<long long>(rank(eval_matrix(z, d)));
}

CbReport cb_check(const PointConfig& z, int d) {
    if (d < 0) throw Error("cb_check: negative degree");
    const auto monos = monomials(d);
    QMatrix full = eval_matrix(z, d);
    std::size_t full_rank = rank(full);

    for (std::size_t skip = 0; skip < z.points.size(); ++skip) {
        std::vector<ProjPoint> rest;
        rest.reserve(z.points.size() - 1);
        for (std::size_t i = 0; i < z.points.size(); ++i)
            if (i != skip) rest.push_back(z.points[i]);
        QMatrix sub = eval_rows(rest, d);
        if (rank(sub) == full_rank) continue;

        // rank dropped: some degree-d form through Z - {p} misses p
        auto basis = kernel_basis(sub, Rational(0));
        for (const auto& coeffs : basis) {
            HomPoly f = form_from_coeffs(coeffs, d);
            if (f.eval(z.points[skip]) != 0) {
                CbReport rep;
                rep.holds = false;
                rep.failing_point = skip;
                rep.certificate = f;
                return rep;
            }
        }
        throw Error("internal: rank drop without certificate");
    }
    CbReport rep;
    rep.holds = true;
    return rep;
}

namespace {

/// Enumerates size-k subsets of [0, n), aborting when fn returns false.
template <typename Fn>
bool for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
    if (k > n) return true;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        if (!fn(idx)) return false;
        // next combination
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (idx[i] != i + n - k) {
                ++idx[i];
                for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return true;
        }
        if (k == 0) return true;
    }
}

long long binomial_ll(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > (1LL << 62) / 4) return 1LL << 62; // saturate
    }
    return r;
}

} // namespace

PositionReport verify_position(const PointConfig& z, int t, int c, bool strict_three, long long budget) {
    if (t < 1 || c < 1) throw Error("verify_position: t and c must be positive");
    const std::size_t n = z.points.size();
    PositionReport rep;

    if (strict_three) {
        bool ok = for_each_subset(n, 3, [&](const std::vector<std::size_t>& idx) {
            std::vector<ProjPoint> sub = {z.points[idx[0]], z.points[idx[1]], z.points[idx[2]]};
            if (rank(eval_rows(sub, 1)) <= 2) {
                PositionViolation v;
                v.r = 1;
                auto basis = kernel_basis(eval_rows(sub, 1), Rational(0));
                v.curve = form_from_coeffs(basis.front(), 1);
                v.on_curve = idx;
                rep.violation = v;
                return false;
            }
            return true;
        });
        if (!ok) { rep.ok = false; return rep; }
    }

    for (int r = 1; r <= t; ++r) {
        const long long threshold = static_cast<long long>(r) * c + 1;
        if (threshold > static_cast<long long>(n)) continue; // vacuous at this level

        if (c < r) {
            // generator subsets can be larger than a violating set here, so
            // fall back to direct rank tests on subsets of size r*c + 1
            const std::size_t k = static_cast<std::size_t>(threshold);
            if (binomial_ll(static_cast<long long>(n), threshold) > budget)
                throw CapExceeded("verify_position: direct subset enumeration exceeds the budget");
            bool ok = for_each_subset(n, k, [&](const std::vector<std::size_t>& idx) {
                std::vector<ProjPoint> sub;
                sub.reserve(k);
                for (std::size_t i : idx) sub.push_back(z.points[i]);
                QMatrix m = eval_rows(sub, r);
                auto basis = kernel_basis(m, Rational(0));
                if (basis.empty()) return true;
                PositionViolation v;
                v.r = r;
                v.curve = form_from_coeffs(basis.front(), r);
                v.on_curve = idx;
                rep.violation = v;
                return false;
            });
            if (!ok) { rep.ok = false; return rep; }
            continue;
        }

        const std::size_t gen_size = static_cast<std::size_t>(binom2(r)) - 1;
        if (binomial_ll(static_cast<long long>(n), static_cast<long long>(gen_size)) > budget)
            throw CapExceeded("verify_position: C(" + std::to_string(n) + "," + std::to_string(gen_size) +
                              ") generator subsets exceed the enumeration budget");

        bool ok = for_each_subset(n, gen_size, [&](const std::vector<std::size_t>& idx) {
            std::vector<ProjPoint> sub;
            sub.reserve(gen_size);
            for (std::size_t i : idx) sub.push_back(z.points[i]);
            QMatrix m = eval_rows(sub, r);
            auto basis = kernel_basis(m, Rational(0));
            if (basis.size() != 1) return true; // corank != 1: no unique generated curve
            HomPoly curve = form_from_coeffs(basis.front(), r);
            std::vector<std::size_t> on;
            for (std::size_t i = 0; i < n; ++i)
                if (curve.eval(z.points[i]) == 0) on.push_back(i);
            if (static_cast<long long>(on.size()) >= threshold) {
                PositionViolation v;
                v.r = r;
                v.curve = curve;
                v.on_curve = on;
                rep.violation = v;
                return false;
            }
            return true;
        });
        if (!ok) { rep.ok = false; return rep; }
    }
    rep.ok = true;
    return rep;
}

PointConfig gen_position_points(int ell, int t, int c, std::uint64_t seed, bool strict_three,
                                long long budget, int max_retries) {
    if (ell < 1) throw Error("gen_position_points: need at least one point");
    Rng rng = Rng(seed).fork("gen-position");
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        std::set<ProjPoint> seen;
        std::vector<ProjPoint> pts;
        int guard = 0;
        while (static_cast<int>(pts.size()) < ell && guard < 100 * ell) {
            ++guard;
            ProjPoint p{Rational(rng.next_int(-20, 20)), Rational(rng.next_int(-20, 20)), Rational(1)};
            if (seen.insert(p).second) pts.push_back(p);
        }
        if (static_cast<int>(pts.size()) < ell) continue;
        PointConfig cfg{pts};
        if (verify_position(cfg, t, c, strict_three, budget).ok) return cfg;
    }
    throw RetriesExhausted("gen_position_points: no admissible configuration within retry bound");
}

} // namespace grassmorph

#include "grassmorph/classify.hpp"

#include <algorithm>

#include "grassmorph/errors.hpp"
#include "grassmorph/rng.hpp"

namespace grassmorph {

std::string status_name(Status s) {
    switch (s) {
        case Status::Realizable: return "Realizable";
        case Status::NotRealizable: return "NotRealizable";
        case Status::Unknown: return "Unknown";
    }
    return "?";
}

std::string WitnessRecipe::str() const {
    std::string inner;
    switch (kind) {
        case Kind::Split: inner = "Split(" + std::to_string(a) + "," + std::to_string(b) + ")"; break;
        case Kind::TrivialPlane: inner = "TrivialPlane"; break;
        case Kind::ConstantExcluded: inner = "ConstantExcluded"; break;
        case Kind::FiniteSelfMap: inner = "FiniteSelfMap(" + std::to_string(n) + ")"; break;
        case Kind::CbPoints: {
            std::string arr = arrangement == CbArrangement::OnCurve
                                  ? "on-curve-deg-" + std::to_string(t)
                                  : (arrangement == CbArrangement::StrictThree ? "strict-three"
                                                                               : "general-position-t-" + std::to_string(t));
            inner = "CbPoints(ell=" + std::to_string(ell) + ", c=" + std::to_string(c) + ", " + arr + ")";
            break;
        }
    }
    return dual ? "Dual(" + inner + ")" : inner;
}

std::set<std::pair<long long, long long>> decomposable_classes(int c) {
    if (c < 1) throw Error("decomposable_classes: c must be positive");
    std::set<std::pair<long long, long long>> out;
    for (int a = 0; 2 * a <= c; ++a) {
        long long ab = static_cast<long long>(a) * (c - a);
        out.emplace(ab, static_cast<long long>(c) * c - ab);
    }
    return out;
}

std::set<std::pair<long long, long long>> embedded_classes() {
    return {{1, 0}, {0, 1}, {1, 3}, {3, 1}};
}

bool in_nonexistence_interval(int c, long long q2) {
    if (c < 4) return false;
    long long cc = static_cast<long long>(c) * c;
    return (1 <= q2 && q2 <= c - 2) || (cc - c + 2 <= q2 && q2 <= cc - 1);
}

std::optional<std::pair<int, bool>> existence_interval_part3(int c, long long ell) {
    if (c < 5) return std::nullopt;
    const long long half_bound = (static_cast<long long>(c) * c - 3 * c + 2) / 2;
    const int k = static_cast<int>(half_bound / c);
    for (int t = 1; t <= k; ++t)
        if (static_cast<long long>(t) * (c - 3) + 2 <= ell && ell <= static_cast<long long>(t) * c)
            return std::make_pair(t, false);
    if (half_bound + 1 <= ell && ell <= static_cast<long long>(c) * c / 2)
        return std::make_pair(c - 3, true);
    return std::nullopt;
}

namespace {

/// Split pair a <= b with a + b = c and a*b = target, when it exists.
std::optional<std::pair<int, int>> split_pair(int c, long long target) {
    long long disc = static_cast<long long>(c) * c - 4 * target;
    if (disc < 0) return std::nullopt;
    long long r = perfect_square_root(disc);
    if (r < 0) return std::nullopt;
    if ((c - r) % 2 != 0) return std::nullopt;
    long long a = (c - r) / 2, b = (c + r) / 2;
    if (a < 1 || b < 1) return std::nullopt;
    return std::make_pair(static_cast<int>(a), static_cast<int>(b));
}

WitnessRecipe cb_recipe(long long ell, int c, bool dual) {
    WitnessRecipe w;
    w.kind = WitnessRecipe::Kind::CbPoints;
    w.dual = dual;
    w.ell = static_cast<int>(ell);
    w.c = c;
    if (c <= 3) {
        w.t = 1;
        w.arrangement = CbArrangement::GeneralPosition;
        return w;
    }
    if (c == 4) {
        if (ell == 3) {
            w.t = 1;
            w.arrangement = CbArrangement::OnCurve; // three points on a line
        } else {
            w.t = 1;
            w.arrangement = CbArrangement::StrictThree;
        }
        return w;
    }
    auto part = existence_interval_part3(c, ell);
    if (!part) throw Error("internal: cb_recipe outside existence intervals");
    w.t = part->first;
    w.arrangement = part->second ? CbArrangement::GeneralPosition : CbArrangement::OnCurve;
    return w;
}

ClassVerdict decide(long long q2, long long s2, bool use_decomposable) {
    ClassVerdict v;
    if (q2 < 0 || s2 < 0) throw Error("realizability: class components must be nonnegative");

    if (q2 + s2 == 0) {
        v.status = Status::NotRealizable;
        v.reason = "lemma-le21-nonconstant"; // non-constant morphisms have c > 0
        WitnessRecipe w;
        w.kind = WitnessRecipe::Kind::ConstantExcluded;
        v.witness = w;
        return v;
    }
    long long c_ll = perfect_square_root(q2 + s2);
    if (c_ll < 0) {
        v.status = Status::NotRealizable;
        v.reason = "lemma-le21-square";
        return v;
    }
    const int c = static_cast<int>(c_ll);

    if (q2 == 0 || s2 == 0) {
        v.status = Status::Realizable;
        v.reason = "thm-exist-0";
        WitnessRecipe w;
        if (c == 1) {
            w.kind = WitnessRecipe::Kind::TrivialPlane;
            w.dual = (q2 != 0); // (0,1) is the plane of 2-planes through L; (1,0) its dual
        } else {
            w.kind = WitnessRecipe::Kind::FiniteSelfMap;
            w.n = c;
            w.dual = (q2 != 0);
        }
        v.witness = w;
        return v;
    }

    if (use_decomposable) {
        if (auto p = split_pair(c, q2)) {
            v.status = Status::Realizable;
            v.reason = "lemma-le22";
            WitnessRecipe w;
            w.kind = WitnessRecipe::Kind::Split;
            w.a = p->first;
            w.b = p->second;
            v.witness = w;
            return v;
        }
        if (auto p = split_pair(c, s2)) {
            v.status = Status::Realizable;
            v.reason = "lemma-le22-dual";
            WitnessRecipe w;
            w.kind = WitnessRecipe::Kind::Split;
            w.a = p->first;
            w.b = p->second;
            w.dual = true;
            v.witness = w;
            return v;
        }
    }

    const long long ell = std::min(q2, s2);
    const bool dualized = (ell != q2);

    if (c <= 3) {
        v.status = Status::Realizable;
        v.reason = "thm-exist-1";
        v.witness = cb_recipe(ell, c, dualized);
        return v;
    }

    if (in_nonexistence_interval(c, q2)) {
        v.status = Status::NotRealizable;
        v.reason = (q2 == 1 && s2 == 15) ? "lemma-re1" : "thm-nonexist";
        return v;
    }

    if (c == 4) {
        if (3 <= ell) { // ell <= 8 automatically; q2 in [3, 13]
            v.status = Status::Realizable;
            v.reason = "thm-exist-2";
            v.witness = cb_recipe(ell, c, dualized);
            return v;
        }
        v.status = Status::Unknown;
        v.reason = "remark-re-open";
        return v;
    }

    if (auto part = existence_interval_part3(c, ell)) {
        v.status = Status::Realizable;
        v.reason = part->second ? "thm-exist-3-top" : ("thm-exist-3-t=" + std::to_string(part->first));
        v.witness = cb_recipe(ell, c, dualized);
        return v;
    }

    v.status = Status::Unknown;
    v.reason = "remark-re-open";
    return v;
}

} // namespace

ClassVerdict realizability(long long q2, long long s2) { return decide(q2, s2, true); }

ClassVerdict realizability_by_intervals(long long q2, long long s2) { return decide(q2, s2, false); }

long long TableRow::count(Status s) const {
    long long n = 0;
    for (const auto& v : verdicts)
        if (v.status == s) ++n;
    return n;
}

std::vector<long long> TableRow::with_status(Status s) const {
    std::vector<long long> out;
    for (std::size_t q2 = 0; q2 < verdicts.size(); ++q2)
        if (verdicts[q2].status == s) out.push_back(static_cast<long long>(q2));
    return out;
}

std::vector<TableRow> classification_table(int c_max, bool use_decomposable_pass) {
    if (c_max < 1) throw Error("classification_table: c_max must be positive");
    std::vector<TableRow> rows;
    for (int c = 1; c <= c_max; ++c) {
        TableRow row;
        row.c = c;
        const long long cc = static_cast<long long>(c) * c;
        for (long long q2 = 0; q2 <= cc; ++q2)
            row.verdicts.push_back(decide(q2, cc - q2, use_decomposable_pass));
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

std::array<std::array<Rational, 3>, 3> random_integer_transform(Rng& rng) {
    for (;;) {
        std::array<std::array<Rational, 3>, 3> a{};
        QMatrix m(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                Rational v(rng.next_int(-4, 4));
                a[i][j] = v;
                m.at(i, j) = v;
            }
        if (det(m, Rational(0)) != 0) return a;
    }
}

ProjPoint transform_point(const std::array<std::array<Rational, 3>, 3>& a, const Rational& x,
                          const Rational& y, const Rational& z) {
    return ProjPoint(a[0][0] * x + a[0][1] * y + a[0][2] * z,
                     a[1][0] * x + a[1][1] * y + a[1][2] * z,
                     a[2][0] * x + a[2][1] * y + a[2][2] * z);
}

/// ell distinct points on a random irreducible rational curve of degree t:
/// a line (t = 1), the conic XZ - Y^2 (t = 2) or the cuspidal cubic
/// X^3 - Y^2 Z (t = 3), moved by a random projective transformation.
std::vector<ProjPoint> points_on_curve(int t, int ell, Rng& rng) {
    auto a = random_integer_transform(rng);
    std::set<Rational> params;
    int guard = 0;
    while (static_cast<int>(params.size()) < ell && guard < 100 * ell) {
        ++guard;
        Rational s(rng.next_int(-30, 30));
        if (t == 3 && s == 0) continue; // the cusp
        params.insert(s);
    }
    if (static_cast<int>(params.size()) < ell)
        throw RetriesExhausted("points_on_curve: parameter draw failed");
    std::vector<ProjPoint> pts;
    for (const Rational& s : params) {
        switch (t) {
            case 1: pts.push_back(transform_point(a, s, Rational(1), Rational(0) - s)); break;
            case 2: pts.push_back(transform_point(a, Rational(1), s, s * s)); break;
            case 3: pts.push_back(transform_point(a, s * s, s * s * s, Rational(1))); break;
            default: throw CapExceeded("points_on_curve: no rational parametrization shipped for degree " +
                                       std::to_string(t));
        }
    }
    return pts;
}

} // namespace

PointConfig materialize_cb_points(const WitnessRecipe& recipe, std::uint64_t seed, long long budget,
                                  int max_retries) {
    if (recipe.kind != WitnessRecipe::Kind::CbPoints)
        throw Error("materialize_cb_points: recipe is not CbPoints");
    const int c = recipe.c;
    const int ell = recipe.ell;
    const int d = c - 3;
    Rng rng = Rng(seed).fork("materialize-cb");

    for (int attempt = 0; attempt < max_retries; ++attempt) {
        std::optional<PointConfig> cfg;
        try {
            switch (recipe.arrangement) {
                case CbArrangement::OnCurve:
                    cfg = make_point_config(points_on_curve(recipe.t, ell, rng));
                    break;
                case CbArrangement::StrictThree:
                    cfg = gen_position_points(ell, 1, c, rng.next_u64(), true, budget, 8);
                    break;
                case CbArrangement::GeneralPosition:
                    cfg = gen_position_points(ell, std::max(recipe.t, 1), c, rng.next_u64(), false, budget, 8);
                    break;
            }
        } catch (const RetriesExhausted&) {
            continue;
        }
        if (!cfg) continue;
        if (recipe.arrangement == CbArrangement::OnCurve &&
            !verify_position(*cfg, std::max(recipe.t, 1), c, false, budget).ok)
            continue;
        // twist c - 3 is only a meaningful CB constraint from c = 4 up
        if (c >= 4 && !cb_check(*cfg, d).holds) continue;
        return *cfg;
    }
    throw RetriesExhausted("materialize_cb_points: no verified configuration within retry bound");
}

} // namespace grassmorph

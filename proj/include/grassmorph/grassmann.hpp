#ifndef GRASSMORPH_GRASSMANN_HPP
#define GRASSMORPH_GRASSMANN_HPP

#include <array>
#include <string>

#include "grassmorph/matrix.hpp"
#include "grassmorph/rational.hpp"

namespace grassmorph {

/// Point of Gr(2, C^4) in Plücker coordinates (p01, p02, p03, p12, p13,
/// p23), normalized so the last nonzero coordinate is 1. Satisfies the
/// Plücker relation p01*p23 - p02*p13 + p03*p12 = 0 exactly.
class PlueckerPoint {
public:
    explicit PlueckerPoint(const std::array<Rational, 6>& coords);

    const Rational& operator[](std::size_t i) const { return p_[i]; }
    const std::array<Rational, 6>& coords() const { return p_; }

    friend bool operator==(const PlueckerPoint& a, const PlueckerPoint& b) { return a.p_ == b.p_; }
    friend bool operator!=(const PlueckerPoint& a, const PlueckerPoint& b) { return !(a == b); }
    friend bool operator<(const PlueckerPoint& a, const PlueckerPoint& b) { return a.p_ < b.p_; }

    std::string str() const;

private:
    std::array<Rational, 6> p_;
};

/// The six 2x2 minors of a rank-2 matrix presenting a row span, in the
/// fixed index order 01 < 02 < 03 < 12 < 13 < 23.
/// Throws RankDeficient when all six minors vanish.
PlueckerPoint pluecker_from_rows(const QMatrix& m);

/// Exact check of p01*p23 - p02*p13 + p03*p12 = 0.
bool check_relation(const PlueckerPoint& q);

/// The annihilator 2-plane in the dual space:
/// (p01, p02, p03, p12, p13, p23) -> (p23, -p13, p12, p03, -p02, p01).
/// An involution that preserves the Plücker relation; realizes the dual
/// morphism at the level of points.
PlueckerPoint hodge_dual(const PlueckerPoint& q);

/// Cohomology class of a morphism P^2 -> Gr(2, C^4): coefficients of
/// c2(Q) and c2(S). Components are nonnegative and sum to a perfect square
/// c^2 with c >= 1.
struct CohomClass {
    long long q2 = 0;
    long long s2 = 0;

    long long c() const;

    friend bool operator==(const CohomClass& a, const CohomClass& b) {
        return a.q2 == b.q2 && a.s2 == b.s2;
    }
};

/// Verifies the CohomClass invariants, throwing on violation.
CohomClass make_cohom_class(long long q2, long long s2);

/// q2 + s2 as a perfect square root, or -1 when not a perfect square.
long long perfect_square_root(long long n);

} // namespace grassmorph

#endif

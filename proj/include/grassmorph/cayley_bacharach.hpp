#ifndef GRASSMORPH_CAYLEY_BACHARACH_HPP
#define GRASSMORPH_CAYLEY_BACHARACH_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "grassmorph/matrix.hpp"
#include "grassmorph/poly.hpp"

namespace grassmorph {

/// A reduced configuration of distinct points of P^2 over Q.
struct PointConfig {
    std::vector<ProjPoint> points;
};

/// Validates distinctness (after normalization) and nonemptiness.
PointConfig make_point_config(std::vector<ProjPoint> points);

/// The l x C(d+2,2) evaluation matrix: row i holds the values of the
/// degree-d monomial basis (graded-lex) at point i.
QMatrix eval_matrix(const PointConfig& z, int d);

/// dim of degree-d forms vanishing on Z: C(d+2,2) - rank(eval_matrix).
long long h0_ideal(const PointConfig& z, int d);

/// Outcome of the Cayley-Bacharach rank test at twist d. When it fails the
/// certificate is a degree-d form vanishing at every point of Z except the
/// failing one, where it is nonzero — exactly checkable.
struct CbReport {
    bool holds = false;
    std::optional<std::size_t> failing_point;
    std::optional<HomPoly> certificate;
};

/// CB holds iff for every p in Z the forms of degree d through Z - {p} all
/// pass through p, i.e. rank(eval_matrix(Z)) == rank(eval_matrix(Z - p)).
CbReport cb_check(const PointConfig& z, int d);

/// Violation found by verify_position: a degree-r curve through too many of
/// the points.
struct PositionViolation {
    int r = 0;
    HomPoly curve;
    std::vector<std::size_t> on_curve;
};

struct PositionReport {
    bool ok = false;
    std::optional<PositionViolation> violation;
};

/// Checks that no r*c + 1 of the points lie on a curve of degree r for any
/// 1 <= r <= t (and, with strict_three, that no 3 points are collinear).
/// Candidate curves are generated from subsets of size C(r+2,2) - 1 whose
/// evaluation matrix has corank 1; levels run in ascending r so reducible
/// curves are caught at lower degree. Throws CapExceeded when the subset
/// enumeration exceeds the budget.
PositionReport verify_position(const PointConfig& z, int t, int c, bool strict_three,
                               long long budget = 1000000);

/// Seeded random small-integer points, redrawn until verify_position
/// passes with the same parameters.
PointConfig gen_position_points(int ell, int t, int c, std::uint64_t seed, bool strict_three = false,
                                long long budget = 1000000, int max_retries = 64);

} // namespace grassmorph

#endif

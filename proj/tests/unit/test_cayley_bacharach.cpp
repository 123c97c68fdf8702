#include <doctest.h>

#include "grassmorph/cayley_bacharach.hpp"
#include "grassmorph/rng.hpp"

using namespace grassmorph;

namespace {

ProjPoint pt(long long x, long long y, long long z) {
    return ProjPoint(Rational(x), Rational(y), Rational(z));
}

PointConfig collinear3() { return make_point_config({pt(0, 0, 1), pt(1, 1, 1), pt(2, 2, 1)}); }

} // namespace

TEST_CASE("eval_matrix shapes and ranks") {
    PointConfig one = make_point_config({pt(3, 5, 1)});
    QMatrix m = eval_matrix(one, 1);
    CHECK(m.rows() == 1);
    CHECK(m.cols() == 3);
    CHECK(m.at(0, 0) == 3);
    CHECK(m.at(0, 1) == 5);
    CHECK(m.at(0, 2) == 1);

    CHECK(rank(eval_matrix(collinear3(), 1)) == 2);

    PointConfig tri = make_point_config({pt(0, 0, 1), pt(1, 0, 1), pt(0, 1, 1)});
    CHECK(rank(eval_matrix(tri, 1)) == 3);
}

TEST_CASE("h0_ideal: pencils and lines") {
    PointConfig one = make_point_config({pt(2, -1, 1)});
    CHECK(h0_ideal(one, 1) == 2); // pencil of lines through a point

    CHECK(h0_ideal(collinear3(), 1) == 1); // just the line

    PointConfig tri = make_point_config({pt(0, 0, 1), pt(1, 0, 1), pt(0, 1, 1)});
    CHECK(h0_ideal(tri, 1) == 0);
}

TEST_CASE("cb_check: three collinear points satisfy CB at d = 1") {
    CbReport rep = cb_check(collinear3(), 1);
    CHECK(rep.holds);
}

TEST_CASE("cb_check: a single point fails at d = 1 with a line certificate") {
    PointConfig one = make_point_config({pt(2, 3, 1)});
    CbReport rep = cb_check(one, 1);
    CHECK_FALSE(rep.holds);
    REQUIRE(rep.failing_point.has_value());
    CHECK(*rep.failing_point == 0);
    REQUIRE(rep.certificate.has_value());
    CHECK(rep.certificate->degree() == 1);
    CHECK(rep.certificate->eval(one.points[0]) != 0); // a line missing the point
}

TEST_CASE("cb_check: certificates are exact on every failing config") {
    Rng rng(31);
    for (int c : {4, 5, 6}) {
        for (int trial = 0; trial < 10; ++trial) {
            int ell = static_cast<int>(rng.next_int(1, c - 2));
            PointConfig z = gen_position_points(ell, 1, c, rng.next_u64());
            CbReport rep = cb_check(z, c - 3);
            // any scheme of length <= c-2 imposes independent conditions in
            // degree c-3, so CB must fail
            CHECK_FALSE(rep.holds);
            REQUIRE(rep.failing_point.has_value());
            REQUIRE(rep.certificate.has_value());
            for (std::size_t i = 0; i < z.points.size(); ++i) {
                if (i == *rep.failing_point)
                    CHECK(rep.certificate->eval(z.points[i]) != 0);
                else
                    CHECK(rep.certificate->eval(z.points[i]) == 0);
            }
        }
    }
}

TEST_CASE("rank monotonicity when removing a point") {
    Rng rng(77);
    for (int trial = 0; trial < 10; ++trial) {
        int ell = static_cast<int>(rng.next_int(2, 8));
        int d = static_cast<int>(rng.next_int(1, 3));
        PointConfig z = gen_position_points(ell, 1, std::max(2, d), rng.next_u64());
        std::size_t full = rank(eval_matrix(z, d));
        for (std::size_t skip = 0; skip < z.points.size(); ++skip) {
            std::vector<ProjPoint> rest;
            for (std::size_t i = 0; i < z.points.size(); ++i)
                if (i != skip) rest.push_back(z.points[i]);
            std::size_t sub = rank(eval_matrix(make_point_config(rest), d));
            CHECK(full - sub <= 1);
        }
    }
}

TEST_CASE("h0_ideal is non-increasing in the point count") {
    Rng rng(78);
    PointConfig z = gen_position_points(7, 1, 4, 5);
    for (int d = 1; d <= 3; ++d) {
        long long prev = -1;
        for (std::size_t n = 1; n <= z.points.size(); ++n) {
            PointConfig head = make_point_config(
                std::vector<ProjPoint>(z.points.begin(), z.points.begin() + static_cast<long>(n)));
            long long h = h0_ideal(head, d);
            if (prev >= 0) CHECK(h <= prev);
            long long lower = static_cast<long long>(d + 1) * (d + 2) / 2 - static_cast<long long>(n);
            CHECK(h >= lower);
            prev = h;
        }
    }
}

TEST_CASE("verify_position: collinear triples and the conic violation") {
    PositionReport bad = verify_position(collinear3(), 1, 1, true);
    CHECK_FALSE(bad.ok);
    REQUIRE(bad.violation.has_value());
    CHECK(bad.violation->r == 1);
    CHECK(bad.violation->on_curve.size() >= 3);

    PointConfig quad = make_point_config({pt(0, 0, 1), pt(1, 0, 1), pt(0, 1, 1), pt(1, 1, 1)});
    CHECK(verify_position(quad, 1, 1, true).ok);

    // 11 points on the conic XZ = Y^2 plus one off it: a degree-2 violation
    std::vector<ProjPoint> pts;
    for (long long s = -5; s <= 5; ++s) pts.push_back(ProjPoint(Rational(1), Rational(s), Rational(s * s)));
    pts.push_back(pt(1, 1, 0));
    PositionReport rep = verify_position(make_point_config(pts), 2, 5, false);
    CHECK_FALSE(rep.ok);
    REQUIRE(rep.violation.has_value());
    CHECK(rep.violation->r == 2);
    CHECK(rep.violation->on_curve.size() == 11);
    // the witness conic contains exactly the parametrized points
    for (long long s = -5; s <= 5; ++s)
        CHECK(rep.violation->curve.eval(ProjPoint(Rational(1), Rational(s), Rational(s * s))) == 0);
}

TEST_CASE("verify_position: vacuous condition with few points") {
    PointConfig quad = make_point_config({pt(0, 0, 1), pt(1, 0, 1), pt(0, 1, 1), pt(1, 1, 1)});
    CHECK(verify_position(quad, 1, 5, false).ok); // no 6 on a line is vacuous for 4 points
}

TEST_CASE("gen_position_points output passes verify_position") {
    Rng rng(79);
    for (int trial = 0; trial < 5; ++trial) {
        int ell = static_cast<int>(rng.next_int(5, 12));
        PointConfig z = gen_position_points(ell, 2, 5, rng.next_u64());
        CHECK(static_cast<int>(z.points.size()) == ell);
        CHECK(verify_position(z, 2, 5, false).ok);
    }
}

TEST_CASE("point config rejects duplicates") {
    CHECK_THROWS(make_point_config({pt(1, 2, 1), pt(2, 4, 2)})); // same point, different scale
}

#include <doctest.h>

#include "grassmorph/intersect.hpp"
#include "grassmorph/resultant.hpp"
#include "grassmorph/rng.hpp"

using namespace grassmorph;

namespace {

HomPoly X() { return HomPoly::variable(kVarX); }
HomPoly Y() { return HomPoly::variable(kVarY); }
HomPoly Z() { return HomPoly::variable(kVarZ); }

bool proportional(const HomPoly& a, const HomPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return normalize_monic(a) == normalize_monic(b);
}

HomPoly random_form(Rng& rng, int d) {
    HomPoly f(d);
    for (const auto& m : monomials(d))
        f.add_term(m, Rational(rng.next_int(-4, 4)));
    return f;
}

} // namespace

TEST_CASE("sylvester_resultant: two lines") {
    HomPoly r = sylvester_resultant(X() - Z(), Y() - Z(), kVarZ);
    CHECK(proportional(r, X() - Y()));
}

TEST_CASE("sylvester_resultant: equal inputs vanish") {
    HomPoly f = X() * Z() - Y() * Y();
    CHECK(sylvester_resultant(f, f, kVarZ).is_zero());
}

TEST_CASE("sylvester_resultant: the two conics") {
    // Res_Z(X^2 - YZ, XY - Z^2) vanishes exactly at the projections of the
    // four intersection points: X = 0 and the three cube roots of Y^3/X^3.
    HomPoly f = X() * X() - Y() * Z();
    HomPoly g = X() * Y() - Z() * Z();
    HomPoly r = sylvester_resultant(f, g, kVarZ);
    CHECK(r.degree() == 4);
    CHECK(r.degree_in(kVarZ) == 0);
    HomPoly expected = X() * (pow(X(), 3) - pow(Y(), 3)); // hand elimination
    CHECK(proportional(r, expected));
}

TEST_CASE("common_zeros: two lines meet once") {
    Rng rng(1);
    auto ix = common_zeros(X(), Y(), rng);
    CHECK(ix.total() == 1);
    REQUIRE(ix.rational.size() == 1);
    CHECK(ix.rational[0].point == ProjPoint(Rational(0), Rational(0), Rational(1)));
    CHECK(ix.rational[0].multiplicity == 1);
    CHECK(ix.residual.empty());
}

TEST_CASE("common_zeros: double line against a line") {
    Rng rng(2);
    auto ix = common_zeros(X() * X(), Y(), rng);
    CHECK(ix.total() == 2);
    REQUIRE(ix.rational.size() == 1);
    CHECK(ix.rational[0].point == ProjPoint(Rational(0), Rational(0), Rational(1)));
    CHECK(ix.rational[0].multiplicity == 2);
}

TEST_CASE("common_zeros: the two conics, rational and residual parts") {
    Rng rng(3);
    HomPoly f = X() * X() - Y() * Z();
    HomPoly g = X() * Y() - Z() * Z();
    auto ix = common_zeros(f, g, rng);
    CHECK(ix.total() == 4);
    // rational zeros: (0:1:0) and (1:1:1); two further conjugate zeros
    REQUIRE(ix.rational.size() == 2);
    for (const auto& z : ix.rational) {
        CHECK(z.multiplicity == 1);
        CHECK(f.eval(z.point) == 0);
        CHECK(g.eval(z.point) == 0);
    }
    long long residual_count = 0;
    for (const auto& b : ix.residual) residual_count += b.count() * b.multiplicity;
    CHECK(residual_count == 2);
}

TEST_CASE("common_zeros: common component is rejected") {
    Rng rng(4);
    HomPoly f = X() * Y();
    HomPoly g = X() * Z();
    CHECK_THROWS_AS(common_zeros(f, g, rng), CommonComponent);
}

TEST_CASE("common_zeros: Bezout totals for random coprime pairs") {
    Rng rng(99);
    int done = 0;
    while (done < 50) {
        int da = static_cast<int>(rng.next_int(1, 4));
        int db = static_cast<int>(rng.next_int(1, 4));
        HomPoly f = random_form(rng, da);
        HomPoly g = random_form(rng, db);
        if (f.is_zero() || g.is_zero()) continue;
        if (gcd(f, g).degree() != 0) continue;
        auto ix = common_zeros(f, g, rng);
        CHECK(ix.total() == static_cast<long long>(da) * db);
        for (const auto& z : ix.rational) {
            CHECK(f.eval(z.point) == 0);
            CHECK(g.eval(z.point) == 0);
        }
        ++done;
    }
}

TEST_CASE("filter_by_form keeps exactly the zeros of the extra form") {
    Rng rng(5);
    // V(XY, YZ+X^2) and the filter X: common zeros of all three
    HomPoly f = X() * Y();
    HomPoly g = Y() * Z() + X() * X();
    auto ix = common_zeros(f, g, rng);
    CHECK(ix.total() == 4);
    Intersection filtered = ix;
    filter_by_form(filtered, X());
    // X = 0, XY = 0, YZ + X^2 = 0 leaves (0:1:0) and (0:0:1)
    CHECK(filtered.total() >= 2);
    for (const auto& z : filtered.rational) CHECK(X().eval(z.point) == 0);
}

TEST_CASE("system_common_zeros: certified emptiness and witnesses") {
    Rng rng(6);
    // X, Y, Z have no common zero
    SystemZeros sys = system_common_zeros({X(), Y(), Z()}, rng);
    CHECK(sys.empty);

    // X, Y, X+Y share (0:0:1)
    Rng rng2(7);
    SystemZeros sys2 = system_common_zeros({X(), Y(), X() + Y()}, rng2);
    CHECK_FALSE(sys2.empty);
    REQUIRE(sys2.witness.has_value());
    CHECK(*sys2.witness == ProjPoint(Rational(0), Rational(0), Rational(1)));

    // common factor: positive-dimensional locus
    Rng rng3(8);
    SystemZeros sys3 = system_common_zeros({X() * Y(), X() * Z()}, rng3);
    CHECK_FALSE(sys3.empty);
    REQUIRE(sys3.positive_dimensional.has_value());
    CHECK(proportional(*sys3.positive_dimensional, X()));
}

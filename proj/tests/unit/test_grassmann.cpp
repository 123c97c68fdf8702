#include <doctest.h>

#include "grassmorph/grassmann.hpp"
#include "grassmorph/rng.hpp"

using namespace grassmorph;

namespace {

QMatrix rows2x4(const std::vector<std::vector<long long>>& rows) {
    QMatrix m(2, 4);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 4; ++j) m.at(i, j) = Rational(rows[i][j]);
    return m;
}

QMatrix random_rank2(Rng& rng) {
    for (;;) {
        QMatrix m(2, 4);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 4; ++j) m.at(i, j) = Rational(rng.next_int(-5, 5));
        if (rank(m) == 2) return m;
    }
}

} // namespace

TEST_CASE("pluecker_from_rows: coordinate plane and Veronese value") {
    PlueckerPoint e = pluecker_from_rows(rows2x4({{1, 0, 0, 0}, {0, 1, 0, 0}}));
    CHECK(e == PlueckerPoint({Rational(1), Rational(0), Rational(0), Rational(0), Rational(0), Rational(0)}));

    // Veronese matrix at (1:1:1): rows (1,1,1,1), (1,1,1,0), minors (0,0,-1,0,-1,-1)
    PlueckerPoint v = pluecker_from_rows(rows2x4({{1, 1, 1, 1}, {1, 1, 1, 0}}));
    CHECK(v == PlueckerPoint({Rational(0), Rational(0), Rational(-1), Rational(0), Rational(-1), Rational(-1)}));
    CHECK(check_relation(v));
}

TEST_CASE("pluecker_from_rows: rank-1 matrix is rejected") {
    CHECK_THROWS_AS(pluecker_from_rows(rows2x4({{1, 1, 1, 1}, {2, 2, 2, 2}})), RankDeficient);
}

TEST_CASE("check_relation: explicit values") {
    CHECK(check_relation(PlueckerPoint({Rational(1), Rational(0), Rational(0), Rational(0), Rational(0), Rational(0)})));
    CHECK_FALSE(check_relation(PlueckerPoint({Rational(1), Rational(0), Rational(0), Rational(0), Rational(0), Rational(1)})));
}

TEST_CASE("every constructed point satisfies the relation") {
    Rng rng(100);
    for (int trial = 0; trial < 50; ++trial)
        CHECK(check_relation(pluecker_from_rows(random_rank2(rng))));
}

TEST_CASE("hodge_dual: complementary plane, involution, relation") {
    PlueckerPoint e = PlueckerPoint({Rational(1), Rational(0), Rational(0), Rational(0), Rational(0), Rational(0)});
    PlueckerPoint d = hodge_dual(e);
    CHECK(d == PlueckerPoint({Rational(0), Rational(0), Rational(0), Rational(0), Rational(0), Rational(1)}));

    Rng rng(101);
    for (int trial = 0; trial < 100; ++trial) {
        PlueckerPoint p = pluecker_from_rows(random_rank2(rng));
        PlueckerPoint q = hodge_dual(p);
        CHECK(check_relation(q));
        CHECK(hodge_dual(q) == p);
    }
}

TEST_CASE("hodge_dual equals the Plücker point of the kernel plane") {
    Rng rng(102);
    for (int trial = 0; trial < 20; ++trial) {
        QMatrix m = random_rank2(rng);
        auto ker = kernel_basis(m, Rational(0));
        REQUIRE(ker.size() == 2);
        QMatrix n(2, 4);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 4; ++j) n.at(i, j) = ker[i][j];
        CHECK(hodge_dual(pluecker_from_rows(m)) == pluecker_from_rows(n));
    }
}

TEST_CASE("pluecker_from_rows is GL2-invariant") {
    Rng rng(103);
    for (int trial = 0; trial < 20; ++trial) {
        QMatrix m = random_rank2(rng);
        Rational a(rng.next_int(-4, 4)), b(rng.next_int(-4, 4)), c(rng.next_int(-4, 4)), d(rng.next_int(-4, 4));
        if (a * d - b * c == 0) { --trial; continue; }
        QMatrix g(2, 4);
        for (std::size_t j = 0; j < 4; ++j) {
            g.at(0, j) = a * m.at(0, j) + b * m.at(1, j);
            g.at(1, j) = c * m.at(0, j) + d * m.at(1, j);
        }
        CHECK(pluecker_from_rows(g) == pluecker_from_rows(m));
    }
}

TEST_CASE("CohomClass invariants") {
    CHECK(make_cohom_class(1, 3).c() == 2);
    CHECK_THROWS(make_cohom_class(3, 5)); // 8 is not a perfect square
    CHECK_THROWS(make_cohom_class(0, 0));
    CHECK(perfect_square_root(49) == 7);
    CHECK(perfect_square_root(48) == -1);
}

#include <doctest.h>

#include <set>

#include "grassmorph/classify.hpp"
#include "grassmorph/morphisms.hpp"

using namespace grassmorph;

TEST_CASE("realizability: headline classes") {
    ClassVerdict v = realizability(1, 15);
    CHECK(v.status == Status::NotRealizable);
    CHECK(v.reason == "lemma-re1");

    ClassVerdict w = realizability(1, 3);
    CHECK(w.status == Status::Realizable);
    REQUIRE(w.witness.has_value());
    CHECK(w.witness->kind == WitnessRecipe::Kind::Split);
    CHECK(w.witness->a == 1);
    CHECK(w.witness->b == 1);
    CHECK_FALSE(w.witness->dual);

    ClassVerdict wd = realizability(3, 1);
    CHECK(wd.status == Status::Realizable);
    REQUIRE(wd.witness.has_value());
    CHECK(wd.witness->kind == WitnessRecipe::Kind::Split);
    CHECK(wd.witness->dual);

    CHECK(realizability(7, 9).status == Status::Realizable);
    CHECK(realizability(3, 5).status == Status::NotRealizable); // 8 is not a square

    ClassVerdict f = realizability(0, 25);
    CHECK(f.status == Status::Realizable);
    REQUIRE(f.witness.has_value());
    CHECK(f.witness->kind == WitnessRecipe::Kind::FiniteSelfMap);
    CHECK(f.witness->n == 5);

    ClassVerdict zero = realizability(0, 0);
    CHECK(zero.status == Status::NotRealizable);

    ClassVerdict triv = realizability(0, 1);
    CHECK(triv.status == Status::Realizable);
    REQUIRE(triv.witness.has_value());
    CHECK(triv.witness->kind == WitnessRecipe::Kind::TrivialPlane);
}

TEST_CASE("realizability: interval logic alone leaves (6,19) open, the split pass closes it") {
    ClassVerdict open = realizability_by_intervals(6, 19);
    CHECK(open.status == Status::Unknown);
    ClassVerdict open_dual = realizability_by_intervals(19, 6);
    CHECK(open_dual.status == Status::Unknown);

    ClassVerdict closed = realizability(6, 19);
    CHECK(closed.status == Status::Realizable);
    REQUIRE(closed.witness.has_value());
    CHECK(closed.witness->kind == WitnessRecipe::Kind::Split);
    CHECK(closed.witness->a == 2);
    CHECK(closed.witness->b == 3);
    CHECK_FALSE(closed.witness->dual);

    ClassVerdict closed_dual = realizability(19, 6);
    CHECK(closed_dual.status == Status::Realizable);
    REQUIRE(closed_dual.witness.has_value());
    CHECK(closed_dual.witness->dual);
}

TEST_CASE("decomposable_classes: c = 1, 2, 4") {
    CHECK(decomposable_classes(1) == std::set<std::pair<long long, long long>>{{0, 1}});
    CHECK(decomposable_classes(2) == std::set<std::pair<long long, long long>>{{0, 4}, {1, 3}});
    CHECK(decomposable_classes(4) ==
          std::set<std::pair<long long, long long>>{{0, 16}, {3, 13}, {4, 12}});
}

TEST_CASE("embedded_classes: the four embedded classes") {
    auto e = embedded_classes();
    CHECK(e.size() == 4);
    CHECK(e.count({1, 3}) == 1);
    CHECK(e.count({2, 2}) == 0);
}

TEST_CASE("classification table: c <= 3 fully realizable") {
    auto rows = classification_table(3);
    for (const auto& row : rows) {
        CHECK(row.count(Status::Realizable) == static_cast<long long>(row.c) * row.c + 1);
        CHECK(row.count(Status::Unknown) == 0);
        CHECK(row.count(Status::NotRealizable) == 0);
    }
}

TEST_CASE("classification table: c = 4 fully decided") {
    auto rows = classification_table(4);
    const TableRow& r4 = rows[3];
    CHECK(r4.count(Status::Unknown) == 0);
    CHECK(r4.with_status(Status::NotRealizable) == std::vector<long long>{1, 2, 14, 15});
}

TEST_CASE("classification table: interval logic alone for c = 5 and 6") {
    auto rows = classification_table(6, false);
    CHECK(rows[4].with_status(Status::Unknown) == std::vector<long long>{6, 19});
    CHECK(rows[5].with_status(Status::Unknown) ==
          std::vector<long long>{7, 8, 9, 10, 26, 27, 28, 29});
}

TEST_CASE("classification table: full tree for c = 5 and 6") {
    auto rows = classification_table(6);
    // the split pass closes (6,19) and (19,6)
    CHECK(rows[4].count(Status::Unknown) == 0);
    CHECK(rows[4].verdicts[6].status == Status::Realizable);
    CHECK(rows[4].verdicts[19].status == Status::Realizable);
    // for c = 6 it closes q2 = 8, 9, 27, 28 (splits 2+4 and 3+3)
    CHECK(rows[5].with_status(Status::Unknown) == std::vector<long long>{7, 10, 26, 29});
    CHECK(rows[5].with_status(Status::NotRealizable) ==
          std::vector<long long>{1, 2, 3, 4, 32, 33, 34, 35});
}

TEST_CASE("realizability is symmetric under the dual swap") {
    for (long long sum = 0; sum <= 49; ++sum)
        for (long long q2 = 0; q2 <= sum; ++q2)
            CHECK(realizability(q2, sum - q2).status == realizability(sum - q2, q2).status);
}

TEST_CASE("nonexistence and existence intervals never overlap up to c = 12") {
    for (int c = 4; c <= 12; ++c) {
        for (long long q2 = 0; q2 <= static_cast<long long>(c) * c; ++q2) {
            long long ell = std::min(q2, static_cast<long long>(c) * c - q2);
            bool non = in_nonexistence_interval(c, q2);
            bool exist = (q2 == 0 || q2 == static_cast<long long>(c) * c) ||
                         (c == 4 && ell >= 3) ||
                         (c >= 5 && existence_interval_part3(c, ell).has_value());
            CHECK_FALSE(non && exist);
        }
    }
}

TEST_CASE("every realizable square sum has a perfect-square total") {
    for (long long q2 = 0; q2 <= 30; ++q2)
        for (long long s2 = 0; s2 <= 30; ++s2) {
            ClassVerdict v = realizability(q2, s2);
            if (v.status != Status::NotRealizable)
                CHECK(perfect_square_root(q2 + s2) >= 1);
        }
}

TEST_CASE("split witnesses reproduce their class through the morphism construction") {
    for (long long q2 = 0; q2 <= 36; ++q2)
        for (long long s2 = 0; s2 + q2 <= 36; ++s2) {
            ClassVerdict v = realizability(q2, s2);
            if (v.status != Status::Realizable || !v.witness) continue;
            if (v.witness->kind != WitnessRecipe::Kind::Split) continue;
            if (v.witness->a < 1 || v.witness->b < 1) continue;
            if (v.witness->a + v.witness->b > 4) continue; // larger cases live in the acceptance suite
            ClassResult r = cohomology_class(example_split(v.witness->a, v.witness->b), 2);
            CohomClass expect = v.witness->dual ? dual_class(CohomClass{q2, s2}) : CohomClass{q2, s2};
            CHECK(r.cls == expect);
        }
}

TEST_CASE("cb witnesses materialize and pass cb_check for c >= 4") {
    struct Case { long long q2, s2; };
    for (Case cs : {Case{3, 13}, Case{5, 11}, Case{8, 8}, Case{12, 4}, Case{4, 21}, Case{7, 18}, Case{20, 5}}) {
        ClassVerdict v = realizability(cs.q2, cs.s2);
        REQUIRE(v.status == Status::Realizable);
        REQUIRE(v.witness.has_value());
        if (v.witness->kind != WitnessRecipe::Kind::CbPoints) continue;
        PointConfig z = materialize_cb_points(*v.witness, 3);
        CHECK(static_cast<int>(z.points.size()) == v.witness->ell);
        CHECK(cb_check(z, v.witness->c - 3).holds);
    }
}

TEST_CASE("witness recipes render stably") {
    CHECK(realizability(1, 3).witness->str() == "Split(1,1)");
    CHECK(realizability(3, 1).witness->str() == "Dual(Split(1,1))");
    CHECK(realizability(0, 25).witness->str() == "FiniteSelfMap(5)");
}

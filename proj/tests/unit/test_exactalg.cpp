#include <doctest.h>

#include "grassmorph/fp.hpp"
#include "grassmorph/matrix.hpp"
#include "grassmorph/rng.hpp"

using namespace grassmorph;

namespace {

QMatrix from_ints(const std::vector<std::vector<long long>>& rows) {
    QMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = Rational(rows[i][j]);
    return m;
}

} // namespace

TEST_CASE("rank: identity, zero, proportional rows") {
    CHECK(rank(from_ints({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 3);
    CHECK(rank(QMatrix(2, 5, Rational(0))) == 0);
    CHECK(rank(from_ints({{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("kernel_basis: spec cases") {
    auto b1 = kernel_basis(from_ints({{1, -1}}), Rational(0));
    REQUIRE(b1.size() == 1);
    CHECK(b1[0][0] * Rational(1) + b1[0][1] * Rational(-1) == 0);
    CHECK(b1[0][0] == b1[0][1]); // (1, 1) up to scale
    CHECK(b1[0][0] != 0);

    CHECK(kernel_basis(from_ints({{2, 1}, {1, 1}}), Rational(0)).empty());

    auto b3 = kernel_basis(from_ints({{1, 0, 0}, {0, 1, 0}}), Rational(0));
    REQUIRE(b3.size() == 1);
    CHECK(b3[0][0] == 0);
    CHECK(b3[0][1] == 0);
    CHECK(b3[0][2] != 0);
}

TEST_CASE("reduce_mod_p: spec cases") {
    CHECK(reduce_mod_p(Rational(3, 2), 5).value() == 4);
    CHECK_THROWS_AS(reduce_mod_p(Rational(1, 3), 3), BadPrime);
    CHECK(reduce_mod_p(Rational(7), 7).value() == 0);
}

TEST_CASE("rank equals rank of transpose on random matrices") {
    Rng rng(42);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t r = static_cast<std::size_t>(rng.next_int(1, 6));
        std::size_t c = static_cast<std::size_t>(rng.next_int(1, 6));
        QMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Rational(rng.next_int(-9, 9));
        CHECK(rank(m) == rank(m.transpose()));
    }
}

TEST_CASE("kernel vectors satisfy m*v = 0 exactly and count = cols - rank") {
    Rng rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t r = static_cast<std::size_t>(rng.next_int(1, 5));
        std::size_t c = static_cast<std::size_t>(rng.next_int(1, 6));
        QMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Rational(rng.next_int(-4, 4));
        auto basis = kernel_basis(m, Rational(0));
        CHECK(basis.size() == c - rank(m));
        for (const auto& v : basis)
            for (const auto& entry : m.apply(v)) CHECK(entry == 0);
    }
}

TEST_CASE("rank over Q agrees with rank over F_p for three large primes") {
    Rng rng(11);
    std::array<std::uint64_t, 3> primes = {kReductionPrimes[0], kReductionPrimes[1], kReductionPrimes[2]};
    for (int trial = 0; trial < 15; ++trial) {
        std::size_t r = static_cast<std::size_t>(rng.next_int(1, 5));
        std::size_t c = static_cast<std::size_t>(rng.next_int(1, 5));
        QMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Rational(rng.next_int(-30, 30));
        std::size_t rq = rank(m);
        for (std::uint64_t p : primes) {
            FpMatrix mp(r, c, Fp(0, p));
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < c; ++j) mp.at(i, j) = reduce_mod_p(m.at(i, j), p);
            CHECK(rank(mp) == rq);
        }
    }
}

TEST_CASE("Fp arithmetic round trip") {
    Fp a = Fp::from_int(-3, 31);
    CHECK(a.value() == 28);
    CHECK((a * a.inverse()).value() == 1);
    CHECK((Fp(17, 31) / Fp(17, 31)).value() == 1);
    CHECK(Fp(5, 31).pow(3).value() == 125 % 31);
}

#include "hurwitzlab/hurwitz.hpp"

#include <catch_amalgamated.hpp>

using namespace hwl;

namespace {

Partition trivial_profile(int d) {
    return Partition(std::vector<int>(static_cast<std::size_t>(d), 1));
}

}  // namespace

TEST_CASE("unbranched sphere covers: H^{2,0}(d) = 1/d!") {
    for (int d = 1; d <= 6; ++d)
        CHECK(hurwitz_frobenius(CoveringSpec(2, d, {})) == Rational(1, factorial(d)));
}

TEST_CASE("two full cycles over the sphere: H^{2,2}(d;(d),(d)) = 1/d") {
    for (int d = 1; d <= 6; ++d) {
        Partition full{std::vector<int>{d}};
        CHECK(hurwitz_frobenius(CoveringSpec(2, d, {full, full})) == Rational(1, d));
    }
}

TEST_CASE("two branch points over the sphere: 1/z_Delta on the diagonal, else 0") {
    for (int d = 1; d <= 6; ++d) {
        auto deltas = enumerate_partitions(d);
        for (const auto& d1 : deltas)
            for (const auto& d2 : deltas) {
                Rational h = hurwitz_frobenius(CoveringSpec(2, d, {d1, d2}));
                CHECK(h == (d1 == d2 ? Rational(1, z_factor(d1)) : Rational(0)));
            }
    }
}

TEST_CASE("unbranched projective-plane triple cover: H^{1,0}(3) = 2/3") {
    CHECK(hurwitz_frobenius(CoveringSpec(1, 3, {})) == Rational(2, 3));
}

TEST_CASE("single branch point over the projective plane at d = 3") {
    CHECK(hurwitz_frobenius(CoveringSpec(1, 3, {Partition{3}})) == Rational(1, 3));
    CHECK(hurwitz_frobenius(CoveringSpec(1, 3, {Partition{2, 1}})) == 0);
    // trivial profile reproduces Example 4
    CHECK(hurwitz_frobenius(CoveringSpec(1, 3, {trivial_profile(3)})) == Rational(2, 3));
}

TEST_CASE("two-term character sum: H^{2,3}(2;(2),(2),(1,1)) = 1/2") {
    CHECK(hurwitz_frobenius(CoveringSpec(2, 2, {Partition{2}, Partition{2}, Partition{1, 1}})) ==
          Rational(1, 2));
}

TEST_CASE("profile weight mismatch is rejected") {
    CHECK_THROWS_AS(CoveringSpec(2, 3, {Partition{2}}), std::invalid_argument);
}

TEST_CASE("appending a trivial profile never changes the value") {
    for (int d = 1; d <= 5; ++d) {
        auto deltas = enumerate_partitions(d);
        for (int euler : {2, 1, 0, -1, -2}) {
            for (const auto& delta : deltas) {
                Rational base = hurwitz_frobenius(CoveringSpec(euler, d, {delta}));
                Rational padded =
                    hurwitz_frobenius(CoveringSpec(euler, d, {delta, trivial_profile(d)}));
                CHECK(base == padded);
            }
        }
    }
}

TEST_CASE("Hurwitz values are nonnegative") {
    for (int d = 1; d <= 5; ++d) {
        auto deltas = enumerate_partitions(d);
        for (int euler : {2, 1, 0, -1, -2}) {
            CHECK(hurwitz_frobenius(CoveringSpec(euler, d, {})) >= 0);
            for (const auto& d1 : deltas)
                for (const auto& d2 : deltas)
                    CHECK(hurwitz_frobenius(CoveringSpec(euler, d, {d1, d2})) >= 0);
        }
    }
}

TEST_CASE("Riemann-Hurwitz bookkeeping") {
    CHECK(riemann_hurwitz_euler(2, 3, {Partition{3}, Partition{3}}) == 2);
    for (int d = 1; d <= 6; ++d) CHECK(riemann_hurwitz_euler(1, d, {}) == d);
    CHECK(riemann_hurwitz_euler(1, 4, {Partition{2, 2}}) == 2);
}

TEST_CASE("corollary sums") {
    // single d=1 tuple ((1),(1))
    CHECK(corollary_sum(Partition{1}, 1, 0, 2) == 1);

    // lambda=(2), n=1, g=0: tuples ((2),(1,1)) and ((1,1),(2)), each H=1/2,
    // sit at length-sum 3, i.e. cover Euler characteristic E' = 2.
    CHECK(corollary_sum(Partition{2}, 1, 0, 2) == 1);
    CHECK(corollary_sum(Partition{2}, 1, 0, 1) == 0);
    CHECK(corollary_sum(Partition{2}, 1, 0, 3) == 0);

    // out-of-range Euler characteristic gives an empty sum
    CHECK(corollary_sum(Partition{3}, 2, 0, 99) == 0);
    CHECK(corollary_sum(Partition{3}, 2, 0, -99) == 0);
}

TEST_CASE("connected extraction reproduces the Example-5 closed forms") {
    GradedSeries disc = disconnected_series_from_frobenius(1, 1, 6);
    auto connected = connected_hurwitz(disc, 6, 1);
    for (int m = 1; m <= 3; ++m) {
        CHECK(connected.at(CoveringSpec(1, 2 * m, {Partition{m, m}})) == Rational(1, 2 * m));
        CHECK(connected.at(CoveringSpec(1, 2 * m - 1, {Partition{std::vector<int>{2 * m - 1}}})) ==
              Rational(1, 2 * m - 1));
    }
    // H_con^{1,1}(2;(2)) has no connected cover (even-degree folding case)
    CHECK(!connected.contains(CoveringSpec(1, 2, {Partition{2}})));
}

TEST_CASE("connected extraction over the sphere gives 1/d for full cycles") {
    GradedSeries disc = disconnected_series_from_frobenius(2, 2, 4);
    auto connected = connected_hurwitz(disc, 4, 2);
    for (int d = 1; d <= 4; ++d) {
        Partition full{std::vector<int>{d}};
        CHECK(connected.at(CoveringSpec(2, d, {full, full})) == Rational(1, d));
    }
}

TEST_CASE("connected extraction demands enough degrees") {
    GradedSeries disc = disconnected_series_from_frobenius(1, 1, 3);
    CHECK_THROWS_AS(connected_hurwitz(disc, 5, 1), std::invalid_argument);
}

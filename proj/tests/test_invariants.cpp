#include <doctest.h>

#include <algorithm>

#include "burniat/invariants.hpp"

using namespace burniat;

TEST_CASE("generator actions on explicit points") {
    const ParamPoint5 p({Rat(2), Rat(3), Rat(5)});
    CHECK(act5({Gen5::Cremona}, p) == ParamPoint5({Rat(1, 2), Rat(1, 3), Rat(1, 5)}));
    CHECK(act5({Gen5::Trans}, p) == ParamPoint5({Rat(1, 3), Rat(1, 2), Rat(1, 5)}));
    CHECK(act5({Gen5::Cyc}, p) == ParamPoint5({Rat(3), Rat(5), Rat(2)}));
}

TEST_CASE("group relations hold pointwise on random points") {
    SplitMix64 rng(kDefaultSeed);
    for (int t = 0; t < 100; ++t) {
        const ParamPoint5 p = random_point5(rng);
        CHECK(act5({Gen5::Cremona, Gen5::Cremona}, p) == p);
        CHECK(act5({Gen5::Cyc, Gen5::Cyc, Gen5::Cyc}, p) == p);
        // trans o cremona is the plain transposition of a_1 and a_2
        CHECK(act5({Gen5::Trans, Gen5::Cremona}, p) == ParamPoint5({p.a[1], p.a[0], p.a[2]}));
    }
}

TEST_CASE("invariants5 on frozen values") {
    const Invariants5 ones = invariants5(ParamPoint5({Rat(1), Rat(1), Rat(1)}));
    CHECK(ones.y1 == 6);
    CHECK(ones.y2 == 6);
    CHECK(ones.y3 == 2);

    const ParamPoint5 p({Rat(2), Rat(3), Rat(5)});
    const Invariants5 y = invariants5(p);
    CHECK(y.y3 == Rat(901, 30)); // 30 + 1/30
    CHECK(y.y1 == Rat(331, 30)); // 10 + 31/30
    CHECK(y.y2 == Rat(94, 3));   // 31 + 10/30
    CHECK(invariants5(act5({Gen5::Cremona}, p)) == y);
}

TEST_CASE("invariants5 is fixed by all twelve group elements") {
    SplitMix64 rng(kDefaultSeed + 2);
    for (int t = 0; t < 100; ++t) {
        const ParamPoint5 p = random_point5(rng);
        const Invariants5 y = invariants5(p);
        for (const ParamPoint5& q : orbit5(p)) CHECK(invariants5(q) == y);
    }
}

TEST_CASE("generic orbits have twelve elements in two sigma-classes") {
    SplitMix64 rng(kDefaultSeed + 3);
    const ParamPoint5 p = random_generic_point5(rng);
    const auto orbit = orbit5(p);
    CHECK(orbit.size() == 12);
    CHECK(quadratic_extension_check5(p));
}

TEST_CASE("quadratic extension check on 100 generic draws") {
    SplitMix64 rng(kDefaultSeed);
    for (int t = 0; t < 100; ++t) CHECK(quadratic_extension_check5(random_generic_point5(rng)));
}

TEST_CASE("sigma3 = 1 is a degenerate point for the recovery system") {
    CHECK_THROWS_AS(quadratic_extension_check5(ParamPoint5({Rat(2), Rat(3), Rat(1, 6)})),
                    DegeneratePoint);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(ParamPoint5({Rat(0), Rat(1), Rat(1)}), InputError);
    CHECK_THROWS_AS(ParamPoint6({Rat(1), Rat(1), Rat(1)}, {Rat(1), Rat(2), Rat(2)}), InputError);
    CHECK_THROWS_AS(ParamPoint6({Rat(1), Rat(1), Rat(1)}, {Rat(-1), Rat(2), Rat(2)}),
                    DegeneratePoint); // v_1 = 0
    CHECK_THROWS_AS(Gen6::permutation({1, 1, 3}), InputError);
}

TEST_CASE("act6 generators") {
    const ParamPoint6 p({Rat(2), Rat(3), Rat(5)}, {Rat(7), Rat(11), Rat(13)});
    const ParamPoint6 flipped = act6({Gen6::flip(2)}, p);
    CHECK(flipped.a == std::array<Rat, 3>{Rat(2), Rat(11), Rat(5)});
    CHECK(flipped.b == std::array<Rat, 3>{Rat(7), Rat(3), Rat(13)});

    const ParamPoint6 inverted = act6({Gen6::cremona()}, p);
    CHECK(inverted.a == std::array<Rat, 3>{Rat(1, 2), Rat(1, 3), Rat(1, 5)});
    CHECK(inverted.b == std::array<Rat, 3>{Rat(1, 7), Rat(1, 11), Rat(1, 13)});

    // torus: w_i unchanged for any nonzero parameters
    SplitMix64 rng(kDefaultSeed + 4);
    for (int t = 0; t < 100; ++t) {
        const ParamPoint6 q = random_point6(rng);
        const Gen6 torus = Gen6::torus(rng.next_rational(), rng.next_rational());
        CHECK(derived6(act6({torus}, q)).w == derived6(q).w);
    }
}

TEST_CASE("invariants6 on a frozen value") {
    const ParamPoint6 p({Rat(1), Rat(1), Rat(1)}, {Rat(2), Rat(2), Rat(2)});
    const Derived6 d = derived6(p);
    CHECK(d.u == std::array<Rat, 3>{Rat(2), Rat(2), Rat(2)});
    CHECK(d.v == std::array<Rat, 3>{Rat(3), Rat(3), Rat(3)});
    CHECK(d.w == std::array<Rat, 3>{Rat(2, 9), Rat(2, 9), Rat(2, 9)});
    CHECK(d.v_prod == 27);
    const Invariants6 inv = invariants6(p);
    CHECK(inv.sw1 == Rat(2, 3));
    CHECK(inv.sw2 == Rat(4, 27));
    CHECK(inv.sw3 == Rat(8, 729));
    CHECK(inv.s == Rat(243, 8)); // 27 + 27/8
}

TEST_CASE("cremona transformation rules for the derived quantities") {
    SplitMix64 rng(kDefaultSeed + 5);
    for (int t = 0; t < 100; ++t) {
        const ParamPoint6 p = random_point6(rng);
        const Derived6 before = derived6(p);
        const Derived6 after = derived6(act6({Gen6::cremona()}, p));
        for (int i = 0; i < 3; ++i) {
            // v_i -> v_i / u_i
            CHECK(after.v[static_cast<size_t>(i)] ==
                  before.v[static_cast<size_t>(i)] / before.u[static_cast<size_t>(i)]);
            CHECK(after.w[static_cast<size_t>(i)] == before.w[static_cast<size_t>(i)]);
        }
        // v -> 1/(v prod w), so s is fixed
        const Rat wprod = before.w[0] * before.w[1] * before.w[2];
        CHECK(after.v_prod == 1 / (before.v_prod * wprod));
        CHECK(invariants6(act6({Gen6::cremona()}, p)) == invariants6(p));
    }
}

TEST_CASE("general rescalings scale v by their product") {
    SplitMix64 rng(kDefaultSeed + 6);
    const ParamPoint6 p = random_point6(rng);
    const Derived6 before = derived6(p);
    const Derived6 doubled = derived6(rescale6(p, {Rat(2), Rat(1), Rat(1)}));
    CHECK(doubled.v_prod == 2 * before.v_prod);
    CHECK(doubled.w == before.w);
}

TEST_CASE("torus quotient check") {
    SplitMix64 rng(kDefaultSeed + 8);
    for (int t = 0; t < 50; ++t) CHECK(torus_quotient_check6(random_point6(rng), rng));
}

TEST_CASE("suites report zero failures") {
    for (const auto& rep : run_invariant_suite5(50, kDefaultSeed)) {
        INFO(rep.identity);
        CHECK(rep.failures == 0);
    }
    for (const auto& rep : run_invariant_suite6(50, kDefaultSeed)) {
        INFO(rep.identity);
        CHECK(rep.failures == 0);
    }
    CHECK_THROWS_AS(run_invariant_suite5(0, kDefaultSeed), InputError);
}

TEST_CASE("suites are deterministic for a fixed seed") {
    const auto first = run_invariant_suite5(20, 12345);
    const auto second = run_invariant_suite5(20, 12345);
    REQUIRE(first.size() == second.size());
    for (size_t i = 0; i < first.size(); ++i) {
        CHECK(first[i].identity == second[i].identity);
        CHECK(first[i].failures == second[i].failures);
    }
}

#include <doctest.h>

#include <algorithm>

#include "burniat/branch.hpp"
#include "burniat/rng.hpp"

using namespace burniat;

namespace {
const CaseTag kCases[] = {CaseTag::K6, CaseTag::K5, CaseTag::K4nn, CaseTag::K4n};
}

TEST_CASE("branch tables reproduce the tabulated classes") {
    const BranchData k5 = branch_table(CaseTag::K5);
    CHECK(k5.lat.r == 4);
    for (int i = 1; i <= 3; ++i) {
        std::vector<long long> b(4, 0);
        b[static_cast<size_t>(i - 1)] = 1;
        b[3] = 1;
        CHECK(k5.component(i, 2) == div_class(1, b)); // L - E_i - E_4
        b[3] = 0;
        CHECK(k5.component(i, 3) == div_class(1, b)); // L - E_i
    }

    const BranchData k4nn = branch_table(CaseTag::K4nn);
    for (int i = 1; i <= 3; ++i) {
        std::vector<long long> b(5, 0);
        b[static_cast<size_t>(i - 1)] = 1;
        b[4] = 1;
        CHECK(k4nn.component(i, 3) == div_class(1, b)); // L - E_i - E_5
    }

    const BranchData k4n = branch_table(CaseTag::K4n);
    CHECK(k4n.component(1, 2) == div_class(1, {1, 0, 0, 1, 1})); // L - E_1 - E_4 - E_5
    CHECK(k4n.component(1, 3) == div_class(1, {1, 0, 0, 0, 0})); // L - E_1
    CHECK(k4n.component(2, 2) == div_class(1, {0, 1, 0, 1, 0}));
    CHECK(k4n.component(3, 3) == div_class(1, {0, 0, 1, 0, 1}));

    const BranchData k6 = branch_table(CaseTag::K6);
    CHECK(k6.lat.r == 3);
    CHECK(k6.component(1, 1) == div_class(1, {1, 1, 0})); // L - E_1 - E_2
    CHECK(k6.component(1, 2) == div_class(1, {1, 0, 0}));
    CHECK(k6.component(1, 4) == exceptional_class(3, 3)); // E_{i+2}
    // D_i lies in |3L - 3E_i - E_{i+1} + E_{i+2}|
    CHECK(k6.D[0] == div_class(3, {3, 1, -1}));

    CHECK_THROWS_AS(branch_table(CaseTag::K3), InputError);
}

TEST_CASE("the uniform identities hold in all four cases") {
    for (const CaseTag tag : kCases) {
        const BranchData bd = branch_table(tag);
        const auto checks = verify_branch_identities(bd);
        CHECK(checks.size() >= 15);
        for (const auto& chk : checks) {
            const std::string context = case_name(tag) + ": " + chk.identity;
            INFO(context);
            CHECK(chk.pass);
        }
        // 2 L_i - (D_{i-1} + D_{i+1}) = 0 as lattice vectors
        for (int i = 1; i <= 3; ++i) {
            const int prev = (i + 1) % 3 + 1;
            const int next = i % 3 + 1;
            const DivisorClass diff = bd.L[static_cast<size_t>(i - 1)] * 2 -
                                      (bd.D[static_cast<size_t>(prev - 1)] + bd.D[static_cast<size_t>(next - 1)]);
            CHECK(diff.is_zero());
        }
    }
}

TEST_CASE("K6 hexagon identity D_{i-1} + D_{i+1} = 6L - 4E_{i-1} - 2E_{i+1}") {
    const BranchData bd = branch_table(CaseTag::K6);
    CHECK(bd.D[2] + bd.D[1] == div_class(6, {0, 2, 4})); // i = 1: D_3 + D_2
}

TEST_CASE("a perturbed table fails at least one identity") {
    BranchData bd = branch_table(CaseTag::K5);
    // swap one E_4 into a fresh E_1 coefficient in D_{1,2}
    bd.components[0][1] = div_class(1, {2, 0, 0, 0});
    bd.D[0] = bd.component(1, 1) + bd.component(1, 2) + bd.component(1, 3) + bd.component(1, 4);
    const auto checks = verify_branch_identities(bd);
    CHECK(std::any_of(checks.begin(), checks.end(),
                      [](const IdentityCheck& chk) { return !chk.pass; }));
}

TEST_CASE("sum of D_i self-intersections equals 3(K^2 - 8)") {
    for (const CaseTag tag : kCases) {
        const BranchData bd = branch_table(tag);
        const long long k2 = intersect(canonical_class(bd.lat), canonical_class(bd.lat));
        long long sum = 0;
        for (const auto& d : bd.D) sum += intersect(d, d);
        CHECK(sum == 3 * (k2 - 8));
    }
}

TEST_CASE("line and conic census of the branch locus") {
    const int expected_lines[] = {6, 9, 12, 10};
    int idx = 0;
    for (const CaseTag tag : kCases) {
        const BranchData bd = branch_table(tag);
        const BranchCensus census = branch_census(bd);
        const long long k2 = intersect(canonical_class(bd.lat), canonical_class(bd.lat));
        CHECK(census.lines == expected_lines[idx]);
        CHECK(census.conics == (3 * k2 - census.lines) / 2);
        CHECK(census.contracted == (tag == CaseTag::K4n ? 1 : 0));
        ++idx;
    }
}

TEST_CASE("natural deformations are Galois: |D_i - L_i| is empty") {
    for (const CaseTag tag : kCases) {
        const BranchData bd = branch_table(tag);
        CHECK(natural_deformations_galois(bd, case_negatives(bd)));
        // and every is_effective call resolves (no undecided)
        for (int i = 0; i < 3; ++i) {
            const auto res = is_effective(bd.D[static_cast<size_t>(i)] - bd.L[static_cast<size_t>(i)],
                                          case_negatives(bd));
            CHECK(res.status == Effectivity::No);
        }
    }
}

TEST_CASE("negative control: replacing D_i - L_i by E_i breaks Galois emptiness") {
    BranchData bd = branch_table(CaseTag::K6);
    bd.D[0] = bd.L[0] + exceptional_class(3, 1); // now D_1 - L_1 = E_1, effective
    CHECK_FALSE(natural_deformations_galois(bd, case_negatives(bd)));
}

TEST_CASE("an undecided effectivity question raises Inconclusive") {
    BranchData bd = branch_table(CaseTag::K6);
    bd.D[0] = bd.L[0] + div_class(1, {3, 0, 0}); // D_1 - L_1 = L - 3E_1: chi < 1, nef
    CHECK_THROWS_AS(natural_deformations_galois(bd, case_negatives(bd)), Inconclusive);
}

TEST_CASE("bidouble cover has exactly 4 points over a generic base point") {
    CHECK(bidouble_fiber_check({Rat(1), Rat(1), Rat(1)}) == 4);
    CHECK(bidouble_fiber_check({Rat(1), Rat(4), Rat(9)}) == 4);
    CHECK(bidouble_fiber_check({Rat(2, 3), Rat(5, 7), Rat(11, 13)}) == 4);
    CHECK_THROWS_AS(bidouble_fiber_check({Rat(1), Rat(1), Rat(0)}), DomainError);
    CHECK_THROWS_AS(bidouble_fiber_check({Rat(-1), Rat(1), Rat(1)}), DomainError);
}

TEST_CASE("fiber count is 4 for 100 random positive branch values") {
    SplitMix64 rng(kDefaultSeed);
    for (int t = 0; t < 100; ++t) {
        const std::array<Rat, 3> delta = {rng.next_positive_rational(), rng.next_positive_rational(),
                                          rng.next_positive_rational()};
        CHECK(bidouble_fiber_check(delta) == 4);
    }
}

TEST_CASE("k_squared") {
    CHECK(k_squared(0) == 6);
    CHECK(k_squared(2) == 4);
    CHECK(k_squared(4) == 2);
    CHECK_THROWS_AS(k_squared(5), InputError);
    CHECK_THROWS_AS(k_squared(-1), InputError);
}

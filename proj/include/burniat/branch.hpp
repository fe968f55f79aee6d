#pragma once

#include <array>
#include <string>
#include <vector>

#include "burniat/picard.hpp"
#include "burniat/plane.hpp"

namespace burniat {

// Branch-divisor class data of one Burniat case on the blown-up surface.
// K6 lives on the degree-6 Del Pezzo (r = 3), K5 on r = 4, K4nn and K4n on
// r = 5.  components[i-1][j-1] holds D_{i,j} for j = 1..3 and the
// exceptional part E_{i+2} for j = 4.
struct BranchData {
    CaseTag c = CaseTag::K6;
    SurfaceLattice lat{3};
    std::array<std::array<DivisorClass, 4>, 3> components{};
    std::array<DivisorClass, 3> D{}; // D_i = D_{i,1} + D_{i,2} + D_{i,3} + E_{i+2}
    std::array<DivisorClass, 3> L{}; // 2 L_i = D_{i-1} + D_{i+1}

    const DivisorClass& component(int i, int j) const; // 1-based, j = 4 is E_{i+2}
};

// The linear-equivalence classes of the branch components, per case table.
BranchData branch_table(CaseTag c);

struct IdentityCheck {
    std::string identity;
    DivisorClass lhs, rhs;
    bool pass = false;
};

// Checks, for i = 1,2,3:  D_i = -K - 2E_i + 2E_{i+2},  L_i = -K + E_i - E_{i-1},
// D_i - L_i = -3E_i + 3E_{i-1},  2L_i = D_{i-1} + D_{i+1},  plus the explicit
// per-case form of L_i (and for K6 the hexagon identity for D_{i-1} + D_{i+1}).
std::vector<IdentityCheck> verify_branch_identities(const BranchData& bd);

// Exceptional classes, plus the (-2)-class L - E_1 - E_4 - E_5 in the nodal case.
std::vector<DivisorClass> case_negatives(const BranchData& bd);

// True iff |D_i - L_i| is empty for every i, i.e. is_effective answers "no".
// An "undecided" answer raises Inconclusive.
bool natural_deformations_galois(const BranchData& bd,
                                 const std::vector<DivisorClass>& negatives);

// Counts the points of the (Z/2)^2-cover over a base point where the branch
// sections take the (positive) values delta.  Solutions u_i = +-sqrt of the
// delta products are multiplied out in the rank-4 algebra generated by the
// square roots; the count is 4.
int bidouble_fiber_check(const std::array<Rat, 3>& delta);

int k_squared(int m); // 6 - m for 0 <= m <= 4

// Anticanonical degrees of the 12 branch components: degree 1 components are
// lines of the Del Pezzo model, degree 2 are conics, degree 0 is the
// contracted (-2)-curve of the nodal case.
struct BranchCensus {
    int lines = 0;
    int conics = 0;
    int contracted = 0;
};

BranchCensus branch_census(const BranchData& bd);

} // namespace burniat

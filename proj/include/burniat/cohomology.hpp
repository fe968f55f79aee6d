#pragma once

#include <array>
#include <string>
#include <vector>

#include "burniat/branch.hpp"
#include "burniat/picard.hpp"
#include "burniat/plane.hpp"

namespace burniat {

// chi(O(c)) = 1 + c.(c - K)/2 by Riemann-Roch on a rational surface.
long long rr_chi(const DivisorClass& c, const SurfaceLattice& lat);

// chi of a twist restricted to a union of smooth rational components:
// sum over components c of (1 + twist.c), via chi(O_{P1}(d)) = d + 1.
long long chi_on_branch(const std::vector<DivisorClass>& components, const DivisorClass& twist);

// chi(Omega^1(twist)) = 2 + twist^2 - e(Y) with e = 12 - K^2, by the
// splitting principle and Riemann-Roch on the two formal summands.
long long chi_omega1_twist(const DivisorClass& twist, const SurfaceLattice& lat);

// chi(Omega^1(log D_i)(E_i - E_{i+2})), which evaluates to K^2 - 4.
long long chi_log(const BranchData& bd, int i);

// dim H^0(Omega^1(log D_i)(E_i - E_{i+2})): residues (c_1,c_2,c_3) summing to
// zero, with c_j forced to 0 when the line D'_{i,j} contains P_4 or P_5.
int h0_log_eigensheaf(const BurniatConfig& cfg, int i);

// Enriques-Kuranishi: chi(Theta_S) = -10 chi(O_S) + 2 K^2 with chi(O_S) = 1.
int chi_theta(int k2);

enum class KuranishiType { Smooth, NonReduced };

struct EigenspaceTable {
    CaseTag c = CaseTag::K6;
    int k2 = 6;
    // index 0: invariant part, 1..3: the nontrivial characters
    std::array<int, 4> h1{}, h2{};
    int chi_theta_value = 0;
    int moduli_dimension = 0;
    KuranishiType kuranishi = KuranishiType::Smooth;
    // nilpotence orders are symbolic; the integer m is not known, only m >= 2
    std::string canonical_order; // "t^m" for the nodal case, empty otherwise
    std::string minimal_order;   // "t^2m"
};

EigenspaceTable eigenspace_table(const BurniatConfig& cfg);
EigenspaceTable eigenspace_table(CaseTag c); // canonical representative

// Dimensions of the families: 4, 3, 2, 2, 1 for K6, K5, K4nn, K4n, K3.
int moduli_dim(CaseTag c);

std::string format_table(const EigenspaceTable& table);

} // namespace burniat

#include "burniat/cohomology.hpp"

#include <sstream>

namespace burniat {

namespace {
int nxt2(int i) { return (i + 1) % 3 + 1; }
} // namespace

long long rr_chi(const DivisorClass& c, const SurfaceLattice& lat) {
    const long long pairing = intersect(c, c - canonical_class(lat));
    if (pairing % 2 != 0) throw InternalError("c.(c-K) has odd parity");
    return 1 + pairing / 2;
}

long long chi_on_branch(const std::vector<DivisorClass>& components, const DivisorClass& twist) {
    long long chi = 0;
    for (const auto& c : components) chi += 1 + intersect(twist, c);
    return chi;
}

long long chi_omega1_twist(const DivisorClass& twist, const SurfaceLattice& lat) {
    const DivisorClass k = canonical_class(lat);
    const long long euler = 12 - intersect(k, k);
    return 2 + intersect(twist, twist) - euler;
}

long long chi_log(const BranchData& bd, int i) {
    if (i < 1 || i > 3) throw InputError("character index out of range");
    const int r = bd.lat.r;
    const DivisorClass twist = exceptional_class(r, i) - exceptional_class(r, nxt2(i));
    std::vector<DivisorClass> comps;
    for (int j = 1; j <= 4; ++j) comps.push_back(bd.component(i, j));
    return chi_omega1_twist(twist, bd.lat) + chi_on_branch(comps, twist);
}

int h0_log_eigensheaf(const BurniatConfig& cfg, int i) {
    if (i < 1 || i > 3) throw InputError("character index out of range");
    const ClassifyResult cls = classify(cfg); // validates; throws on degenerate input
    int free_residues = 0;
    for (int j = 1; j <= 3; ++j) {
        const ProjLine& line = cfg.line(i, j);
        bool through_singular = false;
        for (const auto& mp : cls.scan.off_corner)
            if (incident(mp.point, line)) through_singular = true;
        if (!through_singular) ++free_residues;
    }
    return free_residues > 0 ? free_residues - 1 : 0;
}

int chi_theta(int k2) { return -10 + 2 * k2; }

EigenspaceTable eigenspace_table(const BurniatConfig& cfg) {
    const ClassifyResult cls = classify(cfg);
    if (cls.k_squared < 4 || cls.k_squared > 6)
        throw InputError("eigenspace tables cover K^2 in {4, 5, 6}; got case " + case_name(cls.tag));

    const BranchData bd = branch_table(cls.tag);
    EigenspaceTable table;
    table.c = cls.tag;
    table.k2 = cls.k_squared;
    table.chi_theta_value = chi_theta(cls.k_squared);

    int character_sum = 0; // sum over nontrivial characters of h2 - h1
    for (int i = 1; i <= 3; ++i) {
        const int h2 = h0_log_eigensheaf(cfg, i);
        const long long cl = chi_log(bd, i);
        const long long h1 = h2 - cl;
        if (h1 < 0) throw InternalError("negative h^1 eigenspace dimension");
        table.h2[static_cast<size_t>(i)] = h2;
        table.h1[static_cast<size_t>(i)] = static_cast<int>(h1);
        character_sum += h2 - static_cast<int>(h1);
    }
    table.h2[0] = 0; // the invariant part of h^0(Omega^1 x Omega^2) vanishes
    const int h1_inv = character_sum - table.chi_theta_value;
    if (h1_inv < 0) throw InternalError("negative invariant h^1 dimension");
    table.h1[0] = h1_inv;
    table.moduli_dimension = h1_inv;

    if (cls.tag == CaseTag::K4n) {
        table.kuranishi = KuranishiType::NonReduced;
        table.canonical_order = "t^m";
        table.minimal_order = "t^2m";
    } else {
        table.kuranishi = KuranishiType::Smooth;
    }
    return table;
}

EigenspaceTable eigenspace_table(CaseTag c) {
    return eigenspace_table(canonical_config(c));
}

int moduli_dim(CaseTag c) {
    switch (c) {
    case CaseTag::K6: return 4;
    case CaseTag::K5: return 3;
    case CaseTag::K4nn: return 2;
    case CaseTag::K4n: return 2;
    case CaseTag::K3: return 1;
    default: throw InputError("no family dimension for case " + case_name(c));
    }
}

std::string format_table(const EigenspaceTable& table) {
    std::ostringstream os;
    os << "case " << case_name(table.c) << " (K^2 = " << table.k2;
    if (table.c == CaseTag::K4n)
        os << ", nodal";
    else if (table.c == CaseTag::K4nn)
        os << ", non nodal";
    os << ")\n";
    os << "character    h1  h2\n";
    const char* names[4] = {"invariant ", "chi_1     ", "chi_2     ", "chi_3     "};
    for (int idx = 0; idx < 4; ++idx)
        os << names[idx] << "   " << table.h1[static_cast<size_t>(idx)] << "   "
           << table.h2[static_cast<size_t>(idx)] << "\n";
    os << "chi(Theta_S) = " << table.chi_theta_value << "\n";
    os << "moduli dimension = " << table.moduli_dimension << "\n";
    if (table.kuranishi == KuranishiType::Smooth) {
        os << "Kuranishi base: smooth\n";
    } else {
        os << "Kuranishi base: non-reduced, C^2 x Spec C[t]/(" << table.canonical_order
           << ") for the canonical model, C^2 x Spec C[t]/(" << table.minimal_order
           << ") for the minimal model, m >= 2 symbolic\n";
    }
    return os.str();
}

} // namespace burniat

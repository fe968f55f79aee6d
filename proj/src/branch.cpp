#include "burniat/branch.hpp"

#include <algorithm>

namespace burniat {

namespace {

int nxt(int i) { return i % 3 + 1; }
int nxt2(int i) { return (i + 1) % 3 + 1; }
int prv(int i) { return nxt2(i); } // i - 1 = i + 2 mod 3

// L - E_{j1} - E_{j2} - ... on the rank r+1 lattice
DivisorClass line_minus(int r, std::initializer_list<int> js) {
    DivisorClass c = line_class(r);
    for (int j : js) c.b[static_cast<size_t>(j - 1)] = 1;
    return c;
}

} // namespace

const DivisorClass& BranchData::component(int i, int j) const {
    if (i < 1 || i > 3 || j < 1 || j > 4) throw InputError("component index out of range");
    return components[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
}

BranchData branch_table(CaseTag c) {
    BranchData bd;
    bd.c = c;
    int r = 0;
    switch (c) {
    case CaseTag::K6: r = 3; break;
    case CaseTag::K5: r = 4; break;
    case CaseTag::K4nn:
    case CaseTag::K4n: r = 5; break;
    default: throw InputError("branch tables exist for K6, K5, K4nn, K4n");
    }
    bd.lat = SurfaceLattice(r);

    for (int i = 1; i <= 3; ++i) {
        auto& row = bd.components[static_cast<size_t>(i - 1)];
        row[0] = line_minus(r, {i, nxt(i)}); // the triangle side
        switch (c) {
        case CaseTag::K6:
            row[1] = line_minus(r, {i});
            row[2] = line_minus(r, {i});
            break;
        case CaseTag::K5:
            row[1] = line_minus(r, {i, 4});
            row[2] = line_minus(r, {i});
            break;
        case CaseTag::K4nn:
            row[1] = line_minus(r, {i, 4});
            row[2] = line_minus(r, {i, 5});
            break;
        case CaseTag::K4n:
            if (i == 1) {
                row[1] = line_minus(r, {1, 4, 5});
                row[2] = line_minus(r, {1});
            } else {
                row[1] = line_minus(r, {i, 4});
                row[2] = line_minus(r, {i, 5});
            }
            break;
        default: break;
        }
        row[3] = exceptional_class(r, nxt2(i));
        bd.D[static_cast<size_t>(i - 1)] = row[0] + row[1] + row[2] + row[3];
    }

    for (int i = 1; i <= 3; ++i) {
        // L_i = 3L - 2E_{i-1} - E_{i+1}, minus E_4 (and E_5) once blown up
        DivisorClass l = line_class(r) * 3;
        l.b[static_cast<size_t>(prv(i) - 1)] = 2;
        l.b[static_cast<size_t>(nxt(i) - 1)] = 1;
        if (r >= 4) l.b[3] = 1;
        if (r >= 5) l.b[4] = 1;
        bd.L[static_cast<size_t>(i - 1)] = l;
    }
    return bd;
}

std::vector<IdentityCheck> verify_branch_identities(const BranchData& bd) {
    const int r = bd.lat.r;
    const DivisorClass k = canonical_class(bd.lat);
    std::vector<IdentityCheck> out;
    auto push = [&out](std::string name, DivisorClass lhs, DivisorClass rhs) {
        IdentityCheck chk;
        chk.pass = lhs == rhs;
        chk.identity = std::move(name);
        chk.lhs = std::move(lhs);
        chk.rhs = std::move(rhs);
        out.push_back(std::move(chk));
    };

    for (int i = 1; i <= 3; ++i) {
        const auto& Di = bd.D[static_cast<size_t>(i - 1)];
        const auto& Li = bd.L[static_cast<size_t>(i - 1)];
        const auto Ei = exceptional_class(r, i);
        const auto En = exceptional_class(r, nxt(i));
        const auto Ep = exceptional_class(r, prv(i));
        const std::string si = std::to_string(i);

        push("D_" + si + " = -K - 2E_" + si + " + 2E_" + std::to_string(nxt2(i)),
             Di, -k - Ei * 2 + exceptional_class(r, nxt2(i)) * 2);
        push("L_" + si + " = -K + E_" + si + " - E_" + std::to_string(prv(i)),
             Li, -k + Ei - Ep);
        push("D_" + si + " - L_" + si + " = -3E_" + si + " + 3E_" + std::to_string(prv(i)),
             Di - Li, Ei * (-3) + Ep * 3);
        push("2L_" + si + " = D_" + std::to_string(prv(i)) + " + D_" + std::to_string(nxt(i)),
             Li * 2, bd.D[static_cast<size_t>(prv(i) - 1)] + bd.D[static_cast<size_t>(nxt(i) - 1)]);

        DivisorClass explicit_l = line_class(r) * 3;
        explicit_l.b[static_cast<size_t>(nxt(i) - 1)] = 1;
        explicit_l.b[static_cast<size_t>(prv(i) - 1)] = 2;
        std::string explicit_name = "L_" + si + " = 3L - E_" + std::to_string(nxt(i)) +
                                    " - 2E_" + std::to_string(prv(i));
        if (r >= 4) {
            explicit_l.b[3] = 1;
            explicit_name += " - E_4";
        }
        if (r >= 5) {
            explicit_l.b[4] = 1;
            explicit_name += " - E_5";
        }
        push(std::move(explicit_name), Li, explicit_l);

        if (bd.c == CaseTag::K6) {
            DivisorClass hexagon = line_class(r) * 6;
            hexagon.b[static_cast<size_t>(prv(i) - 1)] = 4;
            hexagon.b[static_cast<size_t>(nxt(i) - 1)] = 2;
            push("D_" + std::to_string(prv(i)) + " + D_" + std::to_string(nxt(i)) +
                     " = 6L - 4E_" + std::to_string(prv(i)) + " - 2E_" + std::to_string(nxt(i)),
                 bd.D[static_cast<size_t>(prv(i) - 1)] + bd.D[static_cast<size_t>(nxt(i) - 1)],
                 hexagon);
        }
    }
    return out;
}

std::vector<DivisorClass> case_negatives(const BranchData& bd) {
    std::vector<DivisorClass> negs;
    for (int j = 1; j <= bd.lat.r; ++j) negs.push_back(exceptional_class(bd.lat.r, j));
    if (bd.c == CaseTag::K4n) {
        DivisorClass nodal = line_class(bd.lat.r);
        nodal.b[0] = 1;
        nodal.b[3] = 1;
        nodal.b[4] = 1;
        negs.push_back(nodal); // L - E_1 - E_4 - E_5
    }
    return negs;
}

bool natural_deformations_galois(const BranchData& bd,
                                 const std::vector<DivisorClass>& negatives) {
    bool all_empty = true;
    for (int i = 0; i < 3; ++i) {
        const auto res = is_effective(bd.D[static_cast<size_t>(i)] - bd.L[static_cast<size_t>(i)], negatives);
        if (res.status == Effectivity::Undecided)
            throw Inconclusive("effectivity of D_i - L_i undecided");
        if (res.status == Effectivity::Yes) all_empty = false;
    }
    return all_empty;
}

namespace {

// Element of the rank-4 algebra Q<1, s1, s2, s3> with s1 = sqrt(d3 d1),
// s2 = sqrt(d1 d2), s3 = sqrt(d2 d3); products follow s1 s2 = d1 s3 etc.
struct CoverElement {
    std::array<Rat, 4> c{}; // coefficients of 1, s1, s2, s3
};

CoverElement mul(const CoverElement& x, const CoverElement& y, const std::array<Rat, 3>& d) {
    const Rat sq1 = d[2] * d[0], sq2 = d[0] * d[1], sq3 = d[1] * d[2];
    CoverElement z;
    z.c[0] = x.c[0] * y.c[0] + sq1 * x.c[1] * y.c[1] + sq2 * x.c[2] * y.c[2] + sq3 * x.c[3] * y.c[3];
    z.c[1] = x.c[0] * y.c[1] + x.c[1] * y.c[0] + d[1] * (x.c[2] * y.c[3] + x.c[3] * y.c[2]);
    z.c[2] = x.c[0] * y.c[2] + x.c[2] * y.c[0] + d[2] * (x.c[3] * y.c[1] + x.c[1] * y.c[3]);
    z.c[3] = x.c[0] * y.c[3] + x.c[3] * y.c[0] + d[0] * (x.c[1] * y.c[2] + x.c[2] * y.c[1]);
    return z;
}

CoverElement scale(const CoverElement& x, const Rat& f) {
    CoverElement z = x;
    for (auto& v : z.c) v *= f;
    return z;
}

bool vanishes(const CoverElement& x) {
    return x.c[0] == 0 && x.c[1] == 0 && x.c[2] == 0 && x.c[3] == 0;
}

CoverElement minus(const CoverElement& x, const CoverElement& y) {
    CoverElement z;
    for (int i = 0; i < 4; ++i) z.c[static_cast<size_t>(i)] = x.c[static_cast<size_t>(i)] - y.c[static_cast<size_t>(i)];
    return z;
}

} // namespace

int bidouble_fiber_check(const std::array<Rat, 3>& delta) {
    for (const auto& d : delta)
        if (d <= 0) throw DomainError("fiber check needs positive branch values");

    int count = 0;
    for (int mask = 0; mask < 8; ++mask) {
        CoverElement u1, u2, u3;
        u1.c[1] = (mask & 1) ? -1 : 1;
        u2.c[2] = (mask & 2) ? -1 : 1;
        u3.c[3] = (mask & 4) ? -1 : 1;
        const bool rel1 = vanishes(minus(mul(u1, u2, delta), scale(u3, delta[0])));
        const bool rel2 = vanishes(minus(mul(u2, u3, delta), scale(u1, delta[1])));
        const bool rel3 = vanishes(minus(mul(u3, u1, delta), scale(u2, delta[2])));
        if (rel1 && rel2 && rel3) ++count;
    }
    return count;
}

int k_squared(int m) {
    if (m < 0 || m > 4) throw InputError("m must lie in [0, 4]");
    return 6 - m;
}

BranchCensus branch_census(const BranchData& bd) {
    const DivisorClass anti_k = -canonical_class(bd.lat);
    BranchCensus census;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 4; ++j) {
            const long long deg = intersect(bd.component(i, j), anti_k);
            if (deg == 1)
                ++census.lines;
            else if (deg == 2)
                ++census.conics;
            else if (deg == 0)
                ++census.contracted;
            else
                throw InternalError("branch component of unexpected anticanonical degree");
        }
    return census;
}

} // namespace burniat

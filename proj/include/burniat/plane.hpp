#pragma once

#include <array>
#include <string>
#include <vector>

#include "burniat/rational.hpp"

namespace burniat {

// K6 is the smooth 9-line arrangement (K^2 = 6); K5 has one triple point off
// the coordinate triangle, K4nn/K4n have two (nodal when they are collinear
// with a corner).  K3/K2 appear only as classification output.
enum class CaseTag { Unclassified, K6, K5, K4nn, K4n, K3, K2 };

std::string case_name(CaseTag c);
CaseTag case_from_name(const std::string& name);

struct ProjPoint {
    std::array<Rat, 3> x{};

    static ProjPoint of(Rat x1, Rat x2, Rat x3) { return ProjPoint{{std::move(x1), std::move(x2), std::move(x3)}}; }
    static const ProjPoint& reference(int i); // P1, P2, P3
    std::array<Int, 3> canonical() const { return canonical_triple(x); }
};

bool same_point(const ProjPoint& p, const ProjPoint& q);

struct LineLabel {
    int i = 0;
    int j = 0;
    bool operator==(const LineLabel&) const = default;
    bool operator<(const LineLabel& o) const { return i != o.i ? i < o.i : j < o.j; }
};

// c0 x1 + c1 x2 + c2 x3 = 0
struct ProjLine {
    std::array<Rat, 3> c{};
    LineLabel label;

    std::array<Int, 3> canonical() const { return canonical_triple(c); }
};

bool same_line(const ProjLine& l, const ProjLine& m);

bool incident(const ProjPoint& p, const ProjLine& l);
bool collinear(const ProjPoint& p, const ProjPoint& q, const ProjPoint& s);
ProjPoint meet(const ProjLine& l, const ProjLine& m);       // DegenerateConfig if equal
ProjLine join(const ProjPoint& p, const ProjPoint& q);

// Raw build inputs, echoed into the serialized configuration.
struct BuildParams {
    CaseTag c = CaseTag::K6;
    std::vector<Rat> a, b;               // pencil parameters actually used
    std::vector<ProjPoint> extra_points; // P4 (and P5)
};

// The 9 labeled branch lines.  D_{i,1} are the coordinate-triangle sides;
// D_{i,2} and D_{i,3} are the pencil members x_{i+2} = a_i x_{i+1} and
// x_{i+2} = b_i x_{i+1} through the reference point P_i.
struct BurniatConfig {
    std::array<ProjLine, 9> lines{};
    std::vector<ProjPoint> extra_points;
    CaseTag declared_case = CaseTag::Unclassified;
    BuildParams params;

    const ProjLine& line(int i, int j) const; // 1-based label lookup
};

BurniatConfig build_k6(const std::array<Rat, 3>& a, const std::array<Rat, 3>& b);
BurniatConfig build_k5(const ProjPoint& p4, const std::array<Rat, 3>& b);
BurniatConfig build_k4nn(const ProjPoint& p4, const ProjPoint& p5);
BurniatConfig build_k4n(const ProjPoint& p4, const ProjPoint& p5, const Rat& b1);
BurniatConfig build_burniat_lines(const BuildParams& params);

struct MultiplePoint {
    ProjPoint point;
    int multiplicity = 0;
    std::vector<LineLabel> lines; // sorted labels of the incident lines
};

struct ArrangementScan {
    std::vector<MultiplePoint> corners;    // P1, P2, P3 (blown up before the cover)
    std::vector<MultiplePoint> off_corner; // remaining points of multiplicity >= 3
};

// Every point where at least 3 of the 9 lines meet, corners kept separate.
ArrangementScan find_triple_points(const BurniatConfig& cfg);

struct ClassifyResult {
    CaseTag tag = CaseTag::Unclassified;
    int m = 0;         // off-corner triple points
    int k_squared = 6; // 6 - m
    bool nodal = false;
    ArrangementScan scan;
};

ClassifyResult classify(const BurniatConfig& cfg);

// Weak-Del-Pezzo point conditions for distinct points: no 4 collinear and
// no 7 on a conic.
bool is_weak_del_pezzo_pointset(const std::vector<ProjPoint>& points);

// Fixed sample parameters for each of the four cases.
BurniatConfig canonical_config(CaseTag c);

} // namespace burniat

#include "burniat/plane.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace burniat {

namespace {

int nxt(int i) { return i % 3 + 1; }       // i+1 in {1,2,3}
int nxt2(int i) { return (i + 1) % 3 + 1; } // i+2 in {1,2,3}

Rat coord(const ProjPoint& p, int i) { return p.x[static_cast<size_t>(i - 1)]; }

bool all_coords_nonzero(const ProjPoint& p) {
    return p.x[0] != 0 && p.x[1] != 0 && p.x[2] != 0;
}

// x_{i+2} = t x_{i+1}, the pencil through P_i with the triangle sides excluded
ProjLine pencil_line(int i, int j, const Rat& t) {
    if (t == 0) throw DegenerateConfig("pencil parameter 0 gives a triangle side");
    ProjLine l;
    l.c[static_cast<size_t>(nxt2(i) - 1)] = 1;
    l.c[static_cast<size_t>(nxt(i) - 1)] = -t;
    l.label = {i, j};
    return l;
}

ProjLine side_line(int i) {
    ProjLine l;
    l.c[static_cast<size_t>(nxt2(i) - 1)] = 1; // x_{i+2} = 0 joins P_i and P_{i+1}
    l.label = {i, 1};
    return l;
}

// slope of the pencil-i member through p: x_{i+2} = t x_{i+1}
Rat pencil_parameter(int i, const ProjPoint& p) {
    return coord(p, nxt2(i)) / coord(p, nxt(i));
}

void check_extra_point(const ProjPoint& p, const char* name) {
    if (!all_coords_nonzero(p))
        throw DegenerateConfig(std::string(name) + " lies on a triangle side");
}

void check_all_distinct(const std::array<ProjLine, 9>& lines) {
    for (size_t i = 0; i < lines.size(); ++i)
        for (size_t j = i + 1; j < lines.size(); ++j)
            if (same_line(lines[i], lines[j]))
                throw DegenerateConfig("repeated line: the branch divisor is not reduced");
}

BurniatConfig assemble(CaseTag tag, const std::array<Rat, 3>& a, const std::array<Rat, 3>& b,
                       std::vector<ProjPoint> extra, BuildParams params) {
    BurniatConfig cfg;
    for (int i = 1; i <= 3; ++i) {
        cfg.lines[static_cast<size_t>(3 * (i - 1))] = side_line(i);
        cfg.lines[static_cast<size_t>(3 * (i - 1) + 1)] = pencil_line(i, 2, a[static_cast<size_t>(i - 1)]);
        cfg.lines[static_cast<size_t>(3 * (i - 1) + 2)] = pencil_line(i, 3, b[static_cast<size_t>(i - 1)]);
    }
    check_all_distinct(cfg.lines);
    cfg.extra_points = std::move(extra);
    cfg.declared_case = tag;
    cfg.params = std::move(params);
    return cfg;
}

} // namespace

std::string case_name(CaseTag c) {
    switch (c) {
    case CaseTag::K6: return "K6";
    case CaseTag::K5: return "K5";
    case CaseTag::K4nn: return "K4nn";
    case CaseTag::K4n: return "K4n";
    case CaseTag::K3: return "K3";
    case CaseTag::K2: return "K2";
    case CaseTag::Unclassified: return "unclassified";
    }
    return "unclassified";
}

CaseTag case_from_name(const std::string& name) {
    if (name == "K6") return CaseTag::K6;
    if (name == "K5") return CaseTag::K5;
    if (name == "K4nn") return CaseTag::K4nn;
    if (name == "K4n") return CaseTag::K4n;
    if (name == "K3") return CaseTag::K3;
    if (name == "K2") return CaseTag::K2;
    if (name == "unclassified") return CaseTag::Unclassified;
    throw InputError("unknown case tag: " + name);
}

const ProjPoint& ProjPoint::reference(int i) {
    static const std::array<ProjPoint, 3> refs = {
        ProjPoint::of(1, 0, 0), ProjPoint::of(0, 1, 0), ProjPoint::of(0, 0, 1)};
    if (i < 1 || i > 3) throw InputError("reference point index out of range");
    return refs[static_cast<size_t>(i - 1)];
}

bool same_point(const ProjPoint& p, const ProjPoint& q) {
    return p.canonical() == q.canonical();
}

bool same_line(const ProjLine& l, const ProjLine& m) {
    return l.canonical() == m.canonical();
}

bool incident(const ProjPoint& p, const ProjLine& l) {
    return p.x[0] * l.c[0] + p.x[1] * l.c[1] + p.x[2] * l.c[2] == 0;
}

bool collinear(const ProjPoint& p, const ProjPoint& q, const ProjPoint& s) {
    const Rat det = p.x[0] * (q.x[1] * s.x[2] - q.x[2] * s.x[1])
                  - p.x[1] * (q.x[0] * s.x[2] - q.x[2] * s.x[0])
                  + p.x[2] * (q.x[0] * s.x[1] - q.x[1] * s.x[0]);
    return det == 0;
}

ProjPoint meet(const ProjLine& l, const ProjLine& m) {
    ProjPoint p = ProjPoint::of(l.c[1] * m.c[2] - l.c[2] * m.c[1],
                                l.c[2] * m.c[0] - l.c[0] * m.c[2],
                                l.c[0] * m.c[1] - l.c[1] * m.c[0]);
    if (p.x[0] == 0 && p.x[1] == 0 && p.x[2] == 0)
        throw DegenerateConfig("meet of coincident lines");
    return p;
}

ProjLine join(const ProjPoint& p, const ProjPoint& q) {
    ProjLine l;
    l.c = {p.x[1] * q.x[2] - p.x[2] * q.x[1],
           p.x[2] * q.x[0] - p.x[0] * q.x[2],
           p.x[0] * q.x[1] - p.x[1] * q.x[0]};
    if (l.c[0] == 0 && l.c[1] == 0 && l.c[2] == 0)
        throw DegenerateConfig("join of equal points");
    return l;
}

const ProjLine& BurniatConfig::line(int i, int j) const {
    for (const auto& l : lines)
        if (l.label == LineLabel{i, j}) return l;
    throw InputError("no line labeled (" + std::to_string(i) + "," + std::to_string(j) + ")");
}

BurniatConfig build_k6(const std::array<Rat, 3>& a, const std::array<Rat, 3>& b) {
    BuildParams params;
    params.c = CaseTag::K6;
    params.a.assign(a.begin(), a.end());
    params.b.assign(b.begin(), b.end());
    return assemble(CaseTag::K6, a, b, {}, std::move(params));
}

BurniatConfig build_k5(const ProjPoint& p4, const std::array<Rat, 3>& b) {
    check_extra_point(p4, "P4");
    std::array<Rat, 3> a;
    for (int i = 1; i <= 3; ++i) a[static_cast<size_t>(i - 1)] = pencil_parameter(i, p4);
    BuildParams params;
    params.c = CaseTag::K5;
    params.b.assign(b.begin(), b.end());
    params.extra_points = {p4};
    return assemble(CaseTag::K5, a, b, {p4}, std::move(params));
}

BurniatConfig build_k4nn(const ProjPoint& p4, const ProjPoint& p5) {
    check_extra_point(p4, "P4");
    check_extra_point(p5, "P5");
    if (same_point(p4, p5)) throw DegenerateConfig("P4 and P5 coincide");
    std::array<Rat, 3> a, b;
    for (int i = 1; i <= 3; ++i) {
        a[static_cast<size_t>(i - 1)] = pencil_parameter(i, p4);
        b[static_cast<size_t>(i - 1)] = pencil_parameter(i, p5);
    }
    BuildParams params;
    params.c = CaseTag::K4nn;
    params.extra_points = {p4, p5};
    return assemble(CaseTag::K4nn, a, b, {p4, p5}, std::move(params));
}

BurniatConfig build_k4n(const ProjPoint& p4, const ProjPoint& p5, const Rat& b1) {
    check_extra_point(p4, "P4");
    check_extra_point(p5, "P5");
    if (same_point(p4, p5)) throw DegenerateConfig("P4 and P5 coincide");
    if (!collinear(ProjPoint::reference(1), p4, p5))
        throw DegenerateConfig("nodal case needs P1, P4, P5 collinear");
    std::array<Rat, 3> a, b;
    a[0] = pencil_parameter(1, p4); // D_{1,2} carries both P4 and P5
    a[1] = pencil_parameter(2, p4);
    a[2] = pencil_parameter(3, p4);
    b[0] = b1;
    b[1] = pencil_parameter(2, p5);
    b[2] = pencil_parameter(3, p5);
    BuildParams params;
    params.c = CaseTag::K4n;
    params.b = {b1};
    params.extra_points = {p4, p5};
    return assemble(CaseTag::K4n, a, b, {p4, p5}, std::move(params));
}

BurniatConfig build_burniat_lines(const BuildParams& params) {
    auto need = [](const std::vector<Rat>& v, size_t n, const char* what) {
        if (v.size() != n) throw InputError(std::string("expected ") + std::to_string(n) + " " + what);
    };
    switch (params.c) {
    case CaseTag::K6: {
        need(params.a, 3, "a-parameters");
        need(params.b, 3, "b-parameters");
        return build_k6({params.a[0], params.a[1], params.a[2]},
                        {params.b[0], params.b[1], params.b[2]});
    }
    case CaseTag::K5: {
        need(params.b, 3, "b-parameters");
        if (params.extra_points.size() != 1) throw InputError("K5 needs exactly P4");
        return build_k5(params.extra_points[0], {params.b[0], params.b[1], params.b[2]});
    }
    case CaseTag::K4nn: {
        if (params.extra_points.size() != 2) throw InputError("K4nn needs P4 and P5");
        return build_k4nn(params.extra_points[0], params.extra_points[1]);
    }
    case CaseTag::K4n: {
        need(params.b, 1, "b-parameters");
        if (params.extra_points.size() != 2) throw InputError("K4n needs P4 and P5");
        return build_k4n(params.extra_points[0], params.extra_points[1], params.b[0]);
    }
    default:
        throw InputError("buildable cases are K6, K5, K4nn, K4n");
    }
}

ArrangementScan find_triple_points(const BurniatConfig& cfg) {
    check_all_distinct(cfg.lines);
    std::map<std::array<Int, 3>, ProjPoint> candidates;
    for (size_t i = 0; i < cfg.lines.size(); ++i)
        for (size_t j = i + 1; j < cfg.lines.size(); ++j) {
            ProjPoint p = meet(cfg.lines[i], cfg.lines[j]);
            candidates.emplace(p.canonical(), p);
        }

    ArrangementScan scan;
    for (const auto& [key, p] : candidates) {
        MultiplePoint mp;
        mp.point = p;
        for (const auto& l : cfg.lines)
            if (incident(p, l)) mp.lines.push_back(l.label);
        std::sort(mp.lines.begin(), mp.lines.end());
        mp.multiplicity = static_cast<int>(mp.lines.size());
        bool corner = false;
        for (int i = 1; i <= 3; ++i)
            if (same_point(p, ProjPoint::reference(i))) corner = true;
        if (corner)
            scan.corners.push_back(std::move(mp));
        else if (mp.multiplicity >= 3)
            scan.off_corner.push_back(std::move(mp));
    }
    return scan;
}

ClassifyResult classify(const BurniatConfig& cfg) {
    std::set<std::pair<int, int>> labels;
    for (const auto& l : cfg.lines) {
        if ((l.c[0] == 0 && l.c[1] == 0 && l.c[2] == 0) || l.label.i < 1 || l.label.i > 3 ||
            l.label.j < 1 || l.label.j > 3)
            throw InputError("malformed line entry");
        labels.emplace(l.label.i, l.label.j);
    }
    if (labels.size() != 9) throw InputError("the 9 labels (i,j) must each appear once");

    ClassifyResult res;
    res.scan = find_triple_points(cfg);

    for (const auto& mp : res.scan.off_corner) {
        if (mp.multiplicity >= 4)
            throw InvalidBurniat("point of multiplicity >= 4 off the triangle corners");
        std::set<int> groups;
        for (const auto& lab : mp.lines) groups.insert(lab.i);
        if (groups.size() != 3)
            throw InvalidBurniat("triple point with two lines from one pencil (not type (1,1,1))");
    }

    // structural invariants of the labelled configuration
    for (int i = 1; i <= 3; ++i) {
        if (!same_line(cfg.line(i, 1), side_line(i)))
            throw InvalidBurniat("D_{i,1} must be the triangle side x_{i+2} = 0");
        for (int j = 2; j <= 3; ++j)
            if (!incident(ProjPoint::reference(i), cfg.line(i, j)))
                throw InvalidBurniat("pencil line does not pass through its reference point");
    }

    res.m = static_cast<int>(res.scan.off_corner.size());
    if (res.m > 4)
        throw InvalidBurniat("more than 4 singular points of the branch divisor");
    res.k_squared = 6 - res.m;

    if (!cfg.extra_points.empty()) {
        if (cfg.extra_points.size() != res.scan.off_corner.size())
            throw InvalidBurniat("extra_points do not match the arrangement");
        for (const auto& p : cfg.extra_points) {
            bool found = false;
            for (const auto& mp : res.scan.off_corner)
                if (same_point(p, mp.point)) found = true;
            if (!found) throw InvalidBurniat("extra_points do not match the arrangement");
        }
    }

    // nodal: some line carries >= 3 points of multiplicity >= 3 (corners count)
    for (const auto& l : cfg.lines) {
        int heavy = 0;
        for (const auto& mp : res.scan.corners)
            if (incident(mp.point, l)) ++heavy;
        for (const auto& mp : res.scan.off_corner)
            if (incident(mp.point, l)) ++heavy;
        if (heavy >= 3) res.nodal = true;
    }

    switch (res.m) {
    case 0: res.tag = CaseTag::K6; break;
    case 1: res.tag = CaseTag::K5; break;
    case 2: res.tag = res.nodal ? CaseTag::K4n : CaseTag::K4nn; break;
    case 3: res.tag = CaseTag::K3; break;
    default: res.tag = CaseTag::K2; break;
    }
    return res;
}

namespace {

// exact rank of a dense rational matrix by Gaussian elimination
int rational_rank(std::vector<std::vector<Rat>> m) {
    const size_t rows = m.size();
    const size_t cols = rows == 0 ? 0 : m[0].size();
    int rank = 0;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t pivot = row;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[row]);
        for (size_t k = row + 1; k < rows; ++k) {
            if (m[k][col] == 0) continue;
            const Rat f = m[k][col] / m[row][col];
            for (size_t c2 = col; c2 < cols; ++c2) m[k][c2] -= f * m[row][c2];
        }
        ++row;
        ++rank;
    }
    return rank;
}

std::vector<Rat> veronese(const ProjPoint& p) {
    const Rat& x = p.x[0];
    const Rat& y = p.x[1];
    const Rat& z = p.x[2];
    return {x * x, y * y, z * z, x * y, x * z, y * z};
}

} // namespace

bool is_weak_del_pezzo_pointset(const std::vector<ProjPoint>& points) {
    const size_t n = points.size();
    if (n > 8) throw InputError("at most 8 points");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (same_point(points[i], points[j])) throw InputError("duplicate points");

    // no 4 on a line
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            const ProjLine l = join(points[i], points[j]);
            int on = 0;
            for (const auto& p : points)
                if (incident(p, l)) ++on;
            if (on >= 4) return false;
        }

    // no 7 on a conic: some 7-subset with Veronese rank <= 5
    if (n >= 7) {
        std::vector<bool> pick(n, false);
        std::fill(pick.begin(), pick.begin() + 7, true);
        std::sort(pick.begin(), pick.end());
        do {
            std::vector<std::vector<Rat>> m;
            for (size_t i = 0; i < n; ++i)
                if (pick[i]) m.push_back(veronese(points[i]));
            if (rational_rank(std::move(m)) <= 5) return false;
        } while (std::next_permutation(pick.begin(), pick.end()));
    }
    return true;
}

BurniatConfig canonical_config(CaseTag c) {
    switch (c) {
    case CaseTag::K6:
        return build_k6({Rat(2), Rat(3), Rat(5)}, {Rat(7), Rat(11), Rat(13)});
    case CaseTag::K5:
        return build_k5(ProjPoint::of(1, 1, 1), {Rat(2), Rat(3), Rat(5)});
    case CaseTag::K4nn:
        return build_k4nn(ProjPoint::of(1, 1, 1), ProjPoint::of(1, 2, 3));
    case CaseTag::K4n:
        return build_k4n(ProjPoint::of(1, 1, 1), ProjPoint::of(2, 1, 1), Rat(5));
    default:
        throw InputError("no canonical configuration for case " + case_name(c));
    }
}

} // namespace burniat

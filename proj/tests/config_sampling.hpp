// Test-side generators of valid parameter draws for the four cases.  The
// rejection conditions are explicit geometry, not classify() feedback:
// a triple D_{1,j1}, D_{2,j2}, D_{3,j3} is concurrent at an off-corner point
// exactly when the product of its three pencil parameters is 1.
#pragma once

#include <array>
#include <vector>

#include "burniat/plane.hpp"
#include "burniat/rng.hpp"

namespace burniat::testing {

inline Rat pencil_param(int i, const ProjPoint& p) {
    const int next = i % 3 + 1;
    const int next2 = (i + 1) % 3 + 1;
    return p.x[static_cast<size_t>(next2 - 1)] / p.x[static_cast<size_t>(next - 1)];
}

inline bool products_avoid_one(const std::array<Rat, 3>& a, const std::array<Rat, 3>& b,
                               const std::vector<std::array<int, 3>>& picks) {
    for (const auto& pick : picks) {
        Rat prod = 1;
        for (int i = 0; i < 3; ++i)
            prod *= pick[static_cast<size_t>(i)] == 0 ? a[static_cast<size_t>(i)] : b[static_cast<size_t>(i)];
        if (prod == 1) return false;
    }
    return true;
}

inline std::vector<std::array<int, 3>> all_picks() {
    std::vector<std::array<int, 3>> picks;
    for (int mask = 0; mask < 8; ++mask)
        picks.push_back({mask & 1, (mask >> 1) & 1, (mask >> 2) & 1});
    return picks;
}

inline ProjPoint random_generic_point(SplitMix64& rng) {
    return ProjPoint::of(rng.next_rational(), rng.next_rational(), rng.next_rational());
}

inline BurniatConfig draw_k6(SplitMix64& rng) {
    for (;;) {
        std::array<Rat, 3> a = {rng.next_rational(), rng.next_rational(), rng.next_rational()};
        std::array<Rat, 3> b = {rng.next_rational(), rng.next_rational(), rng.next_rational()};
        bool ok = a[0] != b[0] && a[1] != b[1] && a[2] != b[2];
        if (ok && products_avoid_one(a, b, all_picks())) return build_k6(a, b);
    }
}

inline BurniatConfig draw_k5(SplitMix64& rng) {
    for (;;) {
        const ProjPoint p4 = random_generic_point(rng);
        std::array<Rat, 3> a, b;
        for (int i = 1; i <= 3; ++i) a[static_cast<size_t>(i - 1)] = pencil_param(i, p4);
        b = {rng.next_rational(), rng.next_rational(), rng.next_rational()};
        if (a[0] == b[0] || a[1] == b[1] || a[2] == b[2]) continue;
        // keep only the automatic concurrency a1 a2 a3 = 1 at P4
        auto picks = all_picks();
        std::erase(picks, std::array<int, 3>{0, 0, 0});
        if (!products_avoid_one(a, b, picks)) continue;
        return build_k5(p4, b);
    }
}

inline BurniatConfig draw_k4nn(SplitMix64& rng) {
    for (;;) {
        const ProjPoint p4 = random_generic_point(rng);
        const ProjPoint p5 = random_generic_point(rng);
        if (same_point(p4, p5)) continue;
        bool collinear_with_corner = false;
        for (int i = 1; i <= 3; ++i)
            if (collinear(ProjPoint::reference(i), p4, p5)) collinear_with_corner = true;
        if (collinear_with_corner) continue;
        std::array<Rat, 3> a, b;
        for (int i = 1; i <= 3; ++i) {
            a[static_cast<size_t>(i - 1)] = pencil_param(i, p4);
            b[static_cast<size_t>(i - 1)] = pencil_param(i, p5);
        }
        auto picks = all_picks();
        std::erase(picks, std::array<int, 3>{0, 0, 0}); // P4
        std::erase(picks, std::array<int, 3>{1, 1, 1}); // P5
        if (!products_avoid_one(a, b, picks)) continue;
        return build_k4nn(p4, p5);
    }
}

inline BurniatConfig draw_k4n(SplitMix64& rng) {
    for (;;) {
        const ProjPoint p4 = random_generic_point(rng);
        // P5 = s P1 + t P4 stays on the line through P1 and P4
        const Rat s = rng.next_rational(), t = rng.next_rational();
        const ProjPoint p5 = ProjPoint::of(s + t * p4.x[0], t * p4.x[1], t * p4.x[2]);
        if (p5.x[0] == 0 || same_point(p4, p5)) continue;
        const Rat b1 = rng.next_rational();
        std::array<Rat, 3> a, b;
        for (int i = 1; i <= 3; ++i) a[static_cast<size_t>(i - 1)] = pencil_param(i, p4);
        b = {b1, pencil_param(2, p5), pencil_param(3, p5)};
        if (a[0] == b[0] || a[1] == b[1] || a[2] == b[2]) continue;
        auto picks = all_picks();
        std::erase(picks, std::array<int, 3>{0, 0, 0}); // P4
        std::erase(picks, std::array<int, 3>{0, 1, 1}); // P5 lies on D_{1,2}: a1 b2 b3 = 1
        if (!products_avoid_one(a, b, picks)) continue;
        return build_k4n(p4, p5, b1);
    }
}

inline BurniatConfig draw_config(CaseTag tag, SplitMix64& rng) {
    switch (tag) {
    case CaseTag::K6: return draw_k6(rng);
    case CaseTag::K5: return draw_k5(rng);
    case CaseTag::K4nn: return draw_k4nn(rng);
    case CaseTag::K4n: return draw_k4n(rng);
    default: throw InputError("no sampler for case " + case_name(tag));
    }
}

} // namespace burniat::testing

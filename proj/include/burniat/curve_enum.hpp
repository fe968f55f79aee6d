#pragma once

#include <vector>

#include "burniat/picard.hpp"

namespace burniat {

enum class CurveKind { Minus1, Minus2 };

struct CurveClassList {
    int r = 0;
    CurveKind kind = CurveKind::Minus1;
    std::vector<DivisorClass> classes; // sorted lexicographically on (a, b)
};

// All integer solutions of C.C = -1, C.K = -1 with 0 <= a <= 3, i.e.
// a^2 + 1 = sum b_j^2 and sum b_j = 3a - 1.
CurveClassList enumerate_minus1_classes(int r);

// All integer solutions of C.C = -2, C.K = 0 with 0 <= a <= 3, i.e.
// a^2 + 2 = sum b_j^2 and sum b_j = 3a.
CurveClassList enumerate_minus2_classes(int r);

// N(r) = r + C(r,2) + C(r,5); equals the (-1)-class count for r <= 6.
long long max_line_count(int r);

// Lines of the anticanonical model: the (-1)-classes meeting every listed
// effective (-2)-class nonnegatively.
CurveClassList lines_on_weak_dp(int r, const std::vector<DivisorClass>& effective_minus2);

long long binomial(int n, int k);

} // namespace burniat

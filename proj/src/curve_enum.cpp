#include "burniat/curve_enum.hpp"

#include <algorithm>
#include <cstdlib>

namespace burniat {

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long v = 1;
    for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
    return v;
}

namespace {

void check_r(int r) {
    if (r < 0 || r > 8) throw InputError("blow-up count r must lie in [0, 8]");
}

// Enumerates b in Z^r with sum b_j = target_sum and sum b_j^2 = target_sq.
// Coefficients are bounded by |b_j| <= 3 since target_sq <= 11 here.
void enumerate_b(int r, long long target_sum, long long target_sq,
                 std::vector<long long>& b, int pos, long long sum, long long sq,
                 long long a, std::vector<DivisorClass>& out) {
    if (pos == r) {
        if (sum == target_sum && sq == target_sq)
            out.emplace_back(a, b);
        return;
    }
    const int remaining = r - pos;
    for (long long v = -3; v <= 3; ++v) {
        const long long nsq = sq + v * v;
        if (nsq > target_sq) continue;
        const long long nsum = sum + v;
        if (std::llabs(target_sum - nsum) > 3LL * (remaining - 1)) continue;
        b[static_cast<size_t>(pos)] = v;
        enumerate_b(r, target_sum, target_sq, b, pos + 1, nsum, nsq, a, out);
    }
    b[static_cast<size_t>(pos)] = 0;
}

CurveClassList enumerate_negative_curves(int r, CurveKind kind) {
    check_r(r);
    CurveClassList list;
    list.r = r;
    list.kind = kind;
    std::vector<long long> b(static_cast<size_t>(r), 0);
    for (long long a = 0; a <= 3; ++a) {
        const long long target_sq = kind == CurveKind::Minus1 ? a * a + 1 : a * a + 2;
        const long long target_sum = kind == CurveKind::Minus1 ? 3 * a - 1 : 3 * a;
        enumerate_b(r, target_sum, target_sq, b, 0, 0, 0, a, list.classes);
    }
    std::sort(list.classes.begin(), list.classes.end());
    return list;
}

} // namespace

CurveClassList enumerate_minus1_classes(int r) {
    return enumerate_negative_curves(r, CurveKind::Minus1);
}

CurveClassList enumerate_minus2_classes(int r) {
    return enumerate_negative_curves(r, CurveKind::Minus2);
}

long long max_line_count(int r) {
    check_r(r);
    return r + binomial(r, 2) + binomial(r, 5);
}

CurveClassList lines_on_weak_dp(int r, const std::vector<DivisorClass>& effective_minus2) {
    check_r(r);
    const CurveClassList minus2 = enumerate_minus2_classes(r);
    for (const auto& d : effective_minus2) {
        if (!std::binary_search(minus2.classes.begin(), minus2.classes.end(), d))
            throw InputError("not a valid (-2)-class: " + to_string(d));
    }
    for (size_t i = 0; i < effective_minus2.size(); ++i)
        for (size_t j = i + 1; j < effective_minus2.size(); ++j)
            if (intersect(effective_minus2[i], effective_minus2[j]) < -2)
                throw InputError("(-2)-classes with pairwise intersection below -2");

    CurveClassList lines = enumerate_minus1_classes(r);
    std::erase_if(lines.classes, [&](const DivisorClass& c) {
        for (const auto& d : effective_minus2)
            if (intersect(c, d) < 0) return true;
        return false;
    });
    return lines;
}

} // namespace burniat

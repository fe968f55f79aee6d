#pragma once

#include <string>
#include <vector>

#include "burniat/errors.hpp"

namespace burniat {

// Picard lattice of the projective plane blown up at r distinct points,
// with basis L, E_1, ..., E_r and pairing L.L = 1, E_i.E_j = -delta_ij,
// L.E_i = 0.
struct SurfaceLattice {
    int r = 0;

    explicit SurfaceLattice(int r_count);
    int rank() const { return r + 1; }
};

// A divisor class a L - sum_j b_j E_j, stored as (a; b_1..b_r).  The
// canonical class is the instance (-3; -1, ..., -1).
struct DivisorClass {
    long long a = 0;
    std::vector<long long> b;

    DivisorClass() = default;
    DivisorClass(long long a_coeff, std::vector<long long> b_coeffs)
        : a(a_coeff), b(std::move(b_coeffs)) {}

    int r() const { return static_cast<int>(b.size()); }
    bool is_zero() const;
    long long norm1() const; // |a| + sum |b_j|

    DivisorClass operator+(const DivisorClass& o) const;
    DivisorClass operator-(const DivisorClass& o) const;
    DivisorClass operator-() const;
    DivisorClass operator*(long long k) const;

    bool operator==(const DivisorClass&) const = default;
    // lexicographic on (a, b); the canonical enumeration order
    bool operator<(const DivisorClass& o) const;
};

DivisorClass line_class(int r);
DivisorClass exceptional_class(int r, int j); // E_j, 1-based
DivisorClass div_class(long long a, std::vector<long long> b);

std::string to_string(const DivisorClass& c);

long long intersect(const DivisorClass& c1, const DivisorClass& c2);

DivisorClass canonical_class(const SurfaceLattice& lat);

enum class Effectivity { Yes, No, Undecided };

struct EffectivityResult {
    Effectivity status = Effectivity::Undecided;
    // When status == Yes the summands (with multiplicity) add back up to the
    // input class exactly.
    std::vector<DivisorClass> decomposition;
};

// Peeling semi-decision for effectivity.  irreducible_negatives lists the
// known irreducible classes of negative self-intersection on the surface;
// the exceptional classes E_j are always added.  While some listed N has
// c.N < 0 it is a component and gets subtracted.  The residual is then
// decided when possible:
//   - 0                                  -> yes
//   - degree a < 0                       -> no (L is nef)
//   - degree 0, nonzero                  -> no when the only degree-0
//     negatives are the E_j: effective degree-0 classes are nonnegative
//     sums of exceptional curves, and those were peeled off already
//   - degree a > 0 with chi(O(c)) >= 1   -> yes (h^2 vanishes since
//     (K - c).L < 0)
// Anything else, and runs exceeding |a| + sum |b_j| peeling steps, return
// undecided.
EffectivityResult is_effective(const DivisorClass& c,
                               const std::vector<DivisorClass>& irreducible_negatives);

} // namespace burniat

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "burniat/rational.hpp"
#include "burniat/rng.hpp"

namespace burniat {

// ----- degree-5 moduli: three pencil parameters (a1, a2, a3) -----

struct ParamPoint5 {
    std::array<Rat, 3> a;

    explicit ParamPoint5(std::array<Rat, 3> a_values);
    bool operator==(const ParamPoint5&) const = default;
};

// cyc: (a1,a2,a3) -> (a2,a3,a1); trans: (a1,a2,a3) -> (1/a2, 1/a1, 1/a3);
// cremona: componentwise inversion.
enum class Gen5 { Cyc, Trans, Cremona };
using Word5 = std::vector<Gen5>;

// Applies the word as a composition, rightmost generator first.
ParamPoint5 act5(const Word5& word, const ParamPoint5& p);

struct Sigma5 {
    Rat s1, s2, s3;
    bool operator==(const Sigma5&) const = default;
};

Sigma5 elementary_symmetric5(const ParamPoint5& p);

struct Invariants5 {
    Rat y1, y2, y3; // y1 = s1 + s2/s3, y2 = s2 + s1/s3, y3 = s3 + 1/s3
    bool operator==(const Invariants5&) const = default;
};

Invariants5 invariants5(const ParamPoint5& p);

// Closure of {p} under the order-12 group (at most 12 points).
std::vector<ParamPoint5> orbit5(const ParamPoint5& p);

// Enumerates the orbit, verifies the sigma-triples fall into exactly two
// classes with a common invariant value, and recovers (s1, s2) from
// (y1, y2, s3) by the 2x2 linear system with determinant 1 - s3^{-2}.
// Throws DegeneratePoint when s3 = +-1 or the two classes collapse.
bool quadratic_extension_check5(const ParamPoint5& p);

// ----- degree-6 moduli: three pairs of pencil parameters -----

struct ParamPoint6 {
    std::array<Rat, 3> a, b;

    ParamPoint6(std::array<Rat, 3> a_values, std::array<Rat, 3> b_values);
    bool operator==(const ParamPoint6&) const = default;
};

struct Gen6 {
    enum class Kind { Perm, Flip, Torus, Cremona };
    Kind kind = Kind::Cremona;
    std::array<int, 3> perm{1, 2, 3}; // image of (1,2,3)
    int flip_index = 1;
    Rat lam1 = 1, lam2 = 1; // lam3 = 1/(lam1 lam2)

    static Gen6 permutation(std::array<int, 3> image);
    static Gen6 flip(int i);
    static Gen6 torus(Rat l1, Rat l2);
    static Gen6 cremona();
};

using Word6 = std::vector<Gen6>;

ParamPoint6 act6(const Word6& word, const ParamPoint6& p);

// Diagonal rescaling with a free product, not a group element of the
// product-one torus; used by the quotient check.
ParamPoint6 rescale6(const ParamPoint6& p, const std::array<Rat, 3>& lambda);

struct Derived6 {
    std::array<Rat, 3> u, v, w; // u_i = a_i b_i, v_i = a_i + b_i, w_i = u_i / v_i^2
    Rat v_prod;
};

Derived6 derived6(const ParamPoint6& p);

struct Invariants6 {
    Rat sw1, sw2, sw3; // elementary symmetric functions of (w1, w2, w3)
    Rat s;             // v + 1/(v w1 w2 w3)
    bool operator==(const Invariants6&) const = default;
};

Invariants6 invariants6(const ParamPoint6& p);

// (w, v) coordinates cut out the torus orbits: product-one rescalings fix
// them, a general rescaling scales v by the product, and a torus element
// carrying p to q is recovered from the ratios v_i(q)/v_i(p).
bool torus_quotient_check6(const ParamPoint6& p, SplitMix64& rng);

ParamPoint5 random_point5(SplitMix64& rng);
ParamPoint5 random_generic_point5(SplitMix64& rng); // rejects the degenerate loci
ParamPoint6 random_point6(SplitMix64& rng);

struct IdentityTrialReport {
    std::string identity;
    int trials = 0;
    int failures = 0;
};

// The invariance identities are polynomial of total degree at most 12 in the
// parameters, so exact agreement at enough distinct random rationals settles
// them: use at least 2 * degree + 1 evaluations.  The orbit-separation entry
// for the infinite group is only sampled, never a proof.
inline constexpr int kMaxIdentityDegree = 12;
inline constexpr int kCertifyingTrials = 2 * kMaxIdentityDegree + 1;

std::vector<IdentityTrialReport> run_invariant_suite5(int trials, std::uint64_t seed);
std::vector<IdentityTrialReport> run_invariant_suite6(int trials, std::uint64_t seed);

} // namespace burniat

#include "burniat/invariants.hpp"

#include <algorithm>
#include <functional>

#include "burniat/errors.hpp"

namespace burniat {

ParamPoint5::ParamPoint5(std::array<Rat, 3> a_values) : a(std::move(a_values)) {
    for (const auto& v : a)
        if (v == 0) throw InputError("pencil parameters must be nonzero");
}

namespace {

ParamPoint5 apply_gen5(Gen5 g, const ParamPoint5& p) {
    const auto& a = p.a;
    switch (g) {
    case Gen5::Cyc: return ParamPoint5({a[1], a[2], a[0]});
    case Gen5::Trans: return ParamPoint5({1 / a[1], 1 / a[0], 1 / a[2]});
    case Gen5::Cremona: return ParamPoint5({1 / a[0], 1 / a[1], 1 / a[2]});
    }
    throw InternalError("unreachable generator");
}

} // namespace

ParamPoint5 act5(const Word5& word, const ParamPoint5& p) {
    ParamPoint5 q = p;
    for (auto it = word.rbegin(); it != word.rend(); ++it) q = apply_gen5(*it, q);
    return q;
}

Sigma5 elementary_symmetric5(const ParamPoint5& p) {
    const auto& a = p.a;
    return Sigma5{a[0] + a[1] + a[2], a[0] * a[1] + a[0] * a[2] + a[1] * a[2], a[0] * a[1] * a[2]};
}

Invariants5 invariants5(const ParamPoint5& p) {
    const Sigma5 s = elementary_symmetric5(p);
    return Invariants5{s.s1 + s.s2 / s.s3, s.s2 + s.s1 / s.s3, s.s3 + 1 / s.s3};
}

std::vector<ParamPoint5> orbit5(const ParamPoint5& p) {
    std::vector<ParamPoint5> orbit{p};
    const Gen5 gens[] = {Gen5::Cyc, Gen5::Trans, Gen5::Cremona};
    for (size_t k = 0; k < orbit.size(); ++k) {
        for (Gen5 g : gens) {
            ParamPoint5 q = apply_gen5(g, orbit[k]);
            if (std::find(orbit.begin(), orbit.end(), q) == orbit.end())
                orbit.push_back(std::move(q));
        }
    }
    return orbit;
}

bool quadratic_extension_check5(const ParamPoint5& p) {
    const Sigma5 sp = elementary_symmetric5(p);
    if (sp.s3 == 1 || sp.s3 == -1)
        throw DegeneratePoint("sigma3 = +-1: the recovery system degenerates");
    const Sigma5 sc = elementary_symmetric5(act5({Gen5::Cremona}, p));
    if (sp == sc) throw DegeneratePoint("point conjugate to itself under the Cremona map");

    const std::vector<ParamPoint5> orbit = orbit5(p);
    const Invariants5 y = invariants5(p);

    std::vector<Sigma5> sigma_classes;
    for (const auto& q : orbit) {
        if (!(invariants5(q) == y)) return false;
        const Sigma5 s = elementary_symmetric5(q);
        if (std::find(sigma_classes.begin(), sigma_classes.end(), s) == sigma_classes.end())
            sigma_classes.push_back(s);
    }
    if (sigma_classes.size() != 2) return false;

    // recover (s1, s2) from (y1, y2, s3):  s1 + s2/s3 = y1,  s2 + s1/s3 = y2
    for (const auto& s : sigma_classes) {
        const Rat inv3 = 1 / s.s3;
        const Rat det = 1 - inv3 * inv3;
        if (det == 0) throw DegeneratePoint("sigma3 = +-1 in the orbit");
        const Rat s1 = (y.y1 - y.y2 * inv3) / det;
        const Rat s2 = (y.y2 - y.y1 * inv3) / det;
        if (s1 != s.s1 || s2 != s.s2) return false;
    }
    return true;
}

ParamPoint6::ParamPoint6(std::array<Rat, 3> a_values, std::array<Rat, 3> b_values)
    : a(std::move(a_values)), b(std::move(b_values)) {
    for (int i = 0; i < 3; ++i) {
        const auto& ai = a[static_cast<size_t>(i)];
        const auto& bi = b[static_cast<size_t>(i)];
        if (ai == 0 || bi == 0) throw InputError("pencil parameters must be nonzero");
        if (ai == bi) throw InputError("a_i = b_i gives a repeated line");
        if (ai + bi == 0) throw DegeneratePoint("v_i = a_i + b_i vanishes");
    }
}

Gen6 Gen6::permutation(std::array<int, 3> image) {
    std::array<int, 3> sorted = image;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != std::array<int, 3>{1, 2, 3}) throw InputError("not a permutation of {1,2,3}");
    Gen6 g;
    g.kind = Kind::Perm;
    g.perm = image;
    return g;
}

Gen6 Gen6::flip(int i) {
    if (i < 1 || i > 3) throw InputError("flip index out of range");
    Gen6 g;
    g.kind = Kind::Flip;
    g.flip_index = i;
    return g;
}

Gen6 Gen6::torus(Rat l1, Rat l2) {
    if (l1 == 0 || l2 == 0) throw InputError("torus parameters must be nonzero");
    Gen6 g;
    g.kind = Kind::Torus;
    g.lam1 = std::move(l1);
    g.lam2 = std::move(l2);
    return g;
}

Gen6 Gen6::cremona() {
    Gen6 g;
    g.kind = Kind::Cremona;
    return g;
}

namespace {

ParamPoint6 apply_gen6(const Gen6& g, const ParamPoint6& p) {
    std::array<Rat, 3> a = p.a, b = p.b;
    switch (g.kind) {
    case Gen6::Kind::Perm: {
        std::array<Rat, 3> na, nb;
        for (int i = 0; i < 3; ++i) {
            na[static_cast<size_t>(g.perm[static_cast<size_t>(i)] - 1)] = a[static_cast<size_t>(i)];
            nb[static_cast<size_t>(g.perm[static_cast<size_t>(i)] - 1)] = b[static_cast<size_t>(i)];
        }
        return ParamPoint6(na, nb);
    }
    case Gen6::Kind::Flip:
        std::swap(a[static_cast<size_t>(g.flip_index - 1)], b[static_cast<size_t>(g.flip_index - 1)]);
        return ParamPoint6(a, b);
    case Gen6::Kind::Torus: {
        const std::array<Rat, 3> lam = {g.lam1, g.lam2, 1 / (g.lam1 * g.lam2)};
        for (int i = 0; i < 3; ++i) {
            a[static_cast<size_t>(i)] *= lam[static_cast<size_t>(i)];
            b[static_cast<size_t>(i)] *= lam[static_cast<size_t>(i)];
        }
        return ParamPoint6(a, b);
    }
    case Gen6::Kind::Cremona:
        for (int i = 0; i < 3; ++i) {
            a[static_cast<size_t>(i)] = 1 / a[static_cast<size_t>(i)];
            b[static_cast<size_t>(i)] = 1 / b[static_cast<size_t>(i)];
        }
        return ParamPoint6(a, b);
    }
    throw InternalError("unreachable generator");
}

} // namespace

ParamPoint6 act6(const Word6& word, const ParamPoint6& p) {
    ParamPoint6 q = p;
    for (auto it = word.rbegin(); it != word.rend(); ++it) q = apply_gen6(*it, q);
    return q;
}

ParamPoint6 rescale6(const ParamPoint6& p, const std::array<Rat, 3>& lambda) {
    std::array<Rat, 3> a = p.a, b = p.b;
    for (int i = 0; i < 3; ++i) {
        if (lambda[static_cast<size_t>(i)] == 0) throw InputError("zero rescaling factor");
        a[static_cast<size_t>(i)] *= lambda[static_cast<size_t>(i)];
        b[static_cast<size_t>(i)] *= lambda[static_cast<size_t>(i)];
    }
    return ParamPoint6(a, b);
}

Derived6 derived6(const ParamPoint6& p) {
    Derived6 d;
    d.v_prod = 1;
    for (int i = 0; i < 3; ++i) {
        d.u[static_cast<size_t>(i)] = p.a[static_cast<size_t>(i)] * p.b[static_cast<size_t>(i)];
        d.v[static_cast<size_t>(i)] = p.a[static_cast<size_t>(i)] + p.b[static_cast<size_t>(i)];
        d.w[static_cast<size_t>(i)] = d.u[static_cast<size_t>(i)] / (d.v[static_cast<size_t>(i)] * d.v[static_cast<size_t>(i)]);
        d.v_prod *= d.v[static_cast<size_t>(i)];
    }
    return d;
}

Invariants6 invariants6(const ParamPoint6& p) {
    const Derived6 d = derived6(p);
    Invariants6 inv;
    inv.sw1 = d.w[0] + d.w[1] + d.w[2];
    inv.sw2 = d.w[0] * d.w[1] + d.w[0] * d.w[2] + d.w[1] * d.w[2];
    inv.sw3 = d.w[0] * d.w[1] * d.w[2];
    inv.s = d.v_prod + 1 / (d.v_prod * inv.sw3);
    return inv;
}

bool torus_quotient_check6(const ParamPoint6& p, SplitMix64& rng) {
    const Derived6 dp = derived6(p);

    // a product-one torus element fixes (w, v)
    const Gen6 t = Gen6::torus(rng.next_rational(), rng.next_rational());
    const ParamPoint6 q = act6({t}, p);
    const Derived6 dq = derived6(q);
    if (dq.w != dp.w || dq.v_prod != dp.v_prod) return false;
    if (!(invariants6(q) == invariants6(p))) return false;

    // a general rescaling of product c fixes w and scales v by c
    const std::array<Rat, 3> lam = {rng.next_rational(), rng.next_rational(), rng.next_rational()};
    const Rat c = lam[0] * lam[1] * lam[2];
    const Derived6 ds = derived6(rescale6(p, lam));
    if (ds.w != dp.w || ds.v_prod != c * dp.v_prod) return false;

    // recover the torus element from the v_i ratios
    std::array<Rat, 3> recovered;
    Rat prod = 1;
    for (int i = 0; i < 3; ++i) {
        recovered[static_cast<size_t>(i)] = dq.v[static_cast<size_t>(i)] / dp.v[static_cast<size_t>(i)];
        prod *= recovered[static_cast<size_t>(i)];
    }
    if (prod != 1) return false;
    if (!(rescale6(p, recovered) == q)) return false;

    // comparing p with itself recovers the identity element
    for (int i = 0; i < 3; ++i)
        if (dp.v[static_cast<size_t>(i)] / dp.v[static_cast<size_t>(i)] != 1) return false;
    return true;
}

ParamPoint5 random_point5(SplitMix64& rng) {
    return ParamPoint5({rng.next_rational(), rng.next_rational(), rng.next_rational()});
}

ParamPoint5 random_generic_point5(SplitMix64& rng) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        ParamPoint5 p = random_point5(rng);
        const Sigma5 s = elementary_symmetric5(p);
        if (s.s3 == 1 || s.s3 == -1) continue;
        if (s == elementary_symmetric5(act5({Gen5::Cremona}, p))) continue;
        return p;
    }
    throw InternalError("could not draw a generic parameter point");
}

ParamPoint6 random_point6(SplitMix64& rng) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::array<Rat, 3> a = {rng.next_rational(), rng.next_rational(), rng.next_rational()};
        std::array<Rat, 3> b = {rng.next_rational(), rng.next_rational(), rng.next_rational()};
        bool ok = true;
        for (int i = 0; i < 3; ++i)
            if (a[static_cast<size_t>(i)] == b[static_cast<size_t>(i)] ||
                a[static_cast<size_t>(i)] + b[static_cast<size_t>(i)] == 0)
                ok = false;
        if (ok) return ParamPoint6(a, b);
    }
    throw InternalError("could not draw a valid parameter point");
}

namespace {

constexpr int kExtensionDraws = 100;
constexpr int kSeparationPairs = 200;

struct SuiteRunner {
    std::vector<IdentityTrialReport> reports;

    void run(const std::string& name, int trials, const std::function<bool()>& trial) {
        IdentityTrialReport rep;
        rep.identity = name;
        rep.trials = trials;
        for (int t = 0; t < trials; ++t)
            if (!trial()) ++rep.failures;
        reports.push_back(std::move(rep));
    }
};

} // namespace

std::vector<IdentityTrialReport> run_invariant_suite5(int trials, std::uint64_t seed) {
    if (trials <= 0) throw InputError("trials must be positive");
    SplitMix64 rng(seed);
    SuiteRunner suite;

    suite.run("invariants5 fixed by cyc", trials, [&] {
        const ParamPoint5 p = random_point5(rng);
        return invariants5(act5({Gen5::Cyc}, p)) == invariants5(p);
    });
    suite.run("invariants5 fixed by trans", trials, [&] {
        const ParamPoint5 p = random_point5(rng);
        return invariants5(act5({Gen5::Trans}, p)) == invariants5(p);
    });
    suite.run("invariants5 fixed by cremona", trials, [&] {
        const ParamPoint5 p = random_point5(rng);
        return invariants5(act5({Gen5::Cremona}, p)) == invariants5(p);
    });
    suite.run("cremona is an involution", trials, [&] {
        const ParamPoint5 p = random_point5(rng);
        return act5({Gen5::Cremona, Gen5::Cremona}, p) == p;
    });
    suite.run("cyc has order 3", trials, [&] {
        const ParamPoint5 p = random_point5(rng);
        return act5({Gen5::Cyc, Gen5::Cyc, Gen5::Cyc}, p) == p;
    });
    suite.run("trans o cremona acts as the plain transposition", trials, [&] {
        const ParamPoint5 p = random_point5(rng);
        const ParamPoint5 expected({p.a[1], p.a[0], p.a[2]});
        return act5({Gen5::Trans, Gen5::Cremona}, p) == expected;
    });
    suite.run("quadratic extension: two sigma-classes per invariant fibre", kExtensionDraws, [&] {
        return quadratic_extension_check5(random_generic_point5(rng));
    });
    suite.run("orbit separation on 12-element orbits", kSeparationPairs, [&] {
        const ParamPoint5 p = random_generic_point5(rng);
        for (int attempt = 0; attempt < 1000; ++attempt) {
            const ParamPoint5 q = random_point5(rng);
            const auto orbit = orbit5(p);
            if (std::find(orbit.begin(), orbit.end(), q) != orbit.end()) continue;
            return !(invariants5(p) == invariants5(q));
        }
        return false;
    });
    return suite.reports;
}

std::vector<IdentityTrialReport> run_invariant_suite6(int trials, std::uint64_t seed) {
    if (trials <= 0) throw InputError("trials must be positive");
    SplitMix64 rng(seed);
    SuiteRunner suite;

    auto random_perm = [&rng] {
        std::array<int, 3> image = {1, 2, 3};
        for (int i = 2; i > 0; --i)
            std::swap(image[static_cast<size_t>(i)], image[static_cast<size_t>(rng.next_in(0, i))]);
        return Gen6::permutation(image);
    };

    suite.run("invariants6 fixed by permutations", trials, [&] {
        const ParamPoint6 p = random_point6(rng);
        return invariants6(act6({random_perm()}, p)) == invariants6(p);
    });
    suite.run("invariants6 fixed by flips", trials, [&] {
        const ParamPoint6 p = random_point6(rng);
        const int i = static_cast<int>(rng.next_in(1, 3));
        return invariants6(act6({Gen6::flip(i)}, p)) == invariants6(p);
    });
    suite.run("invariants6 fixed by the torus", trials, [&] {
        const ParamPoint6 p = random_point6(rng);
        const Gen6 t = Gen6::torus(rng.next_rational(), rng.next_rational());
        return invariants6(act6({t}, p)) == invariants6(p);
    });
    suite.run("invariants6 fixed by cremona", trials, [&] {
        const ParamPoint6 p = random_point6(rng);
        return invariants6(act6({Gen6::cremona()}, p)) == invariants6(p);
    });
    suite.run("torus fixes w and scales v by the product", trials, [&] {
        const ParamPoint6 p = random_point6(rng);
        const std::array<Rat, 3> lam = {rng.next_rational(), rng.next_rational(), rng.next_rational()};
        const Derived6 before = derived6(p);
        const Derived6 after = derived6(rescale6(p, lam));
        return after.w == before.w && after.v_prod == lam[0] * lam[1] * lam[2] * before.v_prod;
    });
    suite.run("cremona sends v to 1/(v prod w)", trials, [&] {
        const ParamPoint6 p = random_point6(rng);
        const Derived6 before = derived6(p);
        const Derived6 after = derived6(act6({Gen6::cremona()}, p));
        const Rat wprod = before.w[0] * before.w[1] * before.w[2];
        return after.v_prod == 1 / (before.v_prod * wprod);
    });
    suite.run("cremona is an involution", trials, [&] {
        const ParamPoint6 p = random_point6(rng);
        return act6({Gen6::cremona(), Gen6::cremona()}, p) == p;
    });
    suite.run("flips commute", trials, [&] {
        const ParamPoint6 p = random_point6(rng);
        const int i = static_cast<int>(rng.next_in(1, 3));
        const int j = static_cast<int>(rng.next_in(1, 3));
        return act6({Gen6::flip(i), Gen6::flip(j)}, p) == act6({Gen6::flip(j), Gen6::flip(i)}, p);
    });
    suite.run("torus elements compose componentwise", trials, [&] {
        const ParamPoint6 p = random_point6(rng);
        const Rat l1 = rng.next_rational(), l2 = rng.next_rational();
        const Rat m1 = rng.next_rational(), m2 = rng.next_rational();
        return act6({Gen6::torus(l1, l2), Gen6::torus(m1, m2)}, p) ==
               act6({Gen6::torus(l1 * m1, l2 * m2)}, p);
    });
    suite.run("torus quotient recovery", trials, [&] {
        return torus_quotient_check6(random_point6(rng), rng);
    });
    suite.run("invariant separation (sampled, not a proof)", kSeparationPairs, [&] {
        const ParamPoint6 p = random_point6(rng);
        std::vector<Word6> sample;
        for (int k = 0; k < 8; ++k) {
            sample.push_back({random_perm()});
            sample.push_back({Gen6::flip(static_cast<int>(rng.next_in(1, 3)))});
            sample.push_back({Gen6::torus(rng.next_rational(), rng.next_rational())});
            sample.push_back({Gen6::cremona(), random_perm()});
        }
        for (int attempt = 0; attempt < 1000; ++attempt) {
            const ParamPoint6 q = random_point6(rng);
            bool in_sampled_orbit = q == p;
            for (const auto& w : sample)
                if (act6(w, p) == q) in_sampled_orbit = true;
            if (in_sampled_orbit) continue;
            return !(invariants6(p) == invariants6(q));
        }
        return false;
    });
    return suite.reports;
}

} // namespace burniat

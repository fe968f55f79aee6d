#include "burniat/picard.hpp"

#include <algorithm>
#include <cstdlib>

namespace burniat {

SurfaceLattice::SurfaceLattice(int r_count) : r(r_count) {
    if (r < 0 || r > 8) throw InputError("blow-up count r must lie in [0, 8]");
}

bool DivisorClass::is_zero() const {
    if (a != 0) return false;
    return std::all_of(b.begin(), b.end(), [](long long v) { return v == 0; });
}

long long DivisorClass::norm1() const {
    long long n = std::llabs(a);
    for (long long v : b) n += std::llabs(v);
    return n;
}

static void check_same_lattice(const DivisorClass& c1, const DivisorClass& c2) {
    if (c1.r() != c2.r())
        throw DimensionMismatch("divisor classes live on blow-ups of different ranks");
}

DivisorClass DivisorClass::operator+(const DivisorClass& o) const {
    check_same_lattice(*this, o);
    DivisorClass s(a + o.a, b);
    for (int j = 0; j < r(); ++j) s.b[j] += o.b[j];
    return s;
}

DivisorClass DivisorClass::operator-(const DivisorClass& o) const {
    check_same_lattice(*this, o);
    DivisorClass s(a - o.a, b);
    for (int j = 0; j < r(); ++j) s.b[j] -= o.b[j];
    return s;
}

DivisorClass DivisorClass::operator-() const {
    DivisorClass s(-a, b);
    for (auto& v : s.b) v = -v;
    return s;
}

DivisorClass DivisorClass::operator*(long long k) const {
    DivisorClass s(a * k, b);
    for (auto& v : s.b) v *= k;
    return s;
}

bool DivisorClass::operator<(const DivisorClass& o) const {
    if (r() != o.r()) return r() < o.r();
    if (a != o.a) return a < o.a;
    return b < o.b;
}

DivisorClass line_class(int r) {
    return DivisorClass(1, std::vector<long long>(static_cast<size_t>(r), 0));
}

DivisorClass exceptional_class(int r, int j) {
    if (j < 1 || j > r) throw InputError("exceptional index out of range");
    DivisorClass c(0, std::vector<long long>(static_cast<size_t>(r), 0));
    c.b[static_cast<size_t>(j - 1)] = -1;
    return c;
}

DivisorClass div_class(long long a, std::vector<long long> b) {
    return DivisorClass(a, std::move(b));
}

std::string to_string(const DivisorClass& c) {
    std::string out;
    auto term = [&out](long long coeff, const std::string& sym) {
        if (coeff == 0) return;
        if (out.empty()) {
            if (coeff == -1)
                out += "-";
            else if (coeff != 1)
                out += std::to_string(coeff);
        } else {
            out += coeff > 0 ? " + " : " - ";
            if (std::llabs(coeff) != 1) out += std::to_string(std::llabs(coeff));
        }
        out += sym;
    };
    term(c.a, "L");
    for (int j = 0; j < c.r(); ++j) term(-c.b[static_cast<size_t>(j)], "E" + std::to_string(j + 1));
    return out.empty() ? "0" : out;
}

long long intersect(const DivisorClass& c1, const DivisorClass& c2) {
    check_same_lattice(c1, c2);
    long long v = c1.a * c2.a;
    for (int j = 0; j < c1.r(); ++j) v -= c1.b[static_cast<size_t>(j)] * c2.b[static_cast<size_t>(j)];
    return v;
}

DivisorClass canonical_class(const SurfaceLattice& lat) {
    return DivisorClass(-3, std::vector<long long>(static_cast<size_t>(lat.r), -1));
}

EffectivityResult is_effective(const DivisorClass& c,
                               const std::vector<DivisorClass>& irreducible_negatives) {
    const int r = c.r();
    const SurfaceLattice lat(r);
    const DivisorClass k = canonical_class(lat);

    std::vector<DivisorClass> negatives = irreducible_negatives;
    for (int j = 1; j <= r; ++j) negatives.push_back(exceptional_class(r, j));
    std::sort(negatives.begin(), negatives.end());
    negatives.erase(std::unique(negatives.begin(), negatives.end()), negatives.end());

    bool nonexceptional_degree0_negative = false;
    for (const auto& n : negatives) {
        if (n.r() != r)
            throw DimensionMismatch("negative class on a different lattice");
        if (intersect(n, n) >= 0)
            throw InputError("listed class has nonnegative self-intersection: " + to_string(n));
        if (n.a == 0 && intersect(n, n) != -1) nonexceptional_degree0_negative = true;
    }

    EffectivityResult res;
    DivisorClass cur = c;
    const long long max_steps = c.norm1();
    long long steps = 0;
    for (;;) {
        // every peel stage is effective iff the input is, so a stage of
        // negative degree already decides the question
        if (cur.a < 0) {
            res.status = Effectivity::No;
            res.decomposition.clear();
            return res;
        }
        const DivisorClass* peel = nullptr;
        for (const auto& n : negatives) {
            if (intersect(cur, n) < 0) {
                peel = &n;
                break;
            }
        }
        if (peel == nullptr) break;
        if (++steps > max_steps) {
            res.status = Effectivity::Undecided;
            return res;
        }
        res.decomposition.push_back(*peel);
        cur = cur - *peel;
    }

    if (cur.is_zero()) {
        res.status = Effectivity::Yes;
        return res;
    }
    if (cur.a == 0) {
        // All b_j >= 0 here (a negative one would still peel an E_j), so a
        // nonzero residual cannot be a nonnegative sum of exceptional curves.
        res.status = nonexceptional_degree0_negative ? Effectivity::Undecided : Effectivity::No;
        res.decomposition.clear();
        return res;
    }

    const long long twice_chi_minus_one = intersect(cur, cur - k); // 2(chi - 1)
    if (twice_chi_minus_one % 2 != 0)
        throw InternalError("c.(c-K) has odd parity");
    const long long chi = 1 + twice_chi_minus_one / 2;
    if (chi >= 1) {
        res.status = Effectivity::Yes;
        res.decomposition.push_back(cur);
        return res;
    }
    res.status = Effectivity::Undecided;
    res.decomposition.clear();
    return res;
}

} // namespace burniat

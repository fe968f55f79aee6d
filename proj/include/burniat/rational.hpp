#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <string>

#include "burniat/errors.hpp"

namespace burniat {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

// cpp_rational's two-argument constructor wants a positive denominator
inline Rat make_rat(Int n, Int d) {
    if (d == 0) throw InputError("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    return Rat(n, d);
}

inline Rat rat_from_strings(const std::string& num, const std::string& den) {
    return make_rat(Int(num), Int(den));
}

// "3/4", "-7", "0" style, for CLI parsing
inline Rat parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return rat_from_strings(s, "1");
    return rat_from_strings(s.substr(0, slash), s.substr(slash + 1));
}

inline std::string rat_to_string(const Rat& q) {
    if (rat_den(q) == 1) return rat_num(q).str();
    return rat_num(q).str() + "/" + rat_den(q).str();
}

// Clears denominators, divides by the content and makes the first nonzero
// entry positive, so projectively equal triples get equal representatives.
inline std::array<Int, 3> canonical_triple(const std::array<Rat, 3>& v) {
    Int l = 1;
    for (const auto& q : v) l = boost::multiprecision::lcm(l, rat_den(q));
    std::array<Int, 3> w{};
    for (int k = 0; k < 3; ++k) w[k] = rat_num(v[k]) * (l / rat_den(v[k]));
    Int g = 0;
    for (const auto& e : w) g = boost::multiprecision::gcd(g, e);
    if (g != 0)
        for (auto& e : w) e /= g;
    for (const auto& e : w) {
        if (e > 0) break;
        if (e < 0) {
            for (auto& f : w) f = -f;
            break;
        }
    }
    return w;
}

} // namespace burniat

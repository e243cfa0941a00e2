#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace ncprob {

/// Exact rational scalar used by all combinatorial and series engines.
using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

/// Parses "p/q", "p", or a decimal string like "-3.25" into an exact rational.
inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("rational with zero denominator: " + s);
        return Rat(num, den);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        Int num(digits);
        Int den = 1;
        for (std::size_t i = dot + 1; i < s.size(); ++i) den *= 10;
        return Rat(num, den);
    }
    return Rat(Int(s));
}

inline std::string rat_to_string(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline double rat_to_double(const Rat& r) { return static_cast<double>(r); }

/// Exact conversion; every finite double is a dyadic rational.
inline Rat rat_from_double(double x) { return Rat(x); }

}  // namespace ncprob

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace wordsym {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return den(r) == 1; }

inline std::string to_string(const Rational& r) {
    if (is_integer(r)) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

inline long double to_long_double(const Rational& r) {
    return num(r).convert_to<long double>() / den(r).convert_to<long double>();
}

}  // namespace wordsym

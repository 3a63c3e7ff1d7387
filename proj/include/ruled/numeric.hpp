#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace ruled {

// Everything is exact: arbitrary-precision integers and rationals.
// No floating point enters any decision path.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OutOfRangeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

// "p/q", or just "p" when the denominator is 1.
inline std::string rat_str(const Rat& r) {
    if (rat_den(r) == 1) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

inline Int ceil_rat(const Rat& r) {
    Int n = rat_num(r), d = rat_den(r);
    Int q = n / d;
    if (n % d != 0 && n > 0) ++q;
    return q;
}

} // namespace ruled

#ifndef MUINV_INTEGER_HPP
#define MUINV_INTEGER_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace muinv {

// Exact integers everywhere; the library never touches floating point.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Precondition violations (bad indices, inhomogeneous input, ...).
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A declared support window turned out to be too small for the data.
struct WindowInconsistency : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Int factorial(int n)
{
    if (n < 0)
        throw ValidationError("factorial: negative argument");
    Int f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

// Generalized binomial coefficient: top may be any integer (negative allowed),
// computed as the falling factorial top(top-1)...(top-k+1)/k!.
inline Int binomial(const Int& top, int k)
{
    if (k < 0)
        return 0;
    Int num = 1;
    for (int i = 0; i < k; ++i)
        num *= top - i;
    return num / factorial(k);
}

inline std::string to_string(const Int& v) { return v.str(); }

inline Int parse_int(const std::string& s)
{
    if (s.empty())
        throw ValidationError("parse_int: empty string");
    return Int(s);
}

}  // namespace muinv

#endif

#ifndef CONWAY3_BIG_INT_HPP
#define CONWAY3_BIG_INT_HPP

#include <type_traits>

#include <boost/multiprecision/cpp_int.hpp>

namespace conway3 {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Converts an exact coefficient into ring R (BigInt or a floating type).
template <class R>
R coefficient_cast(const BigInt& c) {
  if constexpr (std::is_same_v<R, BigInt>)
    return c;
  else
    return R(c.convert_to<double>());
}

/// Binomial coefficient C(n, k) for integer n (possibly negative) and k >= 0.
BigInt binomial(long n, long k);

}  // namespace conway3

#endif  // CONWAY3_BIG_INT_HPP

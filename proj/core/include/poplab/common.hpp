#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace poplab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Malformed textual input (POP text, permutation text, stripped lines).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive request above the configured size ceiling.
class CeilingExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

BigInt factorial(int n);
BigInt binomial(long long n, long long k);

/// "1, 2, 6" style rendering used by reports and the CLI.
std::string join(const std::vector<BigInt>& values, const std::string& sep = ",");

}  // namespace poplab

#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace palin {

/// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
/// positive denominator) after every arithmetic operation.
using Coefficient = mpq_class;
using Integer = mpz_class;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical precondition failed (e.g. input not palindromic).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Parses "p" or "p/q" with an optional sign. Throws ParseError on
/// malformed text or a zero denominator.
Coefficient parse_coefficient(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Coefficient& c);

inline bool is_integer(const Coefficient& c) { return c.get_den() == 1; }

/// binom(n, k) with the convention binom(n, k) = 0 unless 0 <= k <= n.
Integer binomial(long n, long k);

}  // namespace palin

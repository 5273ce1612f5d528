#pragma once

#include "palin/polynomial.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace palin {

/// 1 + q + ... + q^n, the rank-generating function of a chain.
Polynomial chain_poly(std::size_t n);
/// (1 + q)^n, the rank-generating function of the Boolean algebra.
Polynomial boolean_poly(std::size_t n);

/// Gaussian coefficient binom(m+n, n)_q via the q-Pascal recurrence.
/// Palindromic of darga m*n.
Polynomial gaussian(std::size_t m, std::size_t n);

/// (1 + q)(1 + q^2)...(1 + q^n), darga n(n+1)/2.
Polynomial partition_poly(std::size_t n);

/// prod_{i=1..n} (1 - q^{ri}) / (1 - q^i), each factor expanded as the block
/// 1 + q^i + ... + q^{(r-1)i}. Darga (r-1) n (n+1) / 2. Requires r >= 1.
Polynomial almkvist(std::size_t n, std::size_t r);

/// Descent (equivalently excedance) polynomial of S_n, darga n-1. n >= 1.
Polynomial eulerian(std::size_t n);
/// sum_k (1/n) binom(n,k) binom(n,k-1) q^{k-1}, darga n-1. n >= 1.
Polynomial narayana(std::size_t n);
/// Excedance polynomial over derangements of [n]:
///   d_n(q) = sum_k (-1)^{n-k} binom(n,k) A_k(q),  A_0 = 1.
/// d_0 = 1, d_1 = 0; otherwise palindromic of darga n.
Polynomial derangement(std::size_t n);

enum class FamilyKind { chain, boolean, gaussian, partition, almkvist, eulerian, narayana, derangement };

struct FamilyId {
  FamilyKind kind = FamilyKind::chain;
  std::vector<std::size_t> params;

  /// Number of integer parameters the family takes (1 or 2).
  static std::size_t arity(FamilyKind kind);
  /// Throws DomainError on a bad parameter count or range.
  void validate() const;
  /// darga of the generated polynomial (of the zero polynomial for d_1: 1).
  std::size_t darga() const;
  std::string label() const;
};

std::string_view family_name(FamilyKind kind);
/// Throws DomainError for an unknown name.
FamilyKind parse_family_kind(std::string_view name);

Polynomial generate(const FamilyId& id);

}  // namespace palin

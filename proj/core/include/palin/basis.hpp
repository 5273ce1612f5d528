#pragma once

#include "palin/polynomial.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace palin {

/// The three basic palindromic sequences:
///   S_j = 1 + q^j,  A_j = 1 + q + ... + q^j,  B_j = (1 + q)^j,
/// each with f_0 = 1. The basis of P_n(q) induced by a sequence is
/// { q^j f_{n-2j} : 0 <= j <= n/2 }.
enum class Basis { S, A, B };

std::string_view basis_name(Basis b);
std::optional<Basis> parse_basis(std::string_view name);

/// f_j for the named sequence.
Polynomial basic_element(Basis b, std::size_t j);

/// Any sequence of palindromic f_j of darga j with nonzero constant term.
using BasicSequence = std::function<Polynomial(std::size_t)>;

/// floor(n/2) + 1, the dimension of P_n(q).
std::size_t space_dim(std::size_t n);

/// Coordinates of a member of P_n(q): entry j multiplies q^j f_{n-2j}.
struct CoordinateVector {
  std::size_t darga = 0;
  Basis basis = Basis::S;
  std::vector<Coefficient> entries;

  bool all_nonnegative() const;
  bool all_positive() const;
  friend bool operator==(const CoordinateVector&, const CoordinateVector&) = default;
};

/// Peel-off expansion: repeatedly subtract (lowest coefficient) q^r f_{n-2r}
/// until nothing is left. Throws DomainError when f is not in P_n(q).
std::vector<Coefficient> peel_off(const Polynomial& f, std::size_t n, const BasicSequence& sequence);

CoordinateVector coords(const Polynomial& f, std::size_t n, Basis basis);

/// sum_j v_j q^j f_{n-2j}. Throws DomainError if the length is not space_dim(n).
Polynomial expand(const CoordinateVector& v);

/// Lower-triangular change of basis on P_n(q) with the contract
///   coords(f, n, from) = M(from, to) * coords(f, n, to),
/// i.e. column j holds the from-coordinates of q^j g_{n-2j}.
class TransitionMatrix {
 public:
  TransitionMatrix(std::size_t darga, Basis from, Basis to);

  std::size_t darga() const { return darga_; }
  Basis from() const { return from_; }
  Basis to() const { return to_; }
  std::size_t dim() const { return dim_; }

  const Coefficient& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
  Coefficient& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }

  bool is_lower_triangular() const;
  bool is_identity() const;

  /// Maps to-coordinates to from-coordinates.
  CoordinateVector apply(const CoordinateVector& v) const;

  /// (A * B) requires A.to() == B.from(); yields M(A.from, B.to).
  friend TransitionMatrix operator*(const TransitionMatrix& lhs, const TransitionMatrix& rhs);
  friend bool operator==(const TransitionMatrix&, const TransitionMatrix&) = default;

 private:
  std::size_t darga_;
  Basis from_;
  Basis to_;
  std::size_t dim_;
  std::vector<Coefficient> entries_;
};

/// Closed forms:
///   M(S,A)_{ij} = 1,  M(S,B)_{ij} = binom(n-2j, i-j),
///   M(A,S) = bidiagonal (1 on the diagonal, -1 below),
///   M(A,B)_{ij} = binom(n-2j, i-j) - binom(n-2j, i-j-1),
///   M(B,S)_{ij} = C(n-2j, i-j),
/// for j <= i, and M(B,A) = M(B,S) M(S,A). from == to gives the identity.
TransitionMatrix transition_matrix(std::size_t n, Basis from, Basis to);

/// Builds M(from, to) directly from peel-off expansions of the to-sequence
/// in the from-sequence: entry (i,j) = t(n-2j, i-j). Independent of the
/// closed forms above.
TransitionMatrix transition_matrix_generic(std::size_t n, Basis from, Basis to);

/// Chebyshev inversion coefficient C(n,i) = (-1)^i n/(n-i) binom(n-i, i),
/// evaluated as (-1)^i [binom(n-i, i) + binom(n-i-1, i-1)] so that
/// C(0,0) = 1. Throws DomainError unless 0 <= i <= n/2.
Integer chebyshev_C(std::size_t n, std::size_t i);

}  // namespace palin

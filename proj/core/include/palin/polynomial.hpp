#pragma once

#include "palin/coefficient.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace palin {

/// Dense polynomial in q with exact rational coefficients.
///
/// Storage is `coeffs()[k]` = coefficient of q^(ord() + k). The representation
/// is canonical: a nonzero polynomial never has a zero first or last entry,
/// and the zero polynomial has no entries at all. Values are immutable once
/// built; all operations return new polynomials.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::size_t ord, std::vector<Coefficient> coeffs);
  /// Coefficients from q^0 upward.
  Polynomial(std::initializer_list<Coefficient> coeffs);

  static Polynomial constant(const Coefficient& c);
  static Polynomial monomial(const Coefficient& c, std::size_t power);
  /// Integer coefficients from q^ord upward.
  static Polynomial from_integers(std::size_t ord, std::vector<Integer> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  /// Lowest power with nonzero coefficient (0 for the zero polynomial).
  std::size_t ord() const { return ord_; }
  /// Highest power with nonzero coefficient (0 for the zero polynomial).
  std::size_t degree() const { return is_zero() ? 0 : ord_ + coeffs_.size() - 1; }
  std::span<const Coefficient> coeffs() const { return coeffs_; }
  /// Coefficient of q^power; zero outside the support.
  Coefficient operator[](std::size_t power) const;
  const Coefficient& lowest() const { return coeffs_.front(); }
  const Coefficient& leading() const { return coeffs_.back(); }

  /// Dense coefficients from q^0 through q^degree().
  std::vector<Coefficient> dense() const;

  Polynomial shifted(std::size_t k) const;  // q^k * f
  Polynomial derivative() const;
  bool all_nonnegative() const;
  bool all_integer() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  friend Polynomial operator+(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator-(const Polynomial& f);
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(const Coefficient& a, const Polynomial& f);

 private:
  void trim();

  std::size_t ord_ = 0;
  std::vector<Coefficient> coeffs_;
};

/// Thrown by divide_exact when the divisor leaves a remainder.
class InexactDivision : public DomainError {
 public:
  explicit InexactDivision(Polynomial remainder);
  const Polynomial& remainder() const { return remainder_; }

 private:
  Polynomial remainder_;
};

/// Sum of the lowest and highest powers. Throws DomainError for 0.
std::size_t darga(const Polynomial& f);

/// q^n f(1/q) with n = darga(f): the coefficient sequence reversed over the
/// same support. The zero polynomial maps to itself.
Polynomial reciprocal(const Polynomial& f);

/// Without n: f equals its reciprocal. With n: f is 0 or palindromic of
/// darga n, i.e. f is a member of P_n(q).
bool is_palindromic(const Polynomial& f, std::optional<std::size_t> n = std::nullopt);

Polynomial multiply(const Polynomial& f, const Polynomial& g);
Polynomial power(const Polynomial& f, std::size_t e);

/// h with f = g*h, by ascending-power long division. Throws InexactDivision
/// carrying f - g*h when g does not divide f, DomainError when g is 0.
Polynomial divide_exact(const Polynomial& f, const Polynomial& g);

Coefficient evaluate(const Polynomial& f, const Coefficient& x);

/// Sign of the leading coefficient, i.e. of f(x) as x -> +inf (0 for f = 0).
int sign_at_pos_infinity(const Polynomial& f);
int sign_at_neg_infinity(const Polynomial& f);

}  // namespace palin

#include "palin/basis.hpp"

#include <algorithm>

namespace palin {

std::string_view basis_name(Basis b) {
  switch (b) {
    case Basis::S: return "S";
    case Basis::A: return "A";
    case Basis::B: return "B";
  }
  return "?";
}

std::optional<Basis> parse_basis(std::string_view name) {
  if (name == "S") return Basis::S;
  if (name == "A") return Basis::A;
  if (name == "B") return Basis::B;
  return std::nullopt;
}

Polynomial basic_element(Basis b, std::size_t j) {
  switch (b) {
    case Basis::S: {
      if (j == 0) return Polynomial::constant(1);
      std::vector<Coefficient> c(j + 1);
      c.front() = 1;
      c.back() = 1;
      return Polynomial(0, std::move(c));
    }
    case Basis::A:
      return Polynomial(0, std::vector<Coefficient>(j + 1, Coefficient(1)));
    case Basis::B: {
      std::vector<Integer> c(j + 1);
      for (std::size_t k = 0; k <= j; ++k) c[k] = binomial(static_cast<long>(j), static_cast<long>(k));
      return Polynomial::from_integers(0, std::move(c));
    }
  }
  return {};
}

std::size_t space_dim(std::size_t n) { return n / 2 + 1; }

bool CoordinateVector::all_nonnegative() const {
  return std::all_of(entries.begin(), entries.end(), [](const Coefficient& c) { return c >= 0; });
}

bool CoordinateVector::all_positive() const {
  return std::all_of(entries.begin(), entries.end(), [](const Coefficient& c) { return c > 0; });
}

std::vector<Coefficient> peel_off(const Polynomial& f, std::size_t n, const BasicSequence& sequence) {
  if (!is_palindromic(f, n)) throw DomainError("polynomial is not a palindromic polynomial of darga " + std::to_string(n));
  const std::size_t half = n / 2;
  std::vector<Coefficient> out(half + 1);
  if (f.is_zero()) return out;

  std::vector<Coefficient> work = f.dense();
  work.resize(n + 1);
  Coefficient c;
  for (std::size_t r = 0; r <= half; ++r) {
    if (work[r] == 0) continue;
    const Polynomial basic = sequence(n - 2 * r);
    if (basic.is_zero() || basic.ord() != 0 || !is_palindromic(basic, n - 2 * r))
      throw DomainError("basic sequence element of darga " + std::to_string(n - 2 * r) + " is not basic palindromic");
    const auto bc = basic.coeffs();
    c = work[r] / bc[0];
    for (std::size_t k = 0; k < bc.size(); ++k) {
      if (bc[k] == 0) continue;
      work[r + k] -= c * bc[k];
    }
    out[r] = std::move(c);
  }
  // Palindromic input leaves nothing behind; anything left is a logic error.
  if (std::any_of(work.begin(), work.end(), [](const Coefficient& x) { return x != 0; }))
    throw std::logic_error("peel-off left a nonzero residue");
  return out;
}

CoordinateVector coords(const Polynomial& f, std::size_t n, Basis basis) {
  return {n, basis, peel_off(f, n, [basis](std::size_t j) { return basic_element(basis, j); })};
}

Polynomial expand(const CoordinateVector& v) {
  if (v.entries.size() != space_dim(v.darga))
    throw DomainError("coordinate vector of darga " + std::to_string(v.darga) + " needs " +
                      std::to_string(space_dim(v.darga)) + " entries");
  std::vector<Coefficient> out(v.darga + 1);
  for (std::size_t j = 0; j < v.entries.size(); ++j) {
    if (v.entries[j] == 0) continue;
    const Polynomial basic = basic_element(v.basis, v.darga - 2 * j);
    for (std::size_t k = 0; k < basic.coeffs().size(); ++k) out[j + k] += v.entries[j] * basic.coeffs()[k];
  }
  return Polynomial(0, std::move(out));
}

TransitionMatrix::TransitionMatrix(std::size_t darga, Basis from, Basis to)
    : darga_(darga), from_(from), to_(to), dim_(space_dim(darga)), entries_(dim_ * dim_) {}

bool TransitionMatrix::is_lower_triangular() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      if ((*this)(i, j) != 0) return false;
  return true;
}

bool TransitionMatrix::is_identity() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

CoordinateVector TransitionMatrix::apply(const CoordinateVector& v) const {
  if (v.darga != darga_ || v.basis != to_ || v.entries.size() != dim_)
    throw DomainError("coordinate vector does not match the matrix's target basis");
  CoordinateVector out{darga_, from_, std::vector<Coefficient>(dim_)};
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j <= i; ++j) out.entries[i] += (*this)(i, j) * v.entries[j];
  return out;
}

TransitionMatrix operator*(const TransitionMatrix& lhs, const TransitionMatrix& rhs) {
  if (lhs.darga_ != rhs.darga_ || lhs.to_ != rhs.from_)
    throw DomainError("transition matrices do not compose");
  TransitionMatrix out(lhs.darga_, lhs.from_, rhs.to_);
  const std::size_t d = lhs.dim_;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      if (lhs(i, k) == 0) continue;
      for (std::size_t j = 0; j < d; ++j) out(i, j) += lhs(i, k) * rhs(k, j);
    }
  return out;
}

Integer chebyshev_C(std::size_t n, std::size_t i) {
  if (i > n / 2) throw DomainError("chebyshev_C: index " + std::to_string(i) + " out of range for n = " + std::to_string(n));
  const long nn = static_cast<long>(n);
  const long ii = static_cast<long>(i);
  Integer value = binomial(nn - ii, ii) + binomial(nn - ii - 1, ii - 1);
  return i % 2 == 0 ? value : Integer(-value);
}

TransitionMatrix transition_matrix(std::size_t n, Basis from, Basis to) {
  TransitionMatrix m(n, from, to);
  const std::size_t d = m.dim();
  if (from == to) {
    for (std::size_t i = 0; i < d; ++i) m(i, i) = 1;
    return m;
  }
  if (from == Basis::B && to == Basis::A) return transition_matrix(n, Basis::B, Basis::S) * transition_matrix(n, Basis::S, Basis::A);

  for (std::size_t j = 0; j < d; ++j) {
    const long col = static_cast<long>(n - 2 * j);
    for (std::size_t i = j; i < d; ++i) {
      const long k = static_cast<long>(i - j);
      Coefficient& e = m(i, j);
      if (from == Basis::S && to == Basis::A) {
        e = 1;
      } else if (from == Basis::S && to == Basis::B) {
        e = binomial(col, k);
      } else if (from == Basis::A && to == Basis::S) {
        e = k == 0 ? 1 : k == 1 ? -1 : 0;
      } else if (from == Basis::A && to == Basis::B) {
        e = binomial(col, k) - binomial(col, k - 1);
      } else {  // B -> S
        e = chebyshev_C(n - 2 * j, i - j);
      }
    }
  }
  return m;
}

TransitionMatrix transition_matrix_generic(std::size_t n, Basis from, Basis to) {
  TransitionMatrix m(n, from, to);
  for (std::size_t j = 0; j < m.dim(); ++j) {
    const std::size_t sub = n - 2 * j;
    const auto t = coords(basic_element(to, sub), sub, from).entries;
    for (std::size_t k = 0; k < t.size(); ++k) m(j + k, j) = t[k];
  }
  return m;
}

}  // namespace palin

#include "palin/positivity.hpp"

#include <algorithm>
#include <stdexcept>

namespace palin {

std::optional<std::size_t> first_unimodality_violation(const Polynomial& f) {
  const auto c = f.coeffs();
  if (c.size() < 3) return std::nullopt;
  // suffix_max[k] = max of c[k..]
  std::vector<Coefficient> suffix_max(c.begin(), c.end());
  for (std::size_t k = c.size() - 1; k-- > 0;)
    if (suffix_max[k + 1] > suffix_max[k]) suffix_max[k] = suffix_max[k + 1];
  Coefficient prefix_max = c[0];
  for (std::size_t k = 1; k + 1 < c.size(); ++k) {
    if (c[k] < prefix_max && c[k] < suffix_max[k + 1]) return f.ord() + k;
    if (c[k] > prefix_max) prefix_max = c[k];
  }
  return std::nullopt;
}

bool is_unimodal(const Polynomial& f) { return !first_unimodality_violation(f).has_value(); }

bool is_log_concave(const Polynomial& f) {
  if (!f.all_nonnegative()) throw DomainError("log-concavity needs nonnegative coefficients");
  const auto c = f.coeffs();
  // Trimmed support: any interior zero is an internal zero.
  if (std::any_of(c.begin(), c.end(), [](const Coefficient& x) { return x == 0; })) return false;
  for (std::size_t i = 1; i + 1 < c.size(); ++i)
    if (c[i - 1] * c[i + 1] > c[i] * c[i]) return false;
  return true;
}

LambdaResult lambda_test(const Polynomial& f, std::size_t n) {
  if (!f.all_nonnegative()) throw DomainError("lambda test needs nonnegative coefficients");
  LambdaResult result{false, coords(f, n, Basis::A)};
  result.lambda = result.a_coords.all_nonnegative();
  if (result.lambda != is_unimodal(f)) throw std::logic_error("A-positivity disagrees with unimodality");
  return result;
}

CoordinateVector gamma_closed_form(const Polynomial& f, std::size_t n) {
  if (!is_palindromic(f, n)) throw DomainError("gamma vector needs a palindromic polynomial of darga " + std::to_string(n));
  const std::size_t half = n / 2;
  CoordinateVector out{n, Basis::B, std::vector<Coefficient>(half + 1)};
  for (std::size_t i = 0; i <= half; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      const Coefficient a = f[j];
      if (a == 0) continue;
      out.entries[i] += Coefficient(chebyshev_C(n - 2 * j, i - j)) * a;
    }
  return out;
}

CoordinateVector gamma_vector(const Polynomial& f, std::size_t n) {
  CoordinateVector closed = gamma_closed_form(f, n);
  if (closed != coords(f, n, Basis::B)) throw std::logic_error("closed-form gamma vector disagrees with peel-off");
  return closed;
}

Polynomial gamma_polynomial(const CoordinateVector& gamma) { return Polynomial(0, gamma.entries); }

std::vector<std::size_t> newton_violations(const Polynomial& f) {
  std::vector<std::size_t> out;
  const auto c = f.coeffs();
  if (c.size() < 3) return out;
  const std::size_t m = c.size() - 1;
  for (std::size_t i = 1; i < m; ++i) {
    const Coefficient bound = c[i - 1] * c[i + 1] * Coefficient(i + 1, i) * Coefficient(m - i + 1, m - i);
    if (c[i] * c[i] < bound) out.push_back(i);
  }
  return out;
}

bool verify_gamma_real_rooted(const Polynomial& f, std::size_t n) {
  if (f.is_zero() || !is_palindromic(f, n)) throw DomainError("need a nonzero palindromic polynomial of darga " + std::to_string(n));
  if (!f.all_nonnegative()) throw DomainError("need nonnegative coefficients");
  if (!real_root_count(f).real_rooted) throw DomainError("need a real-rooted polynomial");
  const CoordinateVector gamma = gamma_vector(f, n);
  return gamma.all_nonnegative() && real_root_count(gamma_polynomial(gamma)).real_rooted;
}

Polynomial gamma_from_real_factorization(const FactorSpec& spec) {
  spec.validate();
  if (!spec.quadratic_pairs.empty()) throw DomainError("gamma from factorization needs a spec without quadratic pairs");
  // (1 + r q)(r + q) = r [(1 + q)^2 + s q] with s = r + 1/r - 2.
  Polynomial g = Polynomial::constant(spec.scale);
  for (const auto& p : spec.linear_pairs) {
    const Coefficient s = p.root + 1 / p.root - 2;
    g = g * power(p.root * Polynomial{1, s}, p.multiplicity);
  }
  return g.shifted(spec.q_power);
}

CoordinateVector b_product_convolution(const CoordinateVector& u, const CoordinateVector& v) {
  if (u.basis != Basis::B || v.basis != Basis::B) throw DomainError("convolution applies to B-coordinates");
  const std::size_t n = u.darga + v.darga;
  CoordinateVector out{n, Basis::B, std::vector<Coefficient>(space_dim(n))};
  for (std::size_t i = 0; i < u.entries.size(); ++i)
    for (std::size_t j = 0; j < v.entries.size(); ++j) out.entries[i + j] += u.entries[i] * v.entries[j];
  return out;
}

}  // namespace palin

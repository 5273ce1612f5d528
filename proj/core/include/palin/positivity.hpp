#pragma once

#include "palin/basis.hpp"
#include "palin/factor_spec.hpp"
#include "palin/polynomial.hpp"
#include "palin/sturm.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace palin {

/// Lowest power i whose coefficient is strictly below some coefficient at a
/// lower power and some coefficient at a higher power (a valley), scanning
/// the support [ord, degree]. A sequence is unimodal iff there is none.
std::optional<std::size_t> first_unimodality_violation(const Polynomial& f);

/// Coefficients over the support rise weakly then fall weakly. True for 0.
bool is_unimodal(const Polynomial& f);

/// No internal zeros and a_{i-1} a_{i+1} <= a_i^2 over the support.
/// Throws DomainError if a coefficient is negative.
bool is_log_concave(const Polynomial& f);

struct LambdaResult {
  bool lambda = false;
  CoordinateVector a_coords;
};

/// A-coordinates of f in P_n(q) and the verdict "all A-coordinates >= 0".
/// The verdict is checked against is_unimodal on every call; a mismatch
/// throws std::logic_error. Throws DomainError if f is not in P_n(q) or has
/// a negative coefficient.
LambdaResult lambda_test(const Polynomial& f, std::size_t n);

/// gamma_i = sum_{j<=i} C(n-2j, i-j) a_j, with a_j the coefficient of q^j.
/// No cross-check; see gamma_vector.
CoordinateVector gamma_closed_form(const Polynomial& f, std::size_t n);

/// B-coordinates of f in P_n(q) from the closed form, verified against the
/// peel-off expansion (std::logic_error on disagreement).
CoordinateVector gamma_vector(const Polynomial& f, std::size_t n);

/// sum_i gamma_i q^i.
Polynomial gamma_polynomial(const CoordinateVector& gamma);

/// Interior indices i (relative to the lowest power) where
///   a_i^2 >= a_{i-1} a_{i+1} (1 + 1/i)(1 + 1/(m-i))
/// fails, m being the span degree - ord.
std::vector<std::size_t> newton_violations(const Polynomial& f);

/// Checks that the gamma polynomial of a real-rooted, nonnegative f in
/// P_n(q) is itself nonnegative and real-rooted. Throws DomainError when the
/// preconditions do not hold.
bool verify_gamma_real_rooted(const Polynomial& f, std::size_t n);

/// a q^r prod (r_k (1 + s_k q))^{e_k} with s_k = r_k + 1/r_k - 2: the gamma
/// polynomial of construct_from_factors(spec), derived from the roots.
/// Requires spec without quadratic pairs.
Polynomial gamma_from_real_factorization(const FactorSpec& spec);

/// Convolution of two B-coordinate vectors: coordinates of the product of
/// their expansions in P_{n+m}(q).
CoordinateVector b_product_convolution(const CoordinateVector& u, const CoordinateVector& v);

}  // namespace palin

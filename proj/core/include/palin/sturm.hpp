#pragma once

#include "palin/polynomial.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace palin {

/// Positive rational multiple of p with coprime integer coefficients. Keeps
/// the sign of every coefficient.
Polynomial remove_content(const Polynomial& p);

/// remove_content(p) with the leading coefficient made positive.
Polynomial primitive_part(const Polynomial& p);

/// Monic-free gcd over Q, returned as a primitive polynomial with positive
/// leading coefficient. gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& f, const Polynomial& g);

/// Yun's square-free decomposition: p = c * prod_k factors[k]^(k+1), with
/// every factor square-free and pairwise coprime (unit factors are kept as 1).
std::vector<Polynomial> square_free_decomposition(const Polynomial& p);

/// Sturm chain p0 = p, p1 = p', p_{k+1} = -(positive multiple of p_{k-1} mod p_k)
/// with content removed at every step.
class SturmChain {
 public:
  explicit SturmChain(const Polynomial& p);

  const std::vector<Polynomial>& polynomials() const { return chain_; }

  std::size_t variations_at(const Coefficient& x) const;
  std::size_t variations_at_pos_infinity() const;
  std::size_t variations_at_neg_infinity() const;

  /// Distinct real roots over the whole line.
  std::size_t distinct_real_roots() const;
  /// Distinct real roots in (a, b]; a and b must not be roots of p.
  std::size_t distinct_real_roots(const Coefficient& a, const Coefficient& b) const;

 private:
  std::vector<Polynomial> chain_;
};

struct RootCount {
  std::size_t count = 0;  // real roots with multiplicity, including q = 0
  bool real_rooted = false;
};

/// Exact count of real roots. Roots at 0 (the q^ord factor) are counted with
/// multiplicity ord; real_rooted holds iff count equals the degree. Throws
/// DomainError for the zero polynomial.
RootCount real_root_count(const Polynomial& f);

}  // namespace palin

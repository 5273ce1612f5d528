#include "palin/sturm.hpp"

#include <algorithm>

namespace palin {

namespace {

std::size_t count_variations(const std::vector<int>& signs) {
  std::size_t v = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

// Positive multiple of (a mod b): leading terms are cancelled by scaling with
// |lc(b)| so signs along the chain stay meaningful.
Polynomial positive_pseudo_remainder(Polynomial a, const Polynomial& b) {
  const Coefficient lead = b.leading();
  const Coefficient scale = abs(lead);
  const int lead_sign = sgn(lead);
  while (!a.is_zero() && a.degree() >= b.degree()) {
    const Coefficient factor = lead_sign > 0 ? a.leading() : Coefficient(-a.leading());
    a = scale * a - (factor * b).shifted(a.degree() - b.degree());
  }
  return a;
}

}  // namespace

Polynomial remove_content(const Polynomial& p) {
  if (p.is_zero()) return {};
  Integer den_lcm = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> ints;
  ints.reserve(p.coeffs().size());
  Integer content = 0;
  for (const auto& c : p.coeffs()) {
    Integer v = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    ints.push_back(std::move(v));
  }
  for (auto& v : ints) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
  return Polynomial::from_integers(p.ord(), std::move(ints));
}

Polynomial primitive_part(const Polynomial& p) {
  Polynomial out = remove_content(p);
  return !out.is_zero() && out.leading() < 0 ? -out : out;
}

Polynomial gcd(const Polynomial& f, const Polynomial& g) {
  Polynomial a = primitive_part(f);
  Polynomial b = primitive_part(g);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    Polynomial r = primitive_part(positive_pseudo_remainder(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<Polynomial> square_free_decomposition(const Polynomial& p) {
  if (p.is_zero()) throw DomainError("square-free decomposition of 0");
  std::vector<Polynomial> factors;
  const Polynomial dp = p.derivative();
  if (dp.is_zero()) return factors;  // constant

  const Polynomial g = gcd(p, dp);
  Polynomial b = divide_exact(p, g);
  Polynomial c = divide_exact(dp, g);
  Polynomial d = c - b.derivative();
  while (b.degree() > 0) {
    const Polynomial a = gcd(b, d);
    factors.push_back(a);
    b = divide_exact(b, a);
    c = divide_exact(d, a);
    d = c - b.derivative();
  }
  while (!factors.empty() && factors.back().degree() == 0) factors.pop_back();
  return factors;
}

SturmChain::SturmChain(const Polynomial& p) {
  if (p.is_zero()) return;
  chain_.push_back(remove_content(p));
  Polynomial next = remove_content(p.derivative());
  while (!next.is_zero()) {
    chain_.push_back(next);
    const auto& prev = chain_[chain_.size() - 2];
    next = -remove_content(positive_pseudo_remainder(prev, chain_.back()));
  }
}

std::size_t SturmChain::variations_at(const Coefficient& x) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& p : chain_) signs.push_back(sgn(evaluate(p, x)));
  return count_variations(signs);
}

std::size_t SturmChain::variations_at_pos_infinity() const {
  std::vector<int> signs;
  for (const auto& p : chain_) signs.push_back(sign_at_pos_infinity(p));
  return count_variations(signs);
}

std::size_t SturmChain::variations_at_neg_infinity() const {
  std::vector<int> signs;
  for (const auto& p : chain_) signs.push_back(sign_at_neg_infinity(p));
  return count_variations(signs);
}

std::size_t SturmChain::distinct_real_roots() const {
  return variations_at_neg_infinity() - variations_at_pos_infinity();
}

std::size_t SturmChain::distinct_real_roots(const Coefficient& a, const Coefficient& b) const {
  return variations_at(a) - variations_at(b);
}

RootCount real_root_count(const Polynomial& f) {
  if (f.is_zero()) throw DomainError("real_root_count of 0");
  const Polynomial core(0, std::vector<Coefficient>(f.coeffs().begin(), f.coeffs().end()));
  std::size_t count = f.ord();
  const auto factors = square_free_decomposition(core);
  for (std::size_t k = 0; k < factors.size(); ++k)
    count += (k + 1) * SturmChain(factors[k]).distinct_real_roots();
  return {count, count == f.degree()};
}

}  // namespace palin

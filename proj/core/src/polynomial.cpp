#include "palin/polynomial.hpp"

#include "palin/text.hpp"

#include <algorithm>
#include <utility>

namespace palin {

Polynomial::Polynomial(std::size_t ord, std::vector<Coefficient> coeffs)
    : ord_(ord), coeffs_(std::move(coeffs)) {
  trim();
}

Polynomial::Polynomial(std::initializer_list<Coefficient> coeffs) : ord_(0), coeffs_(coeffs) {
  trim();
}

Polynomial Polynomial::constant(const Coefficient& c) { return Polynomial(0, {c}); }

Polynomial Polynomial::monomial(const Coefficient& c, std::size_t power) {
  return Polynomial(power, {c});
}

Polynomial Polynomial::from_integers(std::size_t ord, std::vector<Integer> coeffs) {
  std::vector<Coefficient> out;
  out.reserve(coeffs.size());
  for (auto& c : coeffs) out.emplace_back(std::move(c));
  return Polynomial(ord, std::move(out));
}

void Polynomial::trim() {
  const auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Coefficient& c) { return c != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    ord_ = 0;
    return;
  }
  const auto lead = std::find_if(coeffs_.rbegin(), coeffs_.rend(), [](const Coefficient& c) { return c != 0; });
  coeffs_.erase(lead.base(), coeffs_.end());
  const auto skip = static_cast<std::size_t>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
  ord_ += skip;
}

Coefficient Polynomial::operator[](std::size_t power) const {
  if (is_zero() || power < ord_ || power > degree()) return 0;
  return coeffs_[power - ord_];
}

std::vector<Coefficient> Polynomial::dense() const {
  if (is_zero()) return {};
  std::vector<Coefficient> out(degree() + 1);
  std::copy(coeffs_.begin(), coeffs_.end(), out.begin() + static_cast<std::ptrdiff_t>(ord_));
  return out;
}

Polynomial Polynomial::shifted(std::size_t k) const {
  if (is_zero()) return {};
  Polynomial out = *this;
  out.ord_ += k;
  return out;
}

Polynomial Polynomial::derivative() const {
  if (is_zero() || degree() == 0) return {};
  // d/dq of c q^p is p c q^(p-1); the constant term (p = 0) drops out.
  const std::size_t first = ord_ == 0 ? 1 : 0;
  std::vector<Coefficient> out;
  out.reserve(coeffs_.size() - first);
  for (std::size_t k = first; k < coeffs_.size(); ++k)
    out.emplace_back(coeffs_[k] * static_cast<unsigned long>(ord_ + k));
  return Polynomial(ord_ + first - 1, std::move(out));
}

bool Polynomial::all_nonnegative() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Coefficient& c) { return c >= 0; });
}

bool Polynomial::all_integer() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Coefficient& c) { return is_integer(c); });
}

namespace {

Polynomial combine(const Polynomial& f, const Polynomial& g, bool subtract) {
  if (f.is_zero()) return subtract ? -g : g;
  if (g.is_zero()) return f;
  const std::size_t lo = std::min(f.ord(), g.ord());
  const std::size_t hi = std::max(f.degree(), g.degree());
  std::vector<Coefficient> out(hi - lo + 1);
  for (std::size_t k = 0; k < f.coeffs().size(); ++k) out[f.ord() - lo + k] = f.coeffs()[k];
  for (std::size_t k = 0; k < g.coeffs().size(); ++k) {
    if (subtract)
      out[g.ord() - lo + k] -= g.coeffs()[k];
    else
      out[g.ord() - lo + k] += g.coeffs()[k];
  }
  return Polynomial(lo, std::move(out));
}

}  // namespace

Polynomial operator+(const Polynomial& f, const Polynomial& g) { return combine(f, g, false); }
Polynomial operator-(const Polynomial& f, const Polynomial& g) { return combine(f, g, true); }

Polynomial operator-(const Polynomial& f) {
  std::vector<Coefficient> out(f.coeffs().begin(), f.coeffs().end());
  for (auto& c : out) c = -c;
  return Polynomial(f.ord(), std::move(out));
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) return {};
  const auto fc = f.coeffs();
  const auto gc = g.coeffs();
  std::vector<Coefficient> out(fc.size() + gc.size() - 1);
  Coefficient term;
  for (std::size_t i = 0; i < fc.size(); ++i) {
    if (fc[i] == 0) continue;
    for (std::size_t j = 0; j < gc.size(); ++j) {
      if (gc[j] == 0) continue;
      term = fc[i] * gc[j];
      out[i + j] += term;
    }
  }
  return Polynomial(f.ord() + g.ord(), std::move(out));
}

Polynomial operator*(const Coefficient& a, const Polynomial& f) {
  if (a == 0) return {};
  std::vector<Coefficient> out(f.coeffs().begin(), f.coeffs().end());
  for (auto& c : out) c *= a;
  return Polynomial(f.ord(), std::move(out));
}

InexactDivision::InexactDivision(Polynomial remainder)
    : DomainError("division is not exact; remainder " + to_string(remainder)),
      remainder_(std::move(remainder)) {}

std::size_t darga(const Polynomial& f) {
  if (f.is_zero()) throw DomainError("darga undefined for 0");
  return f.ord() + f.degree();
}

Polynomial reciprocal(const Polynomial& f) {
  std::vector<Coefficient> out(f.coeffs().rbegin(), f.coeffs().rend());
  return Polynomial(f.ord(), std::move(out));
}

bool is_palindromic(const Polynomial& f, std::optional<std::size_t> n) {
  if (f.is_zero()) return true;
  if (n && darga(f) != *n) return false;
  const auto c = f.coeffs();
  return std::equal(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(c.size() / 2), c.rbegin());
}

Polynomial multiply(const Polynomial& f, const Polynomial& g) { return f * g; }

Polynomial power(const Polynomial& f, std::size_t e) {
  Polynomial result = Polynomial::constant(1);
  Polynomial base = f;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw DomainError("division by the zero polynomial");
  if (f.is_zero()) return {};
  if (f.ord() < g.ord() || f.degree() - f.ord() < g.degree() - g.ord()) throw InexactDivision(f);

  // Work on f / q^ord(g); quotient terms are fixed from the lowest power up.
  const auto gc = g.coeffs();
  const std::size_t shift = f.ord() - g.ord();
  const std::size_t qlen = (f.degree() - g.ord()) - (g.degree() - g.ord()) - shift + 1;
  std::vector<Coefficient> work = f.dense();
  work.erase(work.begin(), work.begin() + static_cast<std::ptrdiff_t>(g.ord()));
  std::vector<Coefficient> quotient(qlen);
  for (std::size_t k = 0; k < qlen; ++k) {
    const Coefficient& lead = work[shift + k];
    if (lead == 0) continue;
    quotient[k] = lead / gc[0];
    for (std::size_t j = 0; j < gc.size(); ++j) work[shift + k + j] -= quotient[k] * gc[j];
  }
  Polynomial remainder(g.ord(), std::move(work));
  if (!remainder.is_zero()) throw InexactDivision(std::move(remainder));
  return Polynomial(shift, std::move(quotient));
}

Coefficient evaluate(const Polynomial& f, const Coefficient& x) {
  Coefficient acc = 0;
  const auto c = f.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  if (f.ord() > 0 && acc != 0) {
    Coefficient xp;
    mpz_pow_ui(xp.get_num_mpz_t(), x.get_num_mpz_t(), f.ord());
    mpz_pow_ui(xp.get_den_mpz_t(), x.get_den_mpz_t(), f.ord());
    acc *= xp;
  }
  return acc;
}

int sign_at_pos_infinity(const Polynomial& f) { return f.is_zero() ? 0 : sgn(f.leading()); }

int sign_at_neg_infinity(const Polynomial& f) {
  const int s = sign_at_pos_infinity(f);
  return f.degree() % 2 == 0 ? s : -s;
}

}  // namespace palin

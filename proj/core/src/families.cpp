#include "palin/families.hpp"

#include "palin/basis.hpp"

#include <array>
#include <string>

namespace palin {

namespace {

using IntVec = std::vector<Integer>;

// In place: f <- f * (1 + q^step + ... + q^{(terms-1) step}).
void multiply_geometric_block(IntVec& f, std::size_t step, std::size_t terms) {
  if (terms <= 1) return;
  const std::size_t old_size = f.size();
  const std::size_t span = step * (terms - 1);
  f.resize(old_size + span);
  // Sliding window sum along each residue class: h[k] = h[k-step] + f[k] - f[k - terms*step].
  const IntVec src(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(old_size));
  const std::size_t width = step * terms;
  for (std::size_t k = 0; k < f.size(); ++k) {
    Integer v = k < old_size ? src[k] : Integer(0);
    if (k >= step) v += f[k - step];
    if (k >= width && k - width < old_size) v -= src[k - width];
    f[k] = std::move(v);
  }
}

}  // namespace

Polynomial chain_poly(std::size_t n) { return basic_element(Basis::A, n); }
Polynomial boolean_poly(std::size_t n) { return basic_element(Basis::B, n); }

Polynomial gaussian(std::size_t m, std::size_t n) {
  // row[k] = binom(N, k)_q; binom(N, k)_q = binom(N-1, k-1)_q + q^k binom(N-1, k)_q.
  const std::size_t total = m + n;
  const std::size_t k_max = n;
  std::vector<IntVec> row(k_max + 1);
  row[0] = {1};
  for (std::size_t N = 1; N <= total; ++N) {
    for (std::size_t k = std::min(N, k_max); k >= 1; --k) {
      IntVec next(std::max(row[k - 1].size(), row[k].empty() ? 0 : row[k].size() + k));
      for (std::size_t t = 0; t < row[k - 1].size(); ++t) next[t] += row[k - 1][t];
      for (std::size_t t = 0; t < row[k].size(); ++t) next[t + k] += row[k][t];
      row[k] = std::move(next);
    }
  }
  return Polynomial::from_integers(0, std::move(row[k_max]));
}

Polynomial partition_poly(std::size_t n) {
  IntVec f{1};
  for (std::size_t i = 1; i <= n; ++i) multiply_geometric_block(f, i, 2);
  return Polynomial::from_integers(0, std::move(f));
}

Polynomial almkvist(std::size_t n, std::size_t r) {
  if (r == 0) throw DomainError("almkvist needs r >= 1");
  IntVec f{1};
  for (std::size_t i = 1; i <= n; ++i) multiply_geometric_block(f, i, r);
  return Polynomial::from_integers(0, std::move(f));
}

Polynomial eulerian(std::size_t n) {
  if (n == 0) throw DomainError("eulerian needs n >= 1");
  // <n,k> = (k+1)<n-1,k> + (n-k)<n-1,k-1>
  IntVec row{1};
  for (std::size_t size = 2; size <= n; ++size) {
    IntVec next(size);
    for (std::size_t k = 0; k < size; ++k) {
      if (k < row.size()) next[k] += (k + 1) * row[k];
      if (k >= 1) next[k] += (size - k) * row[k - 1];
    }
    row = std::move(next);
  }
  return Polynomial::from_integers(0, std::move(row));
}

Polynomial narayana(std::size_t n) {
  if (n == 0) throw DomainError("narayana needs n >= 1");
  const long nn = static_cast<long>(n);
  IntVec c(n);
  for (long k = 1; k <= nn; ++k) c[static_cast<std::size_t>(k - 1)] = binomial(nn, k) * binomial(nn, k - 1) / nn;
  return Polynomial::from_integers(0, std::move(c));
}

Polynomial derangement(std::size_t n) {
  Polynomial d;
  for (std::size_t k = 0; k <= n; ++k) {
    const Polynomial a = k == 0 ? Polynomial::constant(1) : eulerian(k);
    Coefficient w(binomial(static_cast<long>(n), static_cast<long>(k)));
    if ((n - k) % 2 == 1) w = -w;
    d = d + w * a;
  }
  return d;
}

std::size_t FamilyId::arity(FamilyKind kind) {
  return kind == FamilyKind::gaussian || kind == FamilyKind::almkvist ? 2 : 1;
}

void FamilyId::validate() const {
  if (params.size() != arity(kind))
    throw DomainError(std::string(family_name(kind)) + " takes " + std::to_string(arity(kind)) + " parameter(s)");
  if (kind == FamilyKind::almkvist && params[1] == 0) throw DomainError("almkvist needs r >= 1");
  if ((kind == FamilyKind::eulerian || kind == FamilyKind::narayana) && params[0] == 0)
    throw DomainError(std::string(family_name(kind)) + " needs n >= 1");
}

std::size_t FamilyId::darga() const {
  validate();
  const std::size_t n = params[0];
  switch (kind) {
    case FamilyKind::chain:
    case FamilyKind::boolean:
    case FamilyKind::derangement: return n;
    case FamilyKind::gaussian: return params[0] * params[1];
    case FamilyKind::partition: return n * (n + 1) / 2;
    case FamilyKind::almkvist: return (params[1] - 1) * n * (n + 1) / 2;
    case FamilyKind::eulerian:
    case FamilyKind::narayana: return n - 1;
  }
  return 0;
}

std::string FamilyId::label() const {
  std::string out(family_name(kind));
  out += '(';
  for (std::size_t i = 0; i < params.size(); ++i) out += (i ? "," : "") + std::to_string(params[i]);
  return out + ')';
}

namespace {
constexpr std::array<std::pair<FamilyKind, std::string_view>, 8> kFamilyNames{{
    {FamilyKind::chain, "chain"},
    {FamilyKind::boolean, "boolean"},
    {FamilyKind::gaussian, "gaussian"},
    {FamilyKind::partition, "partition"},
    {FamilyKind::almkvist, "almkvist"},
    {FamilyKind::eulerian, "eulerian"},
    {FamilyKind::narayana, "narayana"},
    {FamilyKind::derangement, "derangement"},
}};
}  // namespace

std::string_view family_name(FamilyKind kind) {
  for (const auto& [k, name] : kFamilyNames)
    if (k == kind) return name;
  return "?";
}

FamilyKind parse_family_kind(std::string_view name) {
  for (const auto& [k, n] : kFamilyNames)
    if (n == name) return k;
  throw DomainError("unknown family '" + std::string(name) + "'");
}

Polynomial generate(const FamilyId& id) {
  id.validate();
  const auto& p = id.params;
  switch (id.kind) {
    case FamilyKind::chain: return chain_poly(p[0]);
    case FamilyKind::boolean: return boolean_poly(p[0]);
    case FamilyKind::gaussian: return gaussian(p[0], p[1]);
    case FamilyKind::partition: return partition_poly(p[0]);
    case FamilyKind::almkvist: return almkvist(p[0], p[1]);
    case FamilyKind::eulerian: return eulerian(p[0]);
    case FamilyKind::narayana: return narayana(p[0]);
    case FamilyKind::derangement: return derangement(p[0]);
  }
  return {};
}

}  // namespace palin

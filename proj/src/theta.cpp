#include "qsym/theta.hpp"

namespace qsym {

ThetaMatrix ThetaMatrix::zero(int n) {
  ThetaMatrix t;
  t.n_ = n;
  t.e_.assign(n, std::vector<Rational>(n));
  return t;
}

ThetaMatrix ThetaMatrix::from_entries(std::vector<std::vector<Rational>> entries) {
  int n = (int)entries.size();
  for (const auto& row : entries)
    if ((int)row.size() != n) throw std::invalid_argument("theta matrix must be square");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (entries[i][j] != -entries[j][i])
        throw std::invalid_argument("theta matrix must be skew-symmetric");
  ThetaMatrix t;
  t.n_ = n;
  t.e_ = std::move(entries);
  return t;
}

ThetaMatrix theta_sigma(const ThetaMatrix& theta, const Perm& sigma) {
  int n = theta.degree();
  Perm si = sigma.inverse();
  std::vector<std::vector<Rational>> e(n, std::vector<Rational>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      e[i - 1][j - 1] = theta.at(j, i) + theta.at(si.apply(i), si.apply(j));
  return ThetaMatrix::from_entries(std::move(e));
}

long conductor_for(const ThetaMatrix& theta, const std::vector<long>& extra) {
  Int N = 1;
  for (int i = 1; i <= theta.degree(); ++i)
    for (int j = 1; j <= theta.degree(); ++j) N = lcm(N, theta.at(i, j).den());
  for (long x : extra) N = lcm(N, Int(x));
  return (long)N;
}

Phase reorder_phase(const ThetaMatrix& theta, const IntVector& r, const IntVector& s) {
  // x_j^{r_j} x_i^{s_i} = omega_ji^{r_j s_i} x_i^{s_i} x_j^{r_j} for i < j
  Rational q;
  int n = theta.degree();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      q += theta.at(j, i) * Rational(Int(r[j - 1]) * Int(s[i - 1]));
  return Phase(q);
}

Phase star_phase(const ThetaMatrix& theta, const IntVector& r) {
  Rational q;
  int n = theta.degree();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      q += theta.at(j, i) * Rational(Int(r[i - 1]) * Int(r[j - 1]));
  return Phase(q);
}

std::shared_ptr<const Context> Context::make(ThetaMatrix theta, long extra_conductor) {
  auto ctx = std::make_shared<Context>();
  ctx->n_ = theta.degree();
  long N = conductor_for(theta, {extra_conductor});
  ctx->field_ = CycloField::get(N);
  ctx->theta_ = std::move(theta);
  return ctx;
}

const ThetaMatrix& Context::theta_of(const Perm& sigma) const {
  auto key = sigma.one_line();
  auto it = sigma_cache_.find(key);
  if (it == sigma_cache_.end())
    it = sigma_cache_.emplace(key, theta_sigma(theta_, sigma)).first;
  return it->second;
}

}  // namespace qsym

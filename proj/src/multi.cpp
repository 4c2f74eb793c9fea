#include "qsym/multi.hpp"

#include "qsym/cocycle.hpp"

#include <sstream>

namespace qsym {

namespace {
IntVector unit_vec(int n, int i) {
  IntVector r(n, 0);
  r[i - 1] = 1;
  return r;
}
}  // namespace

MultiElement MultiElement::monomial(ContextPtr ctx, const Perm& sigma, const IntVector& r,
                                    const Cyclo& coeff) {
  MultiElement e(std::move(ctx));
  if ((int)r.size() != e.ctx_->n() || sigma.degree() != e.ctx_->n()) throw DegreeMismatch();
  e.add_term(sigma, r, coeff);
  return e;
}

MultiElement MultiElement::monomial(ContextPtr ctx, const Perm& sigma, const IntVector& r) {
  Cyclo one = ctx->one();
  return monomial(std::move(ctx), sigma, r, one);
}

MultiElement MultiElement::unit(ContextPtr ctx) {
  MultiElement e(ctx);
  IntVector zero(ctx->n(), 0);
  for (const auto& s : all_perms(ctx->n())) e.add_term(s, zero, ctx->one());
  return e;
}

MultiElement MultiElement::p_sigma(ContextPtr ctx, const Perm& sigma) {
  return monomial(std::move(ctx), sigma, IntVector(sigma.degree(), 0));
}

MultiElement MultiElement::x_gen(ContextPtr ctx, const Perm& sigma, int i) {
  return monomial(std::move(ctx), sigma, unit_vec(sigma.degree(), i));
}

MultiElement MultiElement::u_gen(ContextPtr ctx, int i, int k) {
  int n = ctx->n();
  if (i < 1 || i > n || k < 1 || k > n) throw std::out_of_range("generator index");
  MultiElement e(ctx);
  for (const auto& s : all_perms(n))
    if (s.apply(k) == i) e.add_term(s, unit_vec(n, i), ctx->one());
  return e;
}

MultiElement MultiElement::u_monomial_by_generators(ContextPtr ctx, const Perm& sigma,
                                                    const IntVector& r) {
  Perm si = sigma.inverse();
  MultiElement acc = p_sigma(ctx, sigma);
  for (int i = 1; i <= ctx->n(); ++i)
    acc = acc * u_gen(ctx, i, si.apply(i)).pow(r[i - 1]);
  return acc;
}

MultiElement& MultiElement::add_term(const Perm& sigma, const IntVector& r, const Cyclo& c) {
  if (c.is_zero()) return *this;
  MultiKey key{sigma, r};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

void MultiElement::check_same(const MultiElement& o) const {
  if (ctx_ != o.ctx_) throw ThetaMismatch();
}

MultiElement operator+(const MultiElement& a, const MultiElement& b) {
  a.check_same(b);
  MultiElement out = a;
  for (const auto& [k, c] : b.terms_) out.add_term(k.first, k.second, c);
  return out;
}

MultiElement operator-(const MultiElement& a, const MultiElement& b) {
  a.check_same(b);
  MultiElement out = a;
  for (const auto& [k, c] : b.terms_) out.add_term(k.first, k.second, -c);
  return out;
}

MultiElement operator*(const MultiElement& a, const MultiElement& b) {
  a.check_same(b);
  MultiElement out(a.ctx_);
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      auto prod = MultiLeg::mul(*a.ctx_, ka, kb);
      if (!prod) continue;
      out.add_term(prod->first.first, prod->first.second, ca * cb * prod->second);
    }
  }
  return out;
}

MultiElement MultiElement::operator*(const Cyclo& c) const {
  MultiElement out(ctx_);
  for (const auto& [k, v] : terms_) out.add_term(k.first, k.second, v * c);
  return out;
}

MultiElement MultiElement::operator-() const {
  MultiElement out(ctx_);
  for (const auto& [k, v] : terms_) out.add_term(k.first, k.second, -v);
  return out;
}

MultiElement MultiElement::star() const {
  MultiElement out(ctx_);
  for (const auto& [k, v] : terms_) {
    auto s = MultiLeg::star(*ctx_, k);
    out.add_term(s.first.first, s.first.second, v.conj() * s.second);
  }
  return out;
}

MultiElement MultiElement::pow(long k) const {
  MultiElement base = k >= 0 ? *this : star();
  long m = k >= 0 ? k : -k;
  MultiElement acc = unit(ctx_);
  for (long i = 0; i < m; ++i) acc = acc * base;
  return acc;
}

bool operator==(const MultiElement& a, const MultiElement& b) {
  a.check_same(b);
  return a.terms_ == b.terms_;
}

std::string MultiElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ") * m[sigma=" << k.first.str() << ",r=[";
    for (size_t i = 0; i < k.second.size(); ++i) os << (i ? "," : "") << k.second[i];
    os << "]]";
  }
  return os.str();
}

// ---------------------------------------------------------------------------

std::optional<std::pair<MultiKey, Cyclo>> MultiLeg::mul(const Context& ctx, const Key& a,
                                                        const Key& b) {
  if (!(a.first == b.first)) return std::nullopt;
  IntVector sum(a.second.size());
  for (size_t i = 0; i < sum.size(); ++i) sum[i] = a.second[i] + b.second[i];
  Cyclo c = ctx.cyclo(reorder_phase(ctx.theta_of(a.first), a.second, b.second));
  return std::make_pair(MultiKey{a.first, std::move(sum)}, std::move(c));
}

std::pair<MultiKey, Cyclo> MultiLeg::star(const Context& ctx, const Key& k) {
  IntVector neg(k.second.size());
  for (size_t i = 0; i < neg.size(); ++i) neg[i] = -k.second[i];
  return {MultiKey{k.first, std::move(neg)}, ctx.cyclo(star_phase(ctx.theta_of(k.first), k.second))};
}

std::optional<std::pair<IntVector, Cyclo>> TorusLeg::mul(const Context& ctx, const Key& a,
                                                         const Key& b) {
  IntVector sum(a.size());
  for (size_t i = 0; i < sum.size(); ++i) sum[i] = a[i] + b[i];
  return std::make_pair(std::move(sum), ctx.cyclo(reorder_phase(ctx.theta(), a, b)));
}

std::pair<IntVector, Cyclo> TorusLeg::star(const Context& ctx, const Key& k) {
  IntVector neg(k.size());
  for (size_t i = 0; i < neg.size(); ++i) neg[i] = -k[i];
  return {std::move(neg), ctx.cyclo(star_phase(ctx.theta(), k))};
}

TensorMM tensor_unit_mm(ContextPtr ctx) {
  TensorMM t(ctx);
  IntVector zero(ctx->n(), 0);
  for (const auto& s : all_perms(ctx->n()))
    for (const auto& u : all_perms(ctx->n()))
      t.add_term(MultiKey{s, zero}, MultiKey{u, zero}, ctx->one());
  return t;
}

TensorTM tensor_unit_tm(ContextPtr ctx) {
  TensorTM t(ctx);
  IntVector zero(ctx->n(), 0);
  for (const auto& u : all_perms(ctx->n()))
    t.add_term(zero, MultiKey{u, zero}, ctx->one());
  return t;
}

TensorMM outer(const MultiElement& a, const MultiElement& b) {
  TensorMM t(a.ctx());
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) t.add_term(ka, kb, ca * cb);
  return t;
}

TensorTM outer(const TorusElement& a, const MultiElement& b) {
  TensorTM t(b.ctx());
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) t.add_term(ka, kb, ca * cb);
  return t;
}

// ---------------------------------------------------------------------------

TensorMM delta(const MultiElement& a) {
  const auto& ctx = a.ctx();
  TensorMM out(ctx);
  auto perms = all_perms(ctx->n());
  for (const auto& [k, c] : a.terms()) {
    const Perm& sigma = k.first;
    const IntVector& r = k.second;
    for (const auto& tau : perms) {
      Cyclo phase = ctx->cyclo(psi_tilde(ctx->theta(), r, tau, sigma));
      Perm ti = tau.inverse();
      out.add_term(MultiKey{tau, r}, MultiKey{ti * sigma, ti.act(r)}, c * phase);
    }
  }
  return out;
}

TensorMM delta_generator_path(const MultiElement& a) {
  const auto& ctx = a.ctx();
  auto perms = all_perms(ctx->n());
  IntVector zero(ctx->n(), 0);

  auto delta_p = [&](const Perm& sigma) {
    TensorMM t(ctx);
    for (const auto& tau : perms)
      t.add_term(MultiKey{tau, zero}, MultiKey{tau.inverse() * sigma, zero}, ctx->one());
    return t;
  };
  auto delta_u = [&](int i, int k) {
    TensorMM t(ctx);
    for (int j = 1; j <= ctx->n(); ++j)
      t = t + outer(MultiElement::u_gen(ctx, i, j), MultiElement::u_gen(ctx, j, k));
    return t;
  };

  TensorMM out(ctx);
  for (const auto& [k, c] : a.terms()) {
    const Perm& sigma = k.first;
    const IntVector& r = k.second;
    Perm si = sigma.inverse();
    TensorMM acc = delta_p(sigma);
    for (int i = 1; i <= ctx->n(); ++i)
      acc = acc * delta_u(i, si.apply(i)).pow(r[i - 1]);
    out = out + acc * c;
  }
  return out;
}

Cyclo counit(const MultiElement& a) {
  Cyclo out = a.ctx()->zero();
  Perm e = Perm::identity(a.ctx()->n());
  for (const auto& [k, c] : a.terms())
    if (k.first == e) out += c;
  return out;
}

MultiElement coinverse(const MultiElement& a) {
  const auto& ctx = a.ctx();
  MultiElement out(ctx);
  for (const auto& [k, c] : a.terms()) {
    const Perm& sigma = k.first;
    const IntVector& r = k.second;
    Perm si = sigma.inverse();
    MultiElement acc = MultiElement::unit(ctx);
    // kappa reverses the factor order of p_sigma x_{sigma,1}^{r_1} ... x_{sigma,n}^{r_n},
    // sending x_{sigma,i} to x_{sigma^-1, sigma^-1(i)}^{-1}
    for (int i = ctx->n(); i >= 1; --i)
      acc = acc * MultiElement::x_gen(ctx, si, si.apply(i)).pow(-r[i - 1]);
    acc = acc * MultiElement::p_sigma(ctx, si);
    out = out + acc * c;
  }
  return out;
}

MultiElement chi_character(ContextPtr ctx, const IntVector& r) {
  MultiElement out(ctx);
  Subgroup h = stabilizer(r, ctx->n());
  for (const auto& sigma : h.elements())
    out.add_term(sigma, r, ctx->cyclo(phi_r(ctx->theta(), r, sigma)));
  return out;
}

MultiElement restrict_AH(const Subgroup& h, const MultiElement& a) {
  MultiElement out(a.ctx());
  for (const auto& [k, c] : a.terms())
    if (h.contains(k.first)) out.add_term(k.first, k.second, c);
  return out;
}

TensorMM delta_H(const Subgroup& h, const MultiElement& a) {
  const auto& ctx = a.ctx();
  TensorMM out(ctx);
  for (const auto& [k, c] : a.terms()) {
    const Perm& sigma = k.first;
    const IntVector& r = k.second;
    if (!h.contains(sigma)) throw SupportOutsideSubgroup();
    for (const auto& tau : h.elements()) {
      Cyclo phase = ctx->cyclo(psi_tilde(ctx->theta(), r, tau, sigma));
      Perm ti = tau.inverse();
      out.add_term(MultiKey{tau, r}, MultiKey{ti * sigma, ti.act(r)}, c * phase);
    }
  }
  return out;
}

MultiElement iota_H(const Subgroup& h, const std::map<Perm, Cyclo>& f, ContextPtr ctx) {
  MultiElement out(ctx);
  IntVector zero(ctx->n(), 0);
  for (const auto& [sigma, c] : f) {
    if (!h.contains(sigma)) throw SupportOutsideSubgroup();
    out.add_term(sigma, zero, c);
  }
  return out;
}

TorusElement pi_H_to_torus(const Subgroup& h, const MultiElement& a,
                           ContextPtr commutative_ctx) {
  if (commutative_ctx->conductor() != a.ctx()->conductor()) throw ConductorMismatch();
  TorusElement out(commutative_ctx);
  for (const auto& [k, c] : a.terms()) {
    if (!h.contains(k.first)) throw SupportOutsideSubgroup();
    out.add_term(k.second, c);
  }
  return out;
}

}  // namespace qsym

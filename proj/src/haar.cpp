#include "qsym/haar.hpp"

#include "qsym/cocycle.hpp"

namespace qsym {

namespace {
Rational factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return Rational(1, f);
}

bool is_zero_vec(const IntVector& r) {
  for (long x : r)
    if (x != 0) return false;
  return true;
}
}  // namespace

Cyclo haar(const MultiElement& a) {
  const auto& ctx = a.ctx();
  Cyclo out = ctx->zero();
  for (const auto& [k, c] : a.terms())
    if (is_zero_vec(k.second)) out += c;
  return out * ctx->scalar(factorial(ctx->n()));
}

MultiElement apply_id_haar(const TensorMM& t) {
  const auto& ctx = t.ctx();
  Cyclo w = ctx->scalar(factorial(ctx->n()));
  MultiElement out(ctx);
  for (const auto& [k, c] : t.terms())
    if (is_zero_vec(k.second.second)) out.add_term(k.first.first, k.first.second, c * w);
  return out;
}

MultiElement apply_haar_id(const TensorMM& t) {
  const auto& ctx = t.ctx();
  Cyclo w = ctx->scalar(factorial(ctx->n()));
  MultiElement out(ctx);
  for (const auto& [k, c] : t.terms())
    if (is_zero_vec(k.first.second)) out.add_term(k.second.first, k.second.second, c * w);
  return out;
}

MultiElement apply_id_counit(const TensorMM& t) {
  const auto& ctx = t.ctx();
  Perm e = Perm::identity(ctx->n());
  MultiElement out(ctx);
  for (const auto& [k, c] : t.terms())
    if (k.second.first == e) out.add_term(k.first.first, k.first.second, c);
  return out;
}

MultiElement apply_counit_id(const TensorMM& t) {
  const auto& ctx = t.ctx();
  Perm e = Perm::identity(ctx->n());
  MultiElement out(ctx);
  for (const auto& [k, c] : t.terms())
    if (k.first.first == e) out.add_term(k.second.first, k.second.second, c);
  return out;
}

TorusElement apply_id_counit(const TensorTM& t) {
  const auto& ctx = t.ctx();
  Perm e = Perm::identity(ctx->n());
  TorusElement out(ctx);
  for (const auto& [k, c] : t.terms())
    if (k.second.first == e) out.add_term(k.first, c);
  return out;
}

TensorTM alpha(const TorusElement& b) {
  const auto& ctx = b.ctx();
  int n = ctx->n();

  auto alpha_gen = [&](int k) {
    TensorTM t(ctx);
    for (int i = 1; i <= n; ++i) {
      IntVector ei(n, 0);
      ei[i - 1] = 1;
      MultiElement g = MultiElement::u_gen(ctx, i, k);
      for (const auto& [key, c] : g.terms()) t.add_term(ei, key, c);
    }
    return t;
  };

  TensorTM out(ctx);
  for (const auto& [r, c] : b.terms()) {
    TensorTM acc = tensor_unit_tm(ctx);
    for (int k = 1; k <= n; ++k) acc = acc * alpha_gen(k).pow(r[k - 1]);
    out = out + acc * c;
  }
  return out;
}

TensorTM alpha_closed_form(const TorusElement& b, bool conjugate) {
  const auto& ctx = b.ctx();
  Perm e = Perm::identity(ctx->n());
  TensorTM out(ctx);
  for (const auto& [r, c] : b.terms()) {
    for (const auto& tau : all_perms(ctx->n())) {
      Phase th = theta_cocycle(ctx->theta(), r, tau, e);
      if (conjugate) th = th.conj();
      Cyclo phase = ctx->cyclo(th * psi_tilde(ctx->theta(), r, tau, e));
      Perm ti = tau.inverse();
      IntVector tr = ti.act(r);
      out.add_term(tr, MultiKey{ti, tr}, c * phase);
    }
  }
  return out;
}

Tensor3TMM apply_alpha_id(const TensorTM& t) {
  const auto& ctx = t.ctx();
  Tensor3TMM out;
  for (const auto& [k, c] : t.terms()) {
    TensorTM a = alpha(TorusElement::monomial(ctx, k.first));
    for (const auto& [ka, ca] : a.terms())
      out.add_term(ka.first, ka.second, k.second, c * ca);
  }
  return out;
}

Tensor3TMM apply_id_delta(const TensorTM& t) {
  const auto& ctx = t.ctx();
  Tensor3TMM out;
  for (const auto& [k, c] : t.terms()) {
    TensorMM d = delta(MultiElement::monomial(ctx, k.second.first, k.second.second));
    for (const auto& [kd, cd] : d.terms())
      out.add_term(k.first, kd.first, kd.second, c * cd);
  }
  return out;
}

Tensor3MMM apply_delta_id(const TensorMM& t) {
  const auto& ctx = t.ctx();
  Tensor3MMM out;
  for (const auto& [k, c] : t.terms()) {
    TensorMM d = delta(MultiElement::monomial(ctx, k.first.first, k.first.second));
    for (const auto& [kd, cd] : d.terms())
      out.add_term(kd.first, kd.second, k.second, c * cd);
  }
  return out;
}

Tensor3MMM apply_id_delta(const TensorMM& t) {
  const auto& ctx = t.ctx();
  Tensor3MMM out;
  for (const auto& [k, c] : t.terms()) {
    TensorMM d = delta(MultiElement::monomial(ctx, k.second.first, k.second.second));
    for (const auto& [kd, cd] : d.terms())
      out.add_term(k.first, kd.first, kd.second, c * cd);
  }
  return out;
}

MultiElement collapse_kappa_id(const TensorMM& t) {
  const auto& ctx = t.ctx();
  MultiElement out(ctx);
  for (const auto& [k, c] : t.terms()) {
    MultiElement left = coinverse(MultiElement::monomial(ctx, k.first.first, k.first.second));
    out = out + left * MultiElement::monomial(ctx, k.second.first, k.second.second) * c;
  }
  return out;
}

MultiElement collapse_id_kappa(const TensorMM& t) {
  const auto& ctx = t.ctx();
  MultiElement out(ctx);
  for (const auto& [k, c] : t.terms()) {
    MultiElement right = coinverse(MultiElement::monomial(ctx, k.second.first, k.second.second));
    out = out + MultiElement::monomial(ctx, k.first.first, k.first.second) * right * c;
  }
  return out;
}

}  // namespace qsym

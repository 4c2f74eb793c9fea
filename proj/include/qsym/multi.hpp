#pragma once

#include "qsym/torus.hpp"

#include <functional>
#include <optional>

namespace qsym {

struct SupportOutsideSubgroup : std::runtime_error {
  SupportOutsideSubgroup() : std::runtime_error("function supported outside the subgroup") {}
};

/// Basis monomial index of the multitorus algebra: the component sigma and the
/// degree vector r, standing for x_sigma^r = u_sigma^r.
using MultiKey = std::pair<Perm, IntVector>;

/// Element of the dense Hopf *-subalgebra of A_theta^n in the basis x_sigma^r.
class MultiElement {
public:
  MultiElement() = default;
  explicit MultiElement(ContextPtr ctx) : ctx_(std::move(ctx)) {}

  static MultiElement monomial(ContextPtr ctx, const Perm& sigma, const IntVector& r,
                               const Cyclo& coeff);
  static MultiElement monomial(ContextPtr ctx, const Perm& sigma, const IntVector& r);
  static MultiElement unit(ContextPtr ctx);  // sum of all p_sigma
  static MultiElement p_sigma(ContextPtr ctx, const Perm& sigma);
  static MultiElement x_gen(ContextPtr ctx, const Perm& sigma, int i);  // x_{sigma,i}
  static MultiElement u_gen(ContextPtr ctx, int i, int k);  // sum over sigma(k)=i of x_{sigma,i}

  /// The explicit generator product u_{1,s(1)}^{r_1} ... u_{n,s(n)}^{r_n} with
  /// zero exponents contributing p_sigma; equals monomial(sigma, r) (verified
  /// by the relation suite, not assumed here).
  static MultiElement u_monomial_by_generators(ContextPtr ctx, const Perm& sigma,
                                               const IntVector& r);

  const ContextPtr& ctx() const { return ctx_; }
  const std::map<MultiKey, Cyclo>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  MultiElement& add_term(const Perm& sigma, const IntVector& r, const Cyclo& c);

  friend MultiElement operator+(const MultiElement& a, const MultiElement& b);
  friend MultiElement operator-(const MultiElement& a, const MultiElement& b);
  friend MultiElement operator*(const MultiElement& a, const MultiElement& b);
  MultiElement operator*(const Cyclo& c) const;
  MultiElement operator-() const;
  MultiElement star() const;
  MultiElement pow(long k) const;

  friend bool operator==(const MultiElement& a, const MultiElement& b);
  friend bool operator!=(const MultiElement& a, const MultiElement& b) { return !(a == b); }

  std::string str() const;

private:
  void check_same(const MultiElement& o) const;
  ContextPtr ctx_;
  std::map<MultiKey, Cyclo> terms_;
};

// ---------------------------------------------------------------------------
// Tensor elements.  Legs are kept in the monomial (x) basis with exact
// coefficients; products are leg-wise.

struct MultiLeg {
  using Key = MultiKey;
  static std::optional<std::pair<Key, Cyclo>> mul(const Context& ctx, const Key& a,
                                                  const Key& b);
  static std::pair<Key, Cyclo> star(const Context& ctx, const Key& k);
};

struct TorusLeg {
  using Key = IntVector;
  static std::optional<std::pair<Key, Cyclo>> mul(const Context& ctx, const Key& a,
                                                  const Key& b);
  static std::pair<Key, Cyclo> star(const Context& ctx, const Key& k);
};

template <class L, class R>
class Tensor {
public:
  using LK = typename L::Key;
  using RK = typename R::Key;
  using Key = std::pair<LK, RK>;

  Tensor() = default;
  explicit Tensor(ContextPtr ctx) : ctx_(std::move(ctx)) {}

  const ContextPtr& ctx() const { return ctx_; }
  const std::map<Key, Cyclo>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Tensor& add_term(const LK& l, const RK& r, const Cyclo& c) {
    if (c.is_zero()) return *this;
    auto key = std::make_pair(l, r);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(key, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
  }

  friend Tensor operator+(const Tensor& a, const Tensor& b) {
    Tensor out = a;
    for (const auto& [k, c] : b.terms_) out.add_term(k.first, k.second, c);
    return out;
  }
  friend Tensor operator-(const Tensor& a, const Tensor& b) {
    Tensor out = a;
    for (const auto& [k, c] : b.terms_) out.add_term(k.first, k.second, -c);
    return out;
  }
  friend Tensor operator*(const Tensor& a, const Tensor& b) {
    Tensor out(a.ctx_);
    for (const auto& [ka, ca] : a.terms_) {
      for (const auto& [kb, cb] : b.terms_) {
        auto l = L::mul(*a.ctx_, ka.first, kb.first);
        if (!l) continue;
        auto r = R::mul(*a.ctx_, ka.second, kb.second);
        if (!r) continue;
        out.add_term(l->first, r->first, ca * cb * l->second * r->second);
      }
    }
    return out;
  }
  Tensor operator*(const Cyclo& c) const {
    Tensor out(ctx_);
    for (const auto& [k, v] : terms_) out.add_term(k.first, k.second, v * c);
    return out;
  }
  Tensor star() const {
    Tensor out(ctx_);
    for (const auto& [k, v] : terms_) {
      auto l = L::star(*ctx_, k.first);
      auto r = R::star(*ctx_, k.second);
      out.add_term(l.first, r.first, v.conj() * l.second * r.second);
    }
    return out;
  }
  Tensor pow(long k) const;

  friend bool operator==(const Tensor& a, const Tensor& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Tensor& a, const Tensor& b) { return !(a == b); }

private:
  ContextPtr ctx_;
  std::map<Key, Cyclo> terms_;
};

using TensorMM = Tensor<MultiLeg, MultiLeg>;  // A (x) A
using TensorTM = Tensor<TorusLeg, MultiLeg>;  // B (x) A

TensorMM tensor_unit_mm(ContextPtr ctx);
TensorTM tensor_unit_tm(ContextPtr ctx);
TensorMM outer(const MultiElement& a, const MultiElement& b);
TensorTM outer(const TorusElement& a, const MultiElement& b);

template <class L, class R>
Tensor<L, R> Tensor<L, R>::pow(long k) const {
  if (k < 0) return star().pow(-k);
  Tensor acc;  // set below so the unit matches the leg kinds
  if constexpr (std::is_same_v<L, MultiLeg>)
    acc = tensor_unit_mm(ctx_);
  else
    acc = tensor_unit_tm(ctx_);
  for (long i = 0; i < k; ++i) acc = acc * (*this);
  return acc;
}

/// Accumulator for three-leg tensors; only linear structure and comparison,
/// enough for coassociativity style checks.
template <class K1, class K2, class K3>
class Tensor3 {
public:
  using Key = std::tuple<K1, K2, K3>;

  Tensor3& add_term(const K1& a, const K2& b, const K3& c, const Cyclo& v) {
    if (v.is_zero()) return *this;
    Key key{a, b, c};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(key, v);
    } else {
      it->second += v;
      if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
  }

  const std::map<Key, Cyclo>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend bool operator==(const Tensor3& a, const Tensor3& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Tensor3& a, const Tensor3& b) { return !(a == b); }

private:
  std::map<Key, Cyclo> terms_;
};

using Tensor3MMM = Tensor3<MultiKey, MultiKey, MultiKey>;
using Tensor3TMM = Tensor3<IntVector, MultiKey, MultiKey>;

// ---------------------------------------------------------------------------
// Hopf structure.

/// Closed-form comultiplication Delta(x_sigma^r) = sum_tau psi~_r(tau,sigma)
/// x_tau^r (x) x_{tau^-1 sigma}^{tau^-1 r}, extended linearly.
TensorMM delta(const MultiElement& a);

/// Comultiplication by multiplicative extension from Delta(u_ik) = sum_j
/// u_ij (x) u_jk along the generator factorization; independent path used to
/// certify the closed form.
TensorMM delta_generator_path(const MultiElement& a);

Cyclo counit(const MultiElement& a);

/// Antimultiplicative coinverse, computed along the generator factorization
/// of each basis monomial.
MultiElement coinverse(const MultiElement& a);

/// chi_r = sum over sigma in H_r of phi_r(sigma) u_sigma^r; group-like for
/// the restricted comultiplication delta_H.
MultiElement chi_character(ContextPtr ctx, const IntVector& r);

MultiElement restrict_AH(const Subgroup& h, const MultiElement& a);
TensorMM delta_H(const Subgroup& h, const MultiElement& a);
MultiElement iota_H(const Subgroup& h, const std::map<Perm, Cyclo>& f, ContextPtr ctx);
TorusElement pi_H_to_torus(const Subgroup& h, const MultiElement& a,
                           ContextPtr commutative_ctx);

}  // namespace qsym

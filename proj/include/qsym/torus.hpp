#pragma once

#include "qsym/theta.hpp"

#include <map>

namespace qsym {

struct FiltrationIndex {
  long p = 0, q = 0;
  friend bool operator==(const FiltrationIndex& a, const FiltrationIndex& b) {
    return a.p == b.p && a.q == b.q;
  }
};

/// p = sum of positive parts, q = sum of negative parts of the degree vector.
FiltrationIndex filtration_index(const IntVector& r);

/// Element of Poly(T_theta^n) in the canonical monomial basis x^r.
class TorusElement {
public:
  TorusElement() = default;
  explicit TorusElement(ContextPtr ctx) : ctx_(std::move(ctx)) {}

  static TorusElement monomial(ContextPtr ctx, const IntVector& r, const Cyclo& coeff);
  static TorusElement monomial(ContextPtr ctx, const IntVector& r);
  static TorusElement unit(ContextPtr ctx);
  static TorusElement generator(ContextPtr ctx, int i);  // x_i, 1-based

  const ContextPtr& ctx() const { return ctx_; }
  const std::map<IntVector, Cyclo>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  TorusElement& add_term(const IntVector& r, const Cyclo& c);  // accumulates, prunes zero

  friend TorusElement operator+(const TorusElement& a, const TorusElement& b);
  friend TorusElement operator-(const TorusElement& a, const TorusElement& b);
  friend TorusElement operator*(const TorusElement& a, const TorusElement& b);
  TorusElement operator*(const Cyclo& c) const;
  TorusElement operator-() const;

  TorusElement star() const;
  Cyclo trace_phi() const;  // coefficient of x^0
  TorusElement laplacian() const;
  TorusElement pow(long k) const;  // k may be negative (star of positive power)

  friend bool operator==(const TorusElement& a, const TorusElement& b);
  friend bool operator!=(const TorusElement& a, const TorusElement& b) { return !(a == b); }

  std::string str() const;

private:
  void check_same(const TorusElement& o) const;
  ContextPtr ctx_;
  std::map<IntVector, Cyclo> terms_;
};

}  // namespace qsym

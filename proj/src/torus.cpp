#include "qsym/torus.hpp"

#include <sstream>

namespace qsym {

FiltrationIndex filtration_index(const IntVector& r) {
  FiltrationIndex f;
  for (long x : r) {
    if (x > 0) f.p += x;
    if (x < 0) f.q -= x;
  }
  return f;
}

TorusElement TorusElement::monomial(ContextPtr ctx, const IntVector& r, const Cyclo& coeff) {
  TorusElement e(std::move(ctx));
  if ((int)r.size() != e.ctx_->n()) throw DegreeMismatch();
  e.add_term(r, coeff);
  return e;
}

TorusElement TorusElement::monomial(ContextPtr ctx, const IntVector& r) {
  Cyclo one = ctx->one();
  return monomial(std::move(ctx), r, one);
}

TorusElement TorusElement::unit(ContextPtr ctx) {
  return monomial(std::move(ctx), IntVector(ctx->n(), 0));
}

TorusElement TorusElement::generator(ContextPtr ctx, int i) {
  if (i < 1 || i > ctx->n()) throw std::out_of_range("generator index");
  IntVector r(ctx->n(), 0);
  r[i - 1] = 1;
  return monomial(std::move(ctx), r);
}

TorusElement& TorusElement::add_term(const IntVector& r, const Cyclo& c) {
  if (c.is_zero()) return *this;
  auto it = terms_.find(r);
  if (it == terms_.end()) {
    terms_.emplace(r, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

void TorusElement::check_same(const TorusElement& o) const {
  if (ctx_ != o.ctx_) throw ThetaMismatch();
}

TorusElement operator+(const TorusElement& a, const TorusElement& b) {
  a.check_same(b);
  TorusElement out = a;
  for (const auto& [r, c] : b.terms_) out.add_term(r, c);
  return out;
}

TorusElement operator-(const TorusElement& a, const TorusElement& b) {
  a.check_same(b);
  TorusElement out = a;
  for (const auto& [r, c] : b.terms_) out.add_term(r, -c);
  return out;
}

TorusElement operator*(const TorusElement& a, const TorusElement& b) {
  a.check_same(b);
  TorusElement out(a.ctx_);
  const auto& theta = a.ctx_->theta();
  for (const auto& [r, cr] : a.terms_) {
    for (const auto& [s, cs] : b.terms_) {
      IntVector sum(r.size());
      for (size_t i = 0; i < r.size(); ++i) sum[i] = r[i] + s[i];
      Cyclo c = cr * cs * a.ctx_->cyclo(reorder_phase(theta, r, s));
      out.add_term(sum, c);
    }
  }
  return out;
}

TorusElement TorusElement::operator*(const Cyclo& c) const {
  TorusElement out(ctx_);
  for (const auto& [r, cr] : terms_) out.add_term(r, cr * c);
  return out;
}

TorusElement TorusElement::operator-() const {
  TorusElement out(ctx_);
  for (const auto& [r, cr] : terms_) out.add_term(r, -cr);
  return out;
}

TorusElement TorusElement::star() const {
  TorusElement out(ctx_);
  const auto& theta = ctx_->theta();
  for (const auto& [r, cr] : terms_) {
    IntVector neg(r.size());
    for (size_t i = 0; i < r.size(); ++i) neg[i] = -r[i];
    out.add_term(neg, cr.conj() * ctx_->cyclo(star_phase(theta, r)));
  }
  return out;
}

Cyclo TorusElement::trace_phi() const {
  auto it = terms_.find(IntVector(ctx_->n(), 0));
  return it == terms_.end() ? ctx_->zero() : it->second;
}

TorusElement TorusElement::laplacian() const {
  TorusElement out(ctx_);
  for (const auto& [r, cr] : terms_) {
    Int nrm = 0;
    for (long x : r) nrm += Int(x) * Int(x);
    out.add_term(r, cr * ctx_->scalar(Rational(-nrm)));
  }
  return out;
}

TorusElement TorusElement::pow(long k) const {
  TorusElement base = k >= 0 ? *this : star();
  long m = k >= 0 ? k : -k;
  TorusElement acc = unit(ctx_);
  for (long i = 0; i < m; ++i) acc = acc * base;
  return acc;
}

bool operator==(const TorusElement& a, const TorusElement& b) {
  a.check_same(b);
  return a.terms_ == b.terms_;
}

std::string TorusElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [r, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ") * x^[";
    for (size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
    os << "]";
  }
  return os.str();
}

}  // namespace qsym

#include "qsym/cyclo.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

namespace qsym {

namespace {

// (x^N - 1) / prod_{d | N, d < N} Phi_d, computed by exact division over Z.
std::vector<Int> cyclotomic_poly(long N, std::map<long, std::vector<Int>>& memo) {
  auto it = memo.find(N);
  if (it != memo.end()) return it->second;
  std::vector<Int> p(N + 1);
  p[0] = -1;
  p[N] = 1;
  for (long d = 1; d < N; ++d) {
    if (N % d != 0) continue;
    auto phi_d = cyclotomic_poly(d, memo);
    // divide p by phi_d (both monic up to the leading coefficient of phi_d = 1)
    std::vector<Int> q(p.size() - phi_d.size() + 1);
    std::vector<Int> rem = p;
    for (long k = (long)q.size() - 1; k >= 0; --k) {
      Int c = rem[k + phi_d.size() - 1];
      q[k] = c;
      if (c == 0) continue;
      for (size_t j = 0; j < phi_d.size(); ++j) rem[k + j] -= c * phi_d[j];
    }
    p = q;
  }
  memo[N] = p;
  return p;
}

std::mutex g_field_mutex;
std::map<long, std::unique_ptr<CycloField>>& field_cache() {
  static auto* m = new std::map<long, std::unique_ptr<CycloField>>();
  return *m;
}

}  // namespace

const CycloField* CycloField::get(long N) {
  if (N <= 0) throw std::invalid_argument("conductor must be positive");
  std::lock_guard<std::mutex> lock(g_field_mutex);
  auto& cache = field_cache();
  auto it = cache.find(N);
  if (it == cache.end())
    it = cache.emplace(N, std::unique_ptr<CycloField>(new CycloField(N))).first;
  return it->second.get();
}

CycloField::CycloField(long N) : N_(N) {
  std::map<long, std::vector<Int>> memo;
  phi_poly_ = cyclotomic_poly(N, memo);
  phi_ = (long)phi_poly_.size() - 1;
  // zeta^m for m in [0, N): reduce x^m mod Phi_N iteratively.
  power_tab_.resize(N);
  std::vector<Rational> cur(phi_);
  cur[0] = Rational(1);
  for (long m = 0; m < N; ++m) {
    power_tab_[m] = cur;
    // multiply by x, reduce
    std::vector<Rational> next(phi_);
    Rational top = cur[phi_ - 1];
    for (long i = phi_ - 1; i >= 1; --i) next[i] = cur[i - 1];
    next[0] = Rational(0);
    if (!top.is_zero())
      for (long i = 0; i < phi_; ++i) next[i] -= top * Rational(phi_poly_[i]);
    cur = std::move(next);
  }
}

const std::vector<Rational>& CycloField::zeta_power(long m) const {
  long r = m % N_;
  if (r < 0) r += N_;
  return power_tab_[r];
}

Cyclo Cyclo::zeta_pow(const CycloField* f, long k) {
  Cyclo out(f);
  out.c_ = f->zeta_power(k);
  return out;
}

Cyclo Cyclo::from_phase(const CycloField* f, const Phase& p) {
  Rational nk = Rational(Int(f->conductor())) * p.q();
  if (!nk.is_integer())
    throw NonEmbeddablePhase("phase e(" + p.q().str() + ") does not embed in Q(zeta_" +
                             std::to_string(f->conductor()) + ")");
  return zeta_pow(f, (long)nk.num());
}

bool Cyclo::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

bool Cyclo::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return false;
  return true;
}

Cyclo Cyclo::operator-() const {
  Cyclo out(*this);
  for (auto& x : out.c_) x = -x;
  return out;
}

Cyclo operator+(const Cyclo& a, const Cyclo& b) {
  a.check_same(b);
  Cyclo out(a);
  for (size_t i = 0; i < out.c_.size(); ++i) out.c_[i] += b.c_[i];
  return out;
}

Cyclo operator-(const Cyclo& a, const Cyclo& b) {
  a.check_same(b);
  Cyclo out(a);
  for (size_t i = 0; i < out.c_.size(); ++i) out.c_[i] -= b.c_[i];
  return out;
}

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
  a.check_same(b);
  const CycloField* f = a.field_;
  long d = f->degree();
  // schoolbook product, then reduce the overflow part via the power table
  std::vector<Rational> prod(2 * d - 1);
  for (long i = 0; i < d; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (long j = 0; j < d; ++j) {
      if (b.c_[j].is_zero()) continue;
      prod[i + j] += a.c_[i] * b.c_[j];
    }
  }
  Cyclo out(f);
  for (long i = 0; i < d; ++i) out.c_[i] = prod[i];
  for (long i = d; i < 2 * d - 1; ++i) {
    if (prod[i].is_zero()) continue;
    const auto& red = f->zeta_power(i);
    for (long j = 0; j < d; ++j) out.c_[j] += prod[i] * red[j];
  }
  return out;
}

Cyclo Cyclo::conj() const {
  const CycloField* f = field_;
  Cyclo out(f);
  long N = f->conductor();
  for (long i = 0; i < f->degree(); ++i) {
    if (c_[i].is_zero()) continue;
    const auto& p = f->zeta_power((N - i) % N);
    for (long j = 0; j < f->degree(); ++j) out.c_[j] += c_[i] * p[j];
  }
  return out;
}

Cyclo Cyclo::inv() const {
  if (is_zero()) throw DivisionByZero();
  // extended Euclid in Q[x] for gcd(this, Phi_N) = 1
  const CycloField* f = field_;
  long d = f->degree();
  using Poly = std::vector<Rational>;
  auto deg = [](const Poly& p) -> long {
    for (long i = (long)p.size() - 1; i >= 0; --i)
      if (!p[i].is_zero()) return i;
    return -1;
  };
  Poly r0(d + 1);  // Phi_N
  for (long i = 0; i <= d; ++i) r0[i] = Rational(f->phi_poly_[i]);
  Poly r1(c_.begin(), c_.end());
  Poly s0(1), s1(1);   // Bezout coefficients of r w.r.t. the element
  s1[0] = Rational(1); // Phi * t + elem * s = r
  while (true) {
    long d1 = deg(r1);
    if (d1 < 0) throw DivisionByZero();  // cannot happen for nonzero element
    if (d1 == 0) {
      // r1 is a nonzero constant: inverse = s1 / r1
      Cyclo out(f);
      for (long i = 0; i < d && i < (long)s1.size(); ++i) out.c_[i] = s1[i] / r1[0];
      return out;
    }
    long d0 = deg(r0);
    if (d0 < d1) { std::swap(r0, r1); std::swap(s0, s1); continue; }
    Rational c = r0[d0] / r1[d1];
    long shift = d0 - d1;
    // r0 -= c * x^shift * r1; s0 -= c * x^shift * s1
    for (long i = 0; i <= d1; ++i) r0[i + shift] -= c * r1[i];
    if ((long)s0.size() < (long)s1.size() + shift) s0.resize(s1.size() + shift);
    for (long i = 0; i < (long)s1.size(); ++i) s0[i + shift] -= c * s1[i];
  }
}

bool operator==(const Cyclo& a, const Cyclo& b) {
  a.check_same(b);
  return a.c_ == b.c_;
}

std::complex<double> Cyclo::to_complex() const {
  std::complex<double> acc(0, 0);
  double w = 2.0 * std::numbers::pi / (double)field_->conductor();
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    acc += c_[i].to_double() * std::complex<double>(std::cos(w * i), std::sin(w * i));
  }
  return acc;
}

std::string Cyclo::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << c_[i].str();
    if (i > 0) os << " * zeta(" << field_->conductor() << ")^" << i;
  }
  return os.str();
}

}  // namespace qsym

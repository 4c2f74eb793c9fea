#include "qsym/operator_model.hpp"

#include <sstream>

namespace qsym {

ModelSpace::ModelSpace(ContextPtr ctx, long M) : ctx_(std::move(ctx)), M_(M) {
  if (M <= 0 || M % ctx_->conductor() != 0) throw BadTruncation();
  int n = ctx_->n();
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) lambda_.emplace_back(a, b);
  perms_ = all_perms(n);
  dim_ = (long)perms_.size();
  for (size_t i = 0; i < lambda_.size(); ++i) dim_ *= M_;
}

long ModelSpace::index(int sigma_idx, const std::vector<long>& v) const {
  long idx = sigma_idx;
  for (size_t i = 0; i < lambda_.size(); ++i) idx = idx * M_ + ((v[i] % M_) + M_) % M_;
  return idx;
}

int ModelSpace::sigma_of(long idx) const {
  for (size_t i = 0; i < lambda_.size(); ++i) idx /= M_;
  return (int)idx;
}

std::vector<long> ModelSpace::values_of(long idx) const {
  std::vector<long> v(lambda_.size());
  for (size_t i = lambda_.size(); i-- > 0;) {
    v[i] = idx % M_;
    idx /= M_;
  }
  return v;
}

SparseOp SparseOp::identity(const ModelSpace& s) {
  SparseOp op(s.dim());
  Cyclo one = s.ctx()->one();
  for (long j = 0; j < s.dim(); ++j) op.cols_[j].emplace_back(j, one);
  return op;
}

void SparseOp::add_entry(long row, long col, const Cyclo& c) {
  if (c.is_zero()) return;
  cols_[col].emplace_back(row, c);
  normalize(col);
}

void SparseOp::normalize(long j) {
  auto& col = cols_[j];
  std::sort(col.begin(), col.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<long, Cyclo>> merged;
  for (auto& [row, c] : col) {
    if (!merged.empty() && merged.back().first == row)
      merged.back().second += c;
    else
      merged.emplace_back(row, c);
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const auto& e) { return e.second.is_zero(); }),
               merged.end());
  col = std::move(merged);
}

SparseOp operator+(const SparseOp& a, const SparseOp& b) {
  SparseOp out = a;
  for (long j = 0; j < b.dim(); ++j) {
    for (const auto& [row, c] : b.cols_[j]) out.cols_[j].emplace_back(row, c);
    out.normalize(j);
  }
  return out;
}

SparseOp operator-(const SparseOp& a, const SparseOp& b) {
  SparseOp out = a;
  for (long j = 0; j < b.dim(); ++j) {
    for (const auto& [row, c] : b.cols_[j]) out.cols_[j].emplace_back(row, -c);
    out.normalize(j);
  }
  return out;
}

SparseOp operator*(const SparseOp& a, const SparseOp& b) {
  SparseOp out((long)b.cols_.size());
  for (long j = 0; j < b.dim(); ++j) {
    for (const auto& [k, cb] : b.cols_[j])
      for (const auto& [row, ca] : a.cols_[k]) out.cols_[j].emplace_back(row, ca * cb);
    out.normalize(j);
  }
  return out;
}

SparseOp SparseOp::operator*(const Cyclo& c) const {
  SparseOp out(dim());
  if (c.is_zero()) return out;
  for (long j = 0; j < dim(); ++j)
    for (const auto& [row, v] : cols_[j]) out.cols_[j].emplace_back(row, v * c);
  return out;
}

SparseOp SparseOp::adjoint() const {
  SparseOp out(dim());
  for (long j = 0; j < dim(); ++j)
    for (const auto& [row, c] : cols_[j]) out.cols_[row].emplace_back(j, c.conj());
  for (long j = 0; j < dim(); ++j) out.normalize(j);
  return out;
}

bool SparseOp::is_zero() const {
  for (const auto& col : cols_)
    if (!col.empty()) return false;
  return true;
}

bool operator==(const SparseOp& a, const SparseOp& b) { return a.cols_ == b.cols_; }

std::string SparseOp::str() const {
  std::ostringstream os;
  for (long j = 0; j < dim(); ++j)
    for (const auto& [row, c] : cols_[j]) os << row << " " << j << " " << c.str() << "\n";
  return os.str();
}

namespace {

SparseOp build_U_impl(const ModelSpace& s, int i, int k, IndexReading reading, bool star) {
  const auto& ctx = s.ctx();
  const auto& theta = ctx->theta();
  long M = s.cyclic_order();
  SparseOp op(s.dim());
  long block = 1;
  for (int f = 0; f < s.num_factors(); ++f) block *= M;

  for (size_t si = 0; si < s.perms().size(); ++si) {
    const Perm& sigma = s.perms()[si];
    if (sigma.apply(k) != i) continue;
    std::vector<long> v(s.num_factors(), 0);
    for (long off = 0; off < block; ++off) {
      long col = s.index((int)si, v);
      Phase phase;
      std::vector<long> w = v;
      for (int f = 0; f < s.num_factors(); ++f) {
        auto [l1, l2] = s.lambdas()[f];
        if (k == l1) {
          int idx2 = reading == IndexReading::SigmaDirect ? sigma.apply(l2)
                                                          : sigma.inverse().apply(l2);
          Phase p = theta.omega(i, idx2).conj() * theta.omega(k, l2);
          if (star) p = p.conj();
          phase = phase * p.pow(Int(v[f]));
        } else if (k == l2) {
          w[f] = ((v[f] + (star ? -1 : 1)) % M + M) % M;
        }
      }
      op.add_entry(s.index((int)si, w), col, ctx->cyclo(phase));
      // advance mixed-radix v
      for (int f = s.num_factors() - 1; f >= 0; --f) {
        if (++v[f] < M) break;
        v[f] = 0;
      }
    }
  }
  return op;
}

}  // namespace

SparseOp build_U(const ModelSpace& s, int i, int k, IndexReading reading) {
  return build_U_impl(s, i, k, reading, false);
}

SparseOp build_U_star(const ModelSpace& s, int i, int k, IndexReading reading) {
  return build_U_impl(s, i, k, reading, true);
}

SparseOp build_P(const ModelSpace& s, const Perm& sigma) {
  SparseOp op(s.dim());
  Cyclo one = s.ctx()->one();
  long block = s.dim() / (long)s.perms().size();
  for (size_t si = 0; si < s.perms().size(); ++si) {
    if (!(s.perms()[si] == sigma)) continue;
    for (long off = 0; off < block; ++off) {
      long idx = (long)si * block + off;
      op.add_entry(idx, idx, one);
    }
  }
  return op;
}

SparseOp evaluate(const ModelSpace& s, const MultiElement& a, IndexReading reading) {
  if (a.ctx() != s.ctx()) throw ConductorMismatch();
  SparseOp out = SparseOp::zero(s);
  for (const auto& [key, c] : a.terms()) {
    const Perm& sigma = key.first;
    Perm si = sigma.inverse();
    SparseOp acc = build_P(s, sigma);
    for (int i = 1; i <= s.ctx()->n(); ++i) {
      long r = key.second[i - 1];
      SparseOp gen = r >= 0 ? build_U(s, i, si.apply(i), reading)
                            : build_U_star(s, i, si.apply(i), reading);
      for (long t = 0; t < (r >= 0 ? r : -r); ++t) acc = acc * gen;
    }
    out = out + acc * c;
  }
  return out;
}

ModelRelationReport verify_model_relations(const ModelSpace& s, IndexReading reading) {
  const auto& ctx = s.ctx();
  const auto& theta = ctx->theta();
  int n = ctx->n();
  ModelRelationReport rep;

  std::vector<std::vector<SparseOp>> U(n + 1, std::vector<SparseOp>(n + 1));
  std::vector<std::vector<SparseOp>> Us(n + 1, std::vector<SparseOp>(n + 1));
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= n; ++k) {
      U[i][k] = build_U(s, i, k, reading);
      Us[i][k] = build_U_star(s, i, k, reading);
    }
  SparseOp one = SparseOp::identity(s);

  rep.adjoint_consistent = true;
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= n; ++k)
      rep.adjoint_consistent = rep.adjoint_consistent && Us[i][k] == U[i][k].adjoint();

  rep.e11 = true;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          if (i == j || k == l) continue;
          Cyclo wji = ctx->cyclo(theta.omega(j, i));
          Cyclo wkl = ctx->cyclo(theta.omega(k, l));
          SparseOp lhs = U[i][k] * U[j][l] + (U[j][k] * U[i][l]) * wji;
          SparseOp rhs = (U[i][l] * U[j][k]) * wkl + (U[j][l] * U[i][k]) * (wji * wkl);
          rep.e11 = rep.e11 && lhs == rhs;
        }

  rep.e12a = rep.e12b = true;
  for (int k = 1; k <= n; ++k) {
    SparseOp sa = SparseOp::zero(s), sb = SparseOp::zero(s);
    for (int i = 1; i <= n; ++i) {
      sa = sa + U[i][k] * Us[i][k];
      sb = sb + Us[i][k] * U[i][k];
    }
    rep.e12a = rep.e12a && sa == one;
    rep.e12b = rep.e12b && sb == one;
  }

  rep.e14a = rep.e14b = true;
  for (int k = 1; k <= n; ++k)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        rep.e14a = rep.e14a && (U[j][k] * Us[i][k]).is_zero();
        rep.e14b = rep.e14b && (Us[i][k] * U[j][k]).is_zero();
      }

  rep.partial_isometry = rep.normal = true;
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= n; ++k) {
      rep.partial_isometry =
          rep.partial_isometry && U[i][k] * Us[i][k] * U[i][k] == U[i][k];
      rep.normal = rep.normal && Us[i][k] * U[i][k] == U[i][k] * Us[i][k];
    }

  SparseOp psum = SparseOp::zero(s);
  rep.projections = true;
  for (const auto& sigma : s.perms()) {
    SparseOp p = build_P(s, sigma);
    rep.projections = rep.projections && p * p == p && p.adjoint() == p;
    psum = psum + p;
  }
  rep.projections = rep.projections && psum == one;

  return rep;
}

}  // namespace qsym

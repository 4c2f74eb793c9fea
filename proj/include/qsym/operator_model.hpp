#pragma once

#include "qsym/multi.hpp"

namespace qsym {

struct BadTruncation : std::runtime_error {
  BadTruncation() : std::runtime_error("cyclic order must be a multiple of the conductor") {}
};

/// Finite cyclic avatar of the Hilbert space H = sum over sigma of
/// l^2(Z)^(x C(n,2)): Z is replaced by Z_M with the conductor N dividing M, so
/// every diagonal phase has full period and all relations stay exact.
class ModelSpace {
public:
  ModelSpace(ContextPtr ctx, long M);

  const ContextPtr& ctx() const { return ctx_; }
  long cyclic_order() const { return M_; }
  long dim() const { return dim_; }
  int num_factors() const { return (int)lambda_.size(); }
  const std::vector<std::pair<int, int>>& lambdas() const { return lambda_; }
  const std::vector<Perm>& perms() const { return perms_; }

  /// Basis index from (component index, factor values in Z_M).
  long index(int sigma_idx, const std::vector<long>& v) const;
  int sigma_of(long idx) const;
  std::vector<long> values_of(long idx) const;

private:
  ContextPtr ctx_;
  long M_;
  long dim_;
  std::vector<std::pair<int, int>> lambda_;  // (l1, l2), 1-based, l1 < l2
  std::vector<Perm> perms_;
};

/// Column-sparse exact matrix over Q(zeta_N).
class SparseOp {
public:
  SparseOp() = default;
  explicit SparseOp(long dim) : cols_(dim) {}
  static SparseOp identity(const ModelSpace& s);
  static SparseOp zero(const ModelSpace& s) { return SparseOp(s.dim()); }

  long dim() const { return (long)cols_.size(); }
  const std::vector<std::pair<long, Cyclo>>& col(long j) const { return cols_[j]; }
  void add_entry(long row, long col, const Cyclo& c);

  friend SparseOp operator+(const SparseOp& a, const SparseOp& b);
  friend SparseOp operator-(const SparseOp& a, const SparseOp& b);
  friend SparseOp operator*(const SparseOp& a, const SparseOp& b);
  SparseOp operator*(const Cyclo& c) const;
  SparseOp adjoint() const;

  bool is_zero() const;
  friend bool operator==(const SparseOp& a, const SparseOp& b);
  friend bool operator!=(const SparseOp& a, const SparseOp& b) { return !(a == b); }

  /// Sparse triplet text lines "row col coefficient".
  std::string str() const;

private:
  void normalize(long j);
  std::vector<std::vector<std::pair<long, Cyclo>>> cols_;  // sorted by row, no zeros
};

enum class IndexReading { SigmaDirect, SigmaInverse };

/// The generator operator U_ik: kills H_sigma unless sigma(k) = i; on a factor
/// (l1, l2) acts as identity (k not in the pair), the diagonal phase
/// (conj(omega_{i, sigma(l2)}) omega_{k, l2})^m (k = l1), or the cyclic shift
/// m -> m+1 (k = l2).  `reading` switches sigma(l2) to sigma^-1(l2).
SparseOp build_U(const ModelSpace& s, int i, int k,
                 IndexReading reading = IndexReading::SigmaDirect);

/// The displayed adjoint action, built structurally (not via SparseOp::adjoint).
SparseOp build_U_star(const ModelSpace& s, int i, int k,
                      IndexReading reading = IndexReading::SigmaDirect);

/// Projection onto the component H_sigma.
SparseOp build_P(const ModelSpace& s, const Perm& sigma);

/// The representation pi with pi(x_{sigma,i}) = U_{i,sigma^-1(i)} P_sigma,
/// extended over the monomial basis.
SparseOp evaluate(const ModelSpace& s, const MultiElement& a,
                  IndexReading reading = IndexReading::SigmaDirect);

struct ModelRelationReport {
  bool e11 = false;        // mult1 exchange relation
  bool e12a = false;       // sum_i U_ik U_ik^* = 1
  bool e12b = false;       // sum_i U_ik^* U_ik = 1
  bool e14a = false;       // U_jk U_ik^* = 0 for i != j
  bool e14b = false;       // U_ik^* U_jk = 0 for i != j
  bool partial_isometry = false;  // U U^* U = U
  bool normal = false;            // U^* U = U U^*
  bool projections = false;       // sum_sigma P_sigma = 1, P_sigma orthogonal idempotents
  bool adjoint_consistent = false;  // build_U_star equals SparseOp::adjoint of build_U
  bool all() const {
    return e11 && e12a && e12b && e14a && e14b && partial_isometry && normal && projections &&
           adjoint_consistent;
  }
};

ModelRelationReport verify_model_relations(const ModelSpace& s,
                                           IndexReading reading = IndexReading::SigmaDirect);

}  // namespace qsym

#pragma once

#include "qsym/group_rep.hpp"
#include "qsym/multi.hpp"

namespace qsym {

struct StabilizerMismatch : std::runtime_error {
  StabilizerMismatch()
      : std::runtime_error("representation is not defined exactly on the stabilizer") {}
};

/// Corepresentation of (A_theta^n, Delta): a dim x dim matrix over the algebra.
struct Corep {
  ContextPtr ctx;
  IntVector orbit_rep;
  std::string label;
  int dim = 0;
  std::vector<std::vector<MultiElement>> a;
};

/// One matrix entry of the induced corepresentation at an arbitrary coset
/// representative tau in H_r sigma_nu; nu/mu are coset indices, j/i basis
/// indices (0-based).  Used for the representative-independence check; the
/// canonical entry takes tau = sigma_nu.
MultiElement amu_entry(ContextPtr ctx, const IntVector& r, const Irrep& v,
                       const CosetDecomposition& dec, int nu, int j, int mu, int i,
                       const Perm& tau);

/// Little-subgroup induction of the stabilizer irrep v along the orbit of the
/// canonical (weakly decreasing) degree vector r.
Corep induce(ContextPtr ctx, const IntVector& r, const Irrep& v);

/// Delta(a_ij) = sum_k a_ik (x) a_kj and epsilon(a_ij) = delta_ij.
bool corep_law(const Corep& c);
/// Both unitarity identities sum_k a_ik a_jk^* = delta_ij 1 = sum_k a_ki^* a_kj.
bool corep_unitary(const Corep& c);

/// Character sum of diagonal entries.
MultiElement corep_character(const Corep& c);

/// Basis of { S : S a = b S } with scalar entries, S of shape b.dim x a.dim.
std::vector<Matrix> intertwiners(const Corep& a, const Corep& b);

bool is_irreducible(const Corep& c);
bool are_equivalent(const Corep& a, const Corep& b);

/// Rebuild the basis monomial u_sigma^r from the matrix coefficients of the
/// coreps induced from every irrep over the orbit of r (regular
/// representation inversion); exact by construction or not at all.
MultiElement reconstruct_monomial(ContextPtr ctx, const Perm& sigma, const IntVector& r,
                                  const std::vector<std::pair<Irrep, Corep>>& orbit_coreps);

struct ClassifiedCorep {
  IntVector orbit_rep;
  std::string irrep_label;
  int irrep_dim = 0;
  size_t stabilizer_order = 0;
  bool irreducible = false;
  Corep corep;
};

struct ClassifyResult {
  std::vector<ClassifiedCorep> coreps;
  bool all_irreducible = false;
  bool pairwise_inequivalent = false;
  bool reconstruction_ok = false;
  long classical_count = 0;  // classical Mackey count of T^n x| S_n at the same bound
  bool count_matches_classical = false;
};

/// All weakly decreasing vectors with entries in [-bound, bound].
std::vector<IntVector> orbit_representatives(int n, long bound);

/// Number of irreducible representations of T^n x| S_n whose torus weights
/// are bounded by `bound`, from the classical Mackey machine: one per (orbit,
/// irrep of the stabilizer), counted with partition numbers only.
long classical_mackey_count(int n, long bound);

/// Sorted dimensions of the classical list: [S_n : H_r] times the stabilizer
/// irrep dimension, the latter from hook lengths only.
std::vector<long> classical_mackey_dims(int n, long bound);

ClassifyResult classify(ContextPtr ctx, long bound);

}  // namespace qsym

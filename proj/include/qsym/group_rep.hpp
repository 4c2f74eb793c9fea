#pragma once

#include "qsym/cyclo.hpp"
#include "qsym/perm.hpp"

#include <functional>
#include <map>

namespace qsym {

struct CatalogMissing : std::runtime_error {
  explicit CatalogMissing(int block)
      : std::runtime_error("no irreducible representation catalog for a symmetric block of size " +
                           std::to_string(block)),
        block_size(block) {}
  int block_size;
};

struct NonCanonicalOrbitRep : std::runtime_error {
  NonCanonicalOrbitRep()
      : std::runtime_error("degree vector is not the weakly decreasing orbit representative") {}
};

using Matrix = std::vector<std::vector<Cyclo>>;

Matrix identity_matrix(const CycloField* f, int d);
Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_conj_transpose(const Matrix& a);
Matrix kron(const Matrix& a, const Matrix& b);
bool is_identity_matrix(const Matrix& a);

/// Unitary representation of a subgroup of S_n with exact cyclotomic entries.
struct Irrep {
  std::string name;
  int dim = 0;
  std::map<Perm, Matrix> mats;

  const Matrix& at(const Perm& p) const;
};

/// Irreducible unitary representations of S_m realized over Q(zeta_N),
/// m <= 3 built in; larger blocks must be registered first.  Throws
/// CatalogMissing for an unregistered size and NonEmbeddablePhase when the
/// conductor cannot host the needed roots of unity.
std::vector<Irrep> block_irreps(const CycloField* f, int m);

/// Install a builder for blocks of size m (entries must lie in the supplied
/// field); replaces any previous registration.
void register_block_irreps(int m, std::function<std::vector<Irrep>(const CycloField*)> builder);

/// Contiguous runs of equal entries of a weakly decreasing vector, as
/// (start, length) with 1-based starts.  Throws NonCanonicalOrbitRep if the
/// vector is not weakly decreasing.
std::vector<std::pair<int, int>> young_blocks(const IntVector& r_canonical);

/// Complete list of irreducible unitary representations of the Young
/// stabilizer H_r of a canonical degree vector, as outer tensor products of
/// block irreps.  Matrices are indexed by the elements of H_r inside S_n.
std::vector<Irrep> stabilizer_irreps(const CycloField* f, const IntVector& r_canonical);

/// Checks homomorphism property and unitarity of v over h.
bool validate_rep(const Irrep& v, const Subgroup& h);

}  // namespace qsym

#include "qsym/group_rep.hpp"

#include <mutex>

namespace qsym {

Matrix identity_matrix(const CycloField* f, int d) {
  Matrix m(d, std::vector<Cyclo>(d, Cyclo(f)));
  for (int i = 0; i < d; ++i) m[i][i] = Cyclo::one(f);
  return m;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  int n = (int)a.size(), k = (int)b.size(), m = (int)b[0].size();
  const CycloField* f = a[0][0].field();
  Matrix out(n, std::vector<Cyclo>(m, Cyclo(f)));
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (int j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
    }
  return out;
}

Matrix mat_conj_transpose(const Matrix& a) {
  int n = (int)a.size(), m = (int)a[0].size();
  Matrix out(m, std::vector<Cyclo>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) out[j][i] = a[i][j].conj();
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  int na = (int)a.size(), nb = (int)b.size();
  const CycloField* f = a[0][0].field();
  Matrix out(na * nb, std::vector<Cyclo>(na * nb, Cyclo(f)));
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j)
      for (int k = 0; k < nb; ++k)
        for (int l = 0; l < nb; ++l) out[i * nb + k][j * nb + l] = a[i][j] * b[k][l];
  return out;
}

bool is_identity_matrix(const Matrix& a) {
  const CycloField* f = a[0][0].field();
  Cyclo one = Cyclo::one(f);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) {
      if (i == j && a[i][j] != one) return false;
      if (i != j && !a[i][j].is_zero()) return false;
    }
  return true;
}

const Matrix& Irrep::at(const Perm& p) const {
  auto it = mats.find(p);
  if (it == mats.end()) throw std::out_of_range("representation not defined at this element");
  return it->second;
}

namespace {

std::mutex reg_mutex;
std::map<int, std::function<std::vector<Irrep>(const CycloField*)>>& registry() {
  static std::map<int, std::function<std::vector<Irrep>(const CycloField*)>> r;
  return r;
}

Irrep one_dim(const CycloField* f, int m, const std::string& name, bool sign) {
  Irrep v;
  v.name = name;
  v.dim = 1;
  for (const auto& p : all_perms(m)) {
    Rational val(sign ? p.sign() : 1);
    v.mats.emplace(p, Matrix{{Cyclo(f, val)}});
  }
  return v;
}

Irrep s3_standard(const CycloField* f) {
  long N = f->conductor();
  if (N % 3 != 0)
    throw NonEmbeddablePhase("conductor must be divisible by 3 for the standard S_3 block");
  Cyclo z = Cyclo::zeta_pow(f, N / 3);
  Cyclo z2 = z * z;
  Cyclo zero(f), one = Cyclo::one(f);

  Irrep v;
  v.name = "std";
  v.dim = 2;
  std::map<Perm, Matrix> mats;
  mats.emplace(Perm::from_one_line({2, 3, 1}), Matrix{{z, zero}, {zero, z2}});
  mats.emplace(Perm::from_one_line({2, 1, 3}), Matrix{{zero, one}, {one, zero}});
  mats.emplace(Perm::identity(3), identity_matrix(f, 2));
  // close under multiplication
  bool grew = true;
  while (grew) {
    grew = false;
    auto snapshot = mats;
    for (const auto& [pa, ma] : snapshot)
      for (const auto& [pb, mb] : snapshot) {
        Perm p = pa * pb;
        if (!mats.count(p)) {
          mats.emplace(p, mat_mul(ma, mb));
          grew = true;
        }
      }
  }
  v.mats = std::move(mats);
  return v;
}

/// Embed a permutation of {1..len} into S_n acting on positions start..start+len-1.
Perm embed_block(const Perm& p, int n, int start) {
  std::vector<int> ol(n);
  for (int i = 1; i <= n; ++i) ol[i - 1] = i;
  for (int i = 1; i <= p.degree(); ++i) ol[start + i - 2] = start + p.apply(i) - 1;
  return Perm::from_one_line(ol);
}

}  // namespace

std::vector<Irrep> block_irreps(const CycloField* f, int m) {
  {
    std::lock_guard<std::mutex> lock(reg_mutex);
    auto it = registry().find(m);
    if (it != registry().end()) return it->second(f);
  }
  switch (m) {
    case 1:
      return {one_dim(f, 1, "triv", false)};
    case 2:
      return {one_dim(f, 2, "triv", false), one_dim(f, 2, "sgn", true)};
    case 3:
      return {one_dim(f, 3, "triv", false), one_dim(f, 3, "sgn", true), s3_standard(f)};
    default:
      throw CatalogMissing(m);
  }
}

void register_block_irreps(int m,
                           std::function<std::vector<Irrep>(const CycloField*)> builder) {
  std::lock_guard<std::mutex> lock(reg_mutex);
  registry()[m] = std::move(builder);
}

std::vector<std::pair<int, int>> young_blocks(const IntVector& r) {
  for (size_t i = 1; i < r.size(); ++i)
    if (r[i - 1] < r[i]) throw NonCanonicalOrbitRep();
  std::vector<std::pair<int, int>> blocks;
  size_t i = 0;
  while (i < r.size()) {
    size_t j = i;
    while (j < r.size() && r[j] == r[i]) ++j;
    blocks.emplace_back((int)i + 1, (int)(j - i));
    i = j;
  }
  return blocks;
}

std::vector<Irrep> stabilizer_irreps(const CycloField* f, const IntVector& r) {
  int n = (int)r.size();
  auto blocks = young_blocks(r);
  std::vector<std::vector<Irrep>> per_block;
  for (const auto& [start, len] : blocks) per_block.push_back(block_irreps(f, len));

  std::vector<Irrep> out;
  std::vector<size_t> choice(blocks.size(), 0);
  while (true) {
    Irrep v;
    v.dim = 1;
    for (size_t b = 0; b < blocks.size(); ++b) {
      const Irrep& bi = per_block[b][choice[b]];
      v.dim *= bi.dim;
      v.name += (b ? "x" : "") + bi.name;
    }
    // enumerate H_r as tuples of block permutations
    std::vector<std::vector<Perm>> block_perms;
    for (const auto& [start, len] : blocks) block_perms.push_back(all_perms(len));
    std::vector<size_t> idx(blocks.size(), 0);
    while (true) {
      Perm g = Perm::identity(n);
      Matrix m{{Cyclo::one(f)}};
      for (size_t b = 0; b < blocks.size(); ++b) {
        const Perm& bp = block_perms[b][idx[b]];
        g = g * embed_block(bp, n, blocks[b].first);
        m = kron(m, per_block[b][choice[b]].at(bp));
      }
      v.mats.emplace(g, std::move(m));
      size_t carry = 0;
      while (carry < idx.size() && ++idx[carry] == block_perms[carry].size()) {
        idx[carry] = 0;
        ++carry;
      }
      if (carry == idx.size()) break;
    }
    out.push_back(std::move(v));
    size_t carry = 0;
    while (carry < choice.size() && ++choice[carry] == per_block[carry].size()) {
      choice[carry] = 0;
      ++carry;
    }
    if (carry == choice.size()) break;
  }
  return out;
}

bool validate_rep(const Irrep& v, const Subgroup& h) {
  if (v.mats.size() != h.order()) return false;
  for (const auto& a : h.elements()) {
    if (!v.mats.count(a)) return false;
    const Matrix& ma = v.at(a);
    if (!is_identity_matrix(mat_mul(mat_conj_transpose(ma), ma))) return false;
    for (const auto& b : h.elements())
      if (mat_mul(ma, v.at(b)) != v.at(a * b)) return false;
  }
  return true;
}

}  // namespace qsym

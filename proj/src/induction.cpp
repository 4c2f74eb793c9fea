#include "qsym/induction.hpp"

#include "qsym/cocycle.hpp"

#include <set>

namespace qsym {

MultiElement amu_entry(ContextPtr ctx, const IntVector& r, const Irrep& v,
                       const CosetDecomposition& dec, int nu, int j, int mu, int i,
                       const Perm& tau) {
  const Subgroup& h = dec.subgroup;
  const Perm& snu = dec.reps[nu];
  const Perm& smu = dec.reps[mu];
  if (!h.contains(tau * snu.inverse()))
    throw std::invalid_argument("tau is not in the coset of sigma_nu");
  Perm e = Perm::identity(ctx->n());
  Perm ti = tau.inverse();
  IntVector s = snu.inverse().act(r);
  Phase front = theta_cocycle(ctx->theta(), r, snu, e);

  MultiElement out(ctx);
  for (const auto& xi : h.elements()) {
    Perm pi = ti * xi * smu;
    Phase ph = front.conj() * theta_cocycle(ctx->theta(), r, xi.inverse() * tau, pi);
    const Cyclo& entry = v.at(snu * ti * xi)[j][i];
    if (entry.is_zero()) continue;
    out.add_term(pi, s, ctx->cyclo(ph) * entry);
  }
  return out;
}

Corep induce(ContextPtr ctx, const IntVector& r, const Irrep& v) {
  int n = ctx->n();
  if ((int)r.size() != n) throw DegreeMismatch();
  for (size_t i = 1; i < r.size(); ++i)
    if (r[i - 1] < r[i]) throw NonCanonicalOrbitRep();
  Subgroup h = stabilizer(r, n);
  if (v.mats.size() != h.order()) throw StabilizerMismatch();
  for (const auto& g : h.elements())
    if (!v.mats.count(g)) throw StabilizerMismatch();

  CosetDecomposition dec = right_cosets(h);
  int nc = (int)dec.reps.size();
  Corep c;
  c.ctx = ctx;
  c.orbit_rep = r;
  c.label = v.name;
  c.dim = nc * v.dim;
  c.a.assign(c.dim, std::vector<MultiElement>(c.dim, MultiElement(ctx)));
  for (int nu = 0; nu < nc; ++nu)
    for (int j = 0; j < v.dim; ++j)
      for (int mu = 0; mu < nc; ++mu)
        for (int i = 0; i < v.dim; ++i)
          c.a[nu * v.dim + j][mu * v.dim + i] =
              amu_entry(ctx, r, v, dec, nu, j, mu, i, dec.reps[nu]);
  return c;
}

bool corep_law(const Corep& c) {
  const auto& ctx = c.ctx;
  for (int i = 0; i < c.dim; ++i)
    for (int j = 0; j < c.dim; ++j) {
      TensorMM rhs(ctx);
      for (int k = 0; k < c.dim; ++k) rhs = rhs + outer(c.a[i][k], c.a[k][j]);
      if (delta(c.a[i][j]) != rhs) return false;
      Cyclo eps = counit(c.a[i][j]);
      if (eps != (i == j ? ctx->one() : ctx->zero())) return false;
    }
  return true;
}

bool corep_unitary(const Corep& c) {
  const auto& ctx = c.ctx;
  MultiElement one = MultiElement::unit(ctx);
  for (int i = 0; i < c.dim; ++i)
    for (int j = 0; j < c.dim; ++j) {
      MultiElement row(ctx), col(ctx);
      for (int k = 0; k < c.dim; ++k) {
        row = row + c.a[i][k] * c.a[j][k].star();
        col = col + c.a[k][i].star() * c.a[k][j];
      }
      MultiElement want = i == j ? one : MultiElement(ctx);
      if (row != want || col != want) return false;
    }
  return true;
}

MultiElement corep_character(const Corep& c) {
  MultiElement out(c.ctx);
  for (int i = 0; i < c.dim; ++i) out = out + c.a[i][i];
  return out;
}

namespace {

/// Basis of the nullspace of the given rows over Q(zeta_N).
std::vector<std::vector<Cyclo>> nullspace(std::vector<std::vector<Cyclo>> rows, int ncols,
                                          const CycloField* f) {
  std::vector<int> pivot_col;
  size_t rank = 0;
  for (int col = 0; col < ncols && rank < rows.size(); ++col) {
    size_t piv = rank;
    while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    Cyclo inv = rows[rank][col].inv();
    for (int j = col; j < ncols; ++j) rows[rank][j] *= inv;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][col].is_zero()) continue;
      Cyclo factor = rows[i][col];
      for (int j = col; j < ncols; ++j) rows[i][j] -= factor * rows[rank][j];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<bool> is_pivot(ncols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Cyclo>> basis;
  for (int free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Cyclo> vec(ncols, Cyclo(f));
    vec[free] = Cyclo::one(f);
    for (size_t i = 0; i < rank; ++i) vec[pivot_col[i]] = -rows[i][free];
    basis.push_back(std::move(vec));
  }
  return basis;
}

}  // namespace

std::vector<Matrix> intertwiners(const Corep& a, const Corep& b) {
  if (a.ctx != b.ctx) throw ThetaMismatch();
  const CycloField* f = a.ctx->field();
  int da = a.dim, db = b.dim;
  int ncols = db * da;  // unknown S[p][q], p < db, q < da

  std::vector<std::vector<Cyclo>> rows;
  for (int i = 0; i < db; ++i)
    for (int j = 0; j < da; ++j) {
      // sum_k S[i][k] a[k][j] - sum_k b[i][k] S[k][j] = 0
      std::map<MultiKey, std::vector<Cyclo>> eq;
      auto coeff = [&](const MultiKey& key) -> std::vector<Cyclo>& {
        auto it = eq.find(key);
        if (it == eq.end())
          it = eq.emplace(key, std::vector<Cyclo>(ncols, Cyclo(f))).first;
        return it->second;
      };
      for (int k = 0; k < da; ++k)
        for (const auto& [key, c] : a.a[k][j].terms()) coeff(key)[i * da + k] += c;
      for (int k = 0; k < db; ++k)
        for (const auto& [key, c] : b.a[i][k].terms()) coeff(key)[k * da + j] -= c;
      for (auto& [key, row] : eq) rows.push_back(std::move(row));
    }

  std::vector<Matrix> out;
  for (const auto& vec : nullspace(std::move(rows), ncols, f)) {
    Matrix s(db, std::vector<Cyclo>(da, Cyclo(f)));
    for (int p = 0; p < db; ++p)
      for (int q = 0; q < da; ++q) s[p][q] = vec[p * da + q];
    out.push_back(std::move(s));
  }
  return out;
}

bool is_irreducible(const Corep& c) { return intertwiners(c, c).size() == 1; }

bool are_equivalent(const Corep& a, const Corep& b) { return !intertwiners(a, b).empty(); }

MultiElement reconstruct_monomial(ContextPtr ctx, const Perm& sigma, const IntVector& r,
                                  const std::vector<std::pair<Irrep, Corep>>& orbit_coreps) {
  int n = ctx->n();
  IntVector rk = orbit_representative(r);
  Subgroup h = stabilizer(rk, n);
  CosetDecomposition dec = right_cosets(h);

  int nu = -1;
  for (size_t k = 0; k < dec.reps.size(); ++k)
    if (dec.reps[k].inverse().act(rk) == r) {
      nu = (int)k;
      break;
    }
  if (nu < 0) throw std::logic_error("degree vector not in the orbit of its representative");
  const Perm& snu = dec.reps[nu];
  int mu = dec.coset_of(snu * sigma);
  const Perm& smu = dec.reps[mu];
  Perm rho = snu * sigma * smu.inverse();

  Phase c_phase = theta_cocycle(ctx->theta(), rk, snu, Perm::identity(n)) *
                  theta_cocycle(ctx->theta(), rk, rho.inverse() * snu, sigma).conj();

  MultiElement acc(ctx);
  for (const auto& [v, corep] : orbit_coreps) {
    if (corep.orbit_rep != rk) throw std::invalid_argument("corep from a different orbit");
    const Matrix& m = v.at(rho);
    Cyclo dimc = ctx->scalar(Rational(v.dim));
    for (int j = 0; j < v.dim; ++j)
      for (int i = 0; i < v.dim; ++i) {
        const Cyclo& entry = m[j][i];
        if (entry.is_zero()) continue;
        acc = acc + corep.a[nu * v.dim + j][mu * v.dim + i] * (entry.conj() * dimc);
      }
  }
  return acc * (ctx->cyclo(c_phase) * ctx->scalar(Rational(1, Int(h.order()))));
}

std::vector<IntVector> orbit_representatives(int n, long bound) {
  std::vector<IntVector> out;
  IntVector cur(n, 0);
  std::function<void(int, long)> rec = [&](int pos, long max) {
    if (pos == n) {
      out.push_back(cur);
      return;
    }
    for (long v = max; v >= -bound; --v) {
      cur[pos] = v;
      rec(pos + 1, v);
    }
  };
  rec(0, bound);
  return out;
}

namespace {
long partitions(int m) {
  // Euler's recurrence is overkill at this scale
  std::vector<long> p(m + 1, 0);
  p[0] = 1;
  for (int k = 1; k <= m; ++k)
    for (int i = k; i <= m; ++i) p[i] += p[i - k];
  return p[m];
}

void partitions_list(int m, std::vector<std::vector<int>>& out, std::vector<int>& cur,
                     int max) {
  if (m == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(m, max); k >= 1; --k) {
    cur.push_back(k);
    partitions_list(m - k, out, cur, k);
    cur.pop_back();
  }
}

long hook_dim(const std::vector<int>& lam) {
  int m = 0;
  for (int x : lam) m += x;
  long fact = 1;
  for (int i = 2; i <= m; ++i) fact *= i;
  long hooks = 1;
  for (size_t i = 0; i < lam.size(); ++i)
    for (int j = 0; j < lam[i]; ++j) {
      int arm = lam[i] - j - 1;
      int leg = 0;
      for (size_t k = i + 1; k < lam.size(); ++k)
        if (lam[k] > j) ++leg;
      hooks *= arm + leg + 1;
    }
  return fact / hooks;
}

std::vector<long> block_dims(int m) {
  std::vector<std::vector<int>> parts;
  std::vector<int> cur;
  partitions_list(m, parts, cur, m);
  std::vector<long> dims;
  for (const auto& lam : parts) dims.push_back(hook_dim(lam));
  return dims;
}
}  // namespace

std::vector<long> classical_mackey_dims(int n, long bound) {
  long nfact = 1;
  for (int i = 2; i <= n; ++i) nfact *= i;
  std::vector<long> out;
  for (const auto& r : orbit_representatives(n, bound)) {
    long order = 1;
    std::vector<std::vector<long>> per_block;
    size_t i = 0;
    while (i < r.size()) {
      size_t j = i;
      while (j < r.size() && r[j] == r[i]) ++j;
      int m = (int)(j - i);
      for (int k = 2; k <= m; ++k) order *= k;
      per_block.push_back(block_dims(m));
      i = j;
    }
    long index = nfact / order;
    std::vector<long> prods{1};
    for (const auto& bd : per_block) {
      std::vector<long> next;
      for (long p : prods)
        for (long d : bd) next.push_back(p * d);
      prods = std::move(next);
    }
    for (long p : prods) out.push_back(index * p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

long classical_mackey_count(int n, long bound) {
  long total = 0;
  for (const auto& r : orbit_representatives(n, bound)) {
    long count = 1;
    size_t i = 0;
    while (i < r.size()) {
      size_t j = i;
      while (j < r.size() && r[j] == r[i]) ++j;
      count *= partitions((int)(j - i));
      i = j;
    }
    total += count;
  }
  return total;
}

ClassifyResult classify(ContextPtr ctx, long bound) {
  int n = ctx->n();
  ClassifyResult res;
  std::map<IntVector, std::vector<std::pair<Irrep, Corep>>> by_orbit;

  for (const auto& rk : orbit_representatives(n, bound)) {
    Subgroup h = stabilizer(rk, n);
    for (const auto& v : stabilizer_irreps(ctx->field(), rk)) {
      Corep c = induce(ctx, rk, v);
      ClassifiedCorep entry;
      entry.orbit_rep = rk;
      entry.irrep_label = v.name;
      entry.irrep_dim = v.dim;
      entry.stabilizer_order = h.order();
      entry.irreducible = is_irreducible(c);
      entry.corep = c;
      res.coreps.push_back(std::move(entry));
      by_orbit[rk].emplace_back(v, std::move(c));
    }
  }

  res.all_irreducible = true;
  for (const auto& e : res.coreps) res.all_irreducible = res.all_irreducible && e.irreducible;

  res.pairwise_inequivalent = true;
  for (size_t i = 0; i < res.coreps.size() && res.pairwise_inequivalent; ++i)
    for (size_t j = i + 1; j < res.coreps.size(); ++j)
      if (are_equivalent(res.coreps[i].corep, res.coreps[j].corep)) {
        res.pairwise_inequivalent = false;
        break;
      }

  res.reconstruction_ok = true;
  std::vector<IntVector> all_r;
  {
    IntVector cur(n, 0);
    std::function<void(int)> rec = [&](int pos) {
      if (pos == n) {
        all_r.push_back(cur);
        return;
      }
      for (long v = -bound; v <= bound; ++v) {
        cur[pos] = v;
        rec(pos + 1);
      }
    };
    rec(0);
  }
  for (const auto& r : all_r) {
    const auto& coreps = by_orbit.at(orbit_representative(r));
    for (const auto& sigma : all_perms(n)) {
      MultiElement got = reconstruct_monomial(ctx, sigma, r, coreps);
      if (got != MultiElement::monomial(ctx, sigma, r)) {
        res.reconstruction_ok = false;
        break;
      }
    }
    if (!res.reconstruction_ok) break;
  }

  res.classical_count = classical_mackey_count(n, bound);
  res.count_matches_classical = (long)res.coreps.size() == res.classical_count;
  return res;
}

}  // namespace qsym

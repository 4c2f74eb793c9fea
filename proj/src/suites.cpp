#include "qsym/suites.hpp"

#include "qsym/cocycle.hpp"
#include "qsym/haar.hpp"
#include "qsym/induction.hpp"
#include "qsym/operator_model.hpp"

#include <json.hpp>

#include <fstream>
#include <random>
#include <sstream>

namespace qsym {

// ---------------------------------------------------------------------------
// Report emission.

std::string Report::text() const {
  std::ostringstream os;
  os << "suite: " << suite << "\n";
  for (const auto& it : items) {
    os << (it.pass ? "PASS" : "FAIL") << "  " << it.identity;
    if (!it.instance.empty()) os << "  [" << it.instance << "]";
    os << "\n";
    if (!it.pass && !it.witness.empty()) os << "      witness: " << it.witness << "\n";
  }
  os << (all_pass() ? "all checks passed" : std::to_string(failures()) + " check(s) failed")
     << " (" << items.size() << " total)\n";
  return os.str();
}

std::string Report::json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["total"] = items.size();
  j["failures"] = failures();
  j["pass"] = all_pass();
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& it : items) {
    nlohmann::ordered_json c;
    c["identity"] = it.identity;
    c["instance"] = it.instance;
    c["pass"] = it.pass;
    if (!it.pass) c["witness"] = it.witness;
    j["checks"].push_back(std::move(c));
  }
  return j.dump(2);
}

// ---------------------------------------------------------------------------
// Configuration.

namespace {

void reject_float(const std::string& key, const std::string& value) {
  if (value.find('.') != std::string::npos)
    throw ConfigError("floating point value rejected for " + key + ": " + value);
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

SessionConfig SessionConfig::parse(const std::string& text) {
  SessionConfig cfg;
  std::map<std::pair<int, int>, Rational> entries;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    reject_float(key, value);
    try {
      if (key == "n") {
        cfg.n = (int)std::stol(value);
      } else if (key == "degree_bound") {
        cfg.degree_bound = std::stol(value);
      } else if (key == "conductor") {
        cfg.conductor_override = std::stol(value);
      } else if (key == "model_M") {
        cfg.model_M = std::stol(value);
      } else if (key.rfind("theta_", 0) == 0) {
        auto us = key.find('_', 6);
        if (us == std::string::npos) throw ConfigError("bad theta key: " + key);
        int i = (int)std::stol(key.substr(6, us - 6));
        int j = (int)std::stol(key.substr(us + 1));
        entries[{i, j}] = Rational::parse(value);
      } else {
        throw ConfigError("unknown key: " + key);
      }
    } catch (const std::invalid_argument& e) {
      throw ConfigError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (cfg.n < 1 || cfg.n > 8) throw ConfigError("n must be between 1 and 8");
  if (cfg.degree_bound < 0) throw ConfigError("degree_bound must be nonnegative");
  std::vector<std::vector<Rational>> m(cfg.n, std::vector<Rational>(cfg.n));
  for (const auto& [ij, q] : entries) {
    auto [i, j] = ij;
    if (i < 1 || i > cfg.n || j < 1 || j > cfg.n || i == j)
      throw ConfigError("theta index out of range: theta_" + std::to_string(i) + "_" +
                        std::to_string(j));
    m[i - 1][j - 1] = q;
    if (!entries.count({j, i})) m[j - 1][i - 1] = -q;
  }
  try {
    cfg.theta = ThetaMatrix::from_entries(std::move(m));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return cfg;
}

SessionConfig SessionConfig::load(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open config file: " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return parse(os.str());
}

ContextPtr SessionConfig::make_context() const {
  long extra = 1;
  if (n >= 3) extra = 3;  // catalog conductor for the standard S_3 block
  if (conductor_override > 0)
    extra = lcm(Int(extra), Int(conductor_override)).convert_to<long>();
  return Context::make(theta, extra);
}

// ---------------------------------------------------------------------------
// Shared helpers.

namespace {

std::vector<IntVector> degree_vectors(int n, long bound) {
  std::vector<IntVector> out;
  IntVector cur(n, 0);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == n) {
      out.push_back(cur);
      return;
    }
    for (long v = -bound; v <= bound; ++v) {
      cur[pos] = v;
      rec(pos + 1);
    }
  };
  rec(0);
  return out;
}

std::string vec_str(const IntVector& r) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
  os << "]";
  return os.str();
}

std::string key_str(const Perm& sigma, const IntVector& r) {
  return "sigma=" + sigma.str() + " r=" + vec_str(r);
}

MultiElement random_multi(ContextPtr ctx, std::mt19937& rng, long bound) {
  std::uniform_int_distribution<int> nterms(1, 3);
  std::uniform_int_distribution<long> deg(-bound, bound);
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<long> zk(0, ctx->conductor() - 1);
  auto perms = all_perms(ctx->n());
  std::uniform_int_distribution<size_t> pidx(0, perms.size() - 1);
  MultiElement out(ctx);
  int t = nterms(rng);
  for (int k = 0; k < t; ++k) {
    IntVector r(ctx->n());
    for (auto& x : r) x = deg(rng);
    int nu = num(rng);
    if (nu == 0) nu = 1;
    Cyclo c = ctx->scalar(Rational(nu, 2)) * Cyclo::zeta_pow(ctx->field(), zk(rng));
    out.add_term(perms[pidx(rng)], r, c);
  }
  return out;
}

TorusElement random_torus(ContextPtr ctx, std::mt19937& rng, long bound) {
  std::uniform_int_distribution<int> nterms(1, 3);
  std::uniform_int_distribution<long> deg(-bound, bound);
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<long> zk(0, ctx->conductor() - 1);
  TorusElement out(ctx);
  int t = nterms(rng);
  for (int k = 0; k < t; ++k) {
    IntVector r(ctx->n());
    for (auto& x : r) x = deg(rng);
    int nu = num(rng);
    if (nu == 0) nu = 1;
    out.add_term(r, ctx->scalar(Rational(nu, 2)) * Cyclo::zeta_pow(ctx->field(), zk(rng)));
  }
  return out;
}

std::string diff_str(const MultiElement& a, const MultiElement& b) { return (a - b).str(); }

bool theta_is_zero(const ThetaMatrix& t) {
  for (int i = 1; i <= t.degree(); ++i)
    for (int j = 1; j <= t.degree(); ++j)
      if (!t.at(i, j).is_zero()) return false;
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------

Report suite_relations(ContextPtr ctx, long bound) {
  Report rep;
  rep.suite = "relations";
  int n = ctx->n();
  const auto& theta = ctx->theta();
  MultiElement one = MultiElement::unit(ctx);
  MultiElement zero(ctx);

  std::vector<std::vector<MultiElement>> u(n + 1, std::vector<MultiElement>(n + 1));
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= n; ++k) u[i][k] = MultiElement::u_gen(ctx, i, k);

  bool e11 = true;
  std::string wit, inst;
  for (int i = 1; i <= n && e11; ++i)
    for (int j = 1; j <= n && e11; ++j)
      for (int k = 1; k <= n && e11; ++k)
        for (int l = 1; l <= n; ++l) {
          if (i == j || k == l) continue;
          Cyclo wji = ctx->cyclo(theta.omega(j, i));
          Cyclo wkl = ctx->cyclo(theta.omega(k, l));
          MultiElement lhs = u[i][k] * u[j][l] + u[j][k] * u[i][l] * wji;
          MultiElement rhs = u[i][l] * u[j][k] * wkl + u[j][l] * u[i][k] * (wji * wkl);
          if (lhs != rhs) {
            e11 = false;
            inst = "i,j,k,l=" + std::to_string(i) + "," + std::to_string(j) + "," +
                   std::to_string(k) + "," + std::to_string(l);
            wit = diff_str(lhs, rhs);
            break;
          }
        }
  rep.add("exchange relation u_ik u_jl + w_ji u_jk u_il = w_kl u_il u_jk + w_ji w_kl u_jl u_ik",
          inst, e11, wit);

  auto check_sums = [&](const char* name, auto make) {
    bool ok = true;
    std::string w, in;
    for (int k = 1; k <= n && ok; ++k)
      for (int l = 1; l <= n; ++l) {
        MultiElement sum(ctx);
        for (int i = 1; i <= n; ++i) sum = sum + make(i, k, l);
        MultiElement want = k == l ? one : zero;
        if (sum != want) {
          ok = false;
          in = "k,l=" + std::to_string(k) + "," + std::to_string(l);
          w = diff_str(sum, want);
          break;
        }
      }
    rep.add(name, in, ok, w);
  };
  check_sums("row sums sum_i u_ik u_il* = delta_kl",
             [&](int i, int k, int l) { return u[i][k] * u[i][l].star(); });
  check_sums("row sums sum_i u_il* u_ik = delta_kl",
             [&](int i, int k, int l) { return u[i][l].star() * u[i][k]; });
  check_sums("column sums sum_k u_ik u_jk* = delta_ij",
             [&](int k, int i, int j) { return u[i][k] * u[j][k].star(); });
  check_sums("column sums sum_k u_jk* u_ik = delta_ij",
             [&](int k, int i, int j) { return u[j][k].star() * u[i][k]; });

  bool e14 = true;
  std::string w14, i14;
  for (int k = 1; k <= n && e14; ++k)
    for (int i = 1; i <= n && e14; ++i)
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        MultiElement a = u[j][k] * u[i][k].star();
        MultiElement b = u[i][k].star() * u[j][k];
        if (!a.is_zero() || !b.is_zero()) {
          e14 = false;
          i14 = "i,j,k=" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k);
          w14 = (a + b).str();
          break;
        }
      }
  rep.add("annihilation u_jk u_ik* = 0 = u_ik* u_jk (i != j)", i14, e14, w14);

  bool basis = true;
  std::string wb, ib;
  for (const auto& sigma : all_perms(n)) {
    for (const auto& r : degree_vectors(n, bound)) {
      MultiElement lhs = MultiElement::u_monomial_by_generators(ctx, sigma, r);
      MultiElement rhs = MultiElement::monomial(ctx, sigma, r);
      if (lhs != rhs) {
        basis = false;
        ib = key_str(sigma, r);
        wb = diff_str(lhs, rhs);
        break;
      }
    }
    if (!basis) break;
  }
  rep.add("generator product u_{1,s(1)}^r1 ... u_{n,s(n)}^rn equals the basis monomial", ib,
          basis, wb);

  if (theta_is_zero(theta)) {
    bool comm = true;
    std::string wc, ic;
    std::vector<MultiElement> gens;
    for (int i = 1; i <= n; ++i)
      for (int k = 1; k <= n; ++k) {
        gens.push_back(u[i][k]);
        gens.push_back(u[i][k].star());
      }
    for (size_t a = 0; a < gens.size() && comm; ++a)
      for (size_t b = a + 1; b < gens.size(); ++b)
        if (gens[a] * gens[b] != gens[b] * gens[a]) {
          comm = false;
          ic = "generator pair " + std::to_string(a) + "," + std::to_string(b);
          wc = diff_str(gens[a] * gens[b], gens[b] * gens[a]);
          break;
        }
    rep.add("commutativity at theta = 0", ic, comm, wc);
  }
  return rep;
}

// ---------------------------------------------------------------------------

Report suite_hopf(ContextPtr ctx, long bound) {
  Report rep;
  rep.suite = "hopf";
  int n = ctx->n();
  MultiElement one = MultiElement::unit(ctx);

  bool closed = true, coassoc = true, counit_ok = true, antipode = true, invol = true;
  std::string wcl, icl, wco, ico, wcu, icu, wan, ian, wiv, iiv;
  for (const auto& sigma : all_perms(n)) {
    for (const auto& r : degree_vectors(n, bound)) {
      MultiElement m = MultiElement::monomial(ctx, sigma, r);
      TensorMM d = delta(m);
      if (closed && d != delta_generator_path(m)) {
        closed = false;
        icl = key_str(sigma, r);
      }
      if (coassoc && apply_delta_id(d) != apply_id_delta(d)) {
        coassoc = false;
        ico = key_str(sigma, r);
      }
      if (counit_ok && (apply_id_counit(d) != m || apply_counit_id(d) != m)) {
        counit_ok = false;
        icu = key_str(sigma, r);
      }
      if (antipode) {
        MultiElement eps1 = one * counit(m);
        if (collapse_kappa_id(d) != eps1 || collapse_id_kappa(d) != eps1) {
          antipode = false;
          ian = key_str(sigma, r);
          wan = diff_str(collapse_kappa_id(d), eps1);
        }
      }
      if (invol && coinverse(coinverse(m)) != m) {
        invol = false;
        iiv = key_str(sigma, r);
        wiv = diff_str(coinverse(coinverse(m)), m);
      }
    }
  }
  rep.add("closed-form Delta equals generator-path Delta", icl, closed, wcl);
  rep.add("coassociativity (Delta x id)Delta = (id x Delta)Delta", ico, coassoc, wco);
  rep.add("counit axiom (eps x id)Delta = id = (id x eps)Delta", icu, counit_ok, wcu);
  rep.add("antipode axiom m(kappa x id)Delta = eps(.)1 = m(id x kappa)Delta", ian, antipode,
          wan);
  rep.add("kappa involutive on basis monomials", iiv, invol, wiv);

  bool gen_antipode = true;
  std::string iga, wga;
  for (int i = 1; i <= n && gen_antipode; ++i)
    for (int j = 1; j <= n; ++j) {
      MultiElement s1(ctx), s2(ctx);
      for (int k = 1; k <= n; ++k) {
        s1 = s1 + MultiElement::u_gen(ctx, i, k) * coinverse(MultiElement::u_gen(ctx, k, j));
        s2 = s2 + coinverse(MultiElement::u_gen(ctx, i, k)) * MultiElement::u_gen(ctx, k, j);
      }
      MultiElement want = i == j ? one : MultiElement(ctx);
      if (s1 != want || s2 != want) {
        gen_antipode = false;
        iga = "i,j=" + std::to_string(i) + "," + std::to_string(j);
        wga = diff_str(s1, want);
        break;
      }
    }
  rep.add("sum_k u_ik kappa(u_kj) = delta_ij 1 = sum_k kappa(u_ik) u_kj", iga, gen_antipode,
          wga);

  std::mt19937 rng(20240811);
  bool hom = true, star_ok = true, antihom = true;
  std::string ih, wh, is_, ws, iah, wah;
  for (int t = 0; t < 25; ++t) {
    MultiElement a = random_multi(ctx, rng, bound);
    MultiElement b = random_multi(ctx, rng, bound);
    if (hom && delta(a * b) != delta(a) * delta(b)) {
      hom = false;
      ih = "random pair " + std::to_string(t);
    }
    if (star_ok && delta(a.star()) != delta(a).star()) {
      star_ok = false;
      is_ = "random element " + std::to_string(t);
    }
    if (antihom && coinverse(a * b) != coinverse(b) * coinverse(a)) {
      antihom = false;
      iah = "random pair " + std::to_string(t);
    }
  }
  rep.add("Delta is an algebra homomorphism", ih, hom, wh);
  rep.add("Delta is a *-map", is_, star_ok, ws);
  rep.add("kappa is antimultiplicative", iah, antihom, wah);
  return rep;
}

// ---------------------------------------------------------------------------

Report suite_haar(ContextPtr ctx, long bound) {
  Report rep;
  rep.suite = "haar";
  int n = ctx->n();
  MultiElement one = MultiElement::unit(ctx);
  Rational inv_fact(1);
  {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    inv_fact = Rational(1, f);
  }

  rep.add("h(1) = 1", "", haar(one) == ctx->one(), "");
  {
    bool ok = true;
    std::string inst;
    for (const auto& sigma : all_perms(n))
      if (haar(MultiElement::p_sigma(ctx, sigma)) != ctx->scalar(inv_fact)) {
        ok = false;
        inst = "sigma=" + sigma.str();
        break;
      }
    rep.add("h(p_sigma) = 1/n!", inst, ok, "");
  }

  bool closed = true, linv = true, rinv = true;
  std::string icz, ili, iri;
  for (const auto& sigma : all_perms(n)) {
    for (const auto& r : degree_vectors(n, bound)) {
      MultiElement m = MultiElement::monomial(ctx, sigma, r);
      bool zero_r = true;
      for (long x : r) zero_r = zero_r && x == 0;
      Cyclo want = zero_r ? ctx->scalar(inv_fact) : ctx->zero();
      if (closed && haar(m) != want) {
        closed = false;
        icz = key_str(sigma, r);
      }
      TensorMM d = delta(m);
      MultiElement hm1 = one * haar(m);
      if (linv && apply_id_haar(d) != hm1) {
        linv = false;
        ili = key_str(sigma, r);
      }
      if (rinv && apply_haar_id(d) != hm1) {
        rinv = false;
        iri = key_str(sigma, r);
      }
    }
  }
  rep.add("h(x_sigma^r) = delta_{r,0}/n!", icz, closed, "");
  rep.add("left invariance (id x h)Delta = h(.)1", ili, linv, "");
  rep.add("right invariance (h x id)Delta = h(.)1", iri, rinv, "");

  std::mt19937 rng(20240812);
  bool trace = true, kac = true, pos = true;
  std::string itr, ika, ipo;
  for (int t = 0; t < 100; ++t) {
    MultiElement a = random_multi(ctx, rng, bound);
    MultiElement b = random_multi(ctx, rng, bound);
    if (trace && haar(a * b) != haar(b * a)) {
      trace = false;
      itr = "random pair " + std::to_string(t);
    }
    if (kac && haar(coinverse(a)) != haar(a)) {
      kac = false;
      ika = "random element " + std::to_string(t);
    }
    if (pos && !a.is_zero()) {
      Cyclo q = haar(a.star() * a);
      if (q.is_zero()) {
        pos = false;
        ipo = "random element " + std::to_string(t);
      }
    }
  }
  rep.add("traciality h(ab) = h(ba)", itr, trace, "");
  rep.add("Kac property h(kappa(a)) = h(a)", ika, kac, "");
  rep.add("h(a* a) nonzero for nonzero a", ipo, pos, "");

  // invariance of the torus trace under the coaction: (id x h)alpha = phi(.)1
  bool compat = true;
  std::string icm;
  for (const auto& r : degree_vectors(n, std::min(bound, 2L))) {
    TorusElement x = TorusElement::monomial(ctx, r);
    TensorTM ax = alpha(x);
    TorusElement sliced(ctx);
    for (const auto& [k, c] : ax.terms()) {
      bool zr = true;
      for (long v : k.second.second) zr = zr && v == 0;
      if (zr) sliced.add_term(k.first, c * ctx->scalar(inv_fact));
    }
    if (sliced != TorusElement::unit(ctx) * x.trace_phi()) {
      compat = false;
      icm = "r=" + vec_str(r);
      break;
    }
  }
  rep.add("(id x h)alpha = phi(.)1", icm, compat, "");
  return rep;
}

// ---------------------------------------------------------------------------

Report suite_coaction(ContextPtr ctx, long bound) {
  Report rep;
  rep.suite = "coaction";
  int n = ctx->n();

  rep.add("alpha(1) = 1 x 1", "", alpha(TorusElement::unit(ctx)) == tensor_unit_tm(ctx), "");
  {
    bool ok = true;
    std::string inst;
    for (int k = 1; k <= n; ++k) {
      TensorTM want(ctx);
      for (int i = 1; i <= n; ++i)
        want = want + outer(TorusElement::generator(ctx, i), MultiElement::u_gen(ctx, i, k));
      if (alpha(TorusElement::generator(ctx, k)) != want) {
        ok = false;
        inst = "k=" + std::to_string(k);
        break;
      }
    }
    rep.add("alpha(x_k) = sum_i x_i x u_ik", inst, ok, "");
  }

  std::mt19937 rng(20240813);
  bool hom = true, star_ok = true;
  std::string ih, is_;
  for (int t = 0; t < 25; ++t) {
    TorusElement a = random_torus(ctx, rng, bound);
    TorusElement b = random_torus(ctx, rng, bound);
    if (hom && alpha(a * b) != alpha(a) * alpha(b)) {
      hom = false;
      ih = "random pair " + std::to_string(t);
    }
    if (star_ok && alpha(a.star()) != alpha(a).star()) {
      star_ok = false;
      is_ = "random element " + std::to_string(t);
    }
  }
  rep.add("alpha is an algebra homomorphism", ih, hom, "");
  rep.add("alpha is a *-map", is_, star_ok, "");

  bool coassoc = true, counit_ok = true, transport = true;
  std::string ico, icu, itx;
  for (const auto& r : degree_vectors(n, bound)) {
    TorusElement x = TorusElement::monomial(ctx, r);
    TensorTM ax = alpha(x);
    if (coassoc && apply_alpha_id(ax) != apply_id_delta(ax)) {
      coassoc = false;
      ico = "r=" + vec_str(r);
    }
    if (counit_ok && apply_id_counit(ax) != x) {
      counit_ok = false;
      icu = "r=" + vec_str(r);
    }
    if (transport) {
      IntVector sorted_r = r;
      std::sort(sorted_r.begin(), sorted_r.end());
      for (const auto& [k, c] : ax.terms()) {
        IntVector s = k.first;
        if (k.second.second != s) {
          transport = false;
          break;
        }
        std::sort(s.begin(), s.end());
        if (s != sorted_r) {
          transport = false;
          break;
        }
      }
      if (!transport) itx = "r=" + vec_str(r);
    }
  }
  rep.add("coaction square (alpha x id)alpha = (id x Delta)alpha", ico, coassoc, "");
  rep.add("(id x eps)alpha = id", icu, counit_ok, "");
  rep.add("degree transport: output degrees are permutation images of r", itx, transport, "");

  {
    bool ok = true;
    std::string inst;
    for (int k = 1; k <= n; ++k) {
      TensorTM sum(ctx);
      for (int i = 1; i <= n; ++i) {
        TensorTM right(ctx);
        IntVector zero(n, 0);
        MultiElement g = MultiElement::u_gen(ctx, k, i).star();
        for (const auto& [key, c] : g.terms()) right.add_term(zero, key, c);
        sum = sum + alpha(TorusElement::generator(ctx, i)) * right;
      }
      TensorTM want(ctx);
      MultiElement unit = MultiElement::unit(ctx);
      for (const auto& [key, c] : unit.terms()) {
        IntVector ek(n, 0);
        ek[k - 1] = 1;
        want.add_term(ek, key, c);
      }
      if (sum != want) {
        ok = false;
        inst = "k=" + std::to_string(k);
        break;
      }
    }
    rep.add("Podles identity sum_i alpha(x_i)(1 x u_ki*) = x_k x 1", inst, ok, "");
  }

  bool cf_conj = true, cf_direct = true;
  std::string icc, icd;
  for (const auto& r : degree_vectors(n, bound)) {
    TorusElement x = TorusElement::monomial(ctx, r);
    TensorTM ax = alpha(x);
    if (cf_conj && alpha_closed_form(x, true) != ax) {
      cf_conj = false;
      icc = "r=" + vec_str(r);
    }
    if (cf_direct && alpha_closed_form(x, false) != ax) {
      cf_direct = false;
      icd = "r=" + vec_str(r);
    }
  }
  std::string variant = cf_direct ? "phase vartheta_r(tau,e) psi~_r(tau,e)"
                       : cf_conj  ? "phase conj(vartheta_r(tau,e)) psi~_r(tau,e)"
                                  : "no variant matches";
  rep.add("single-sum closed form matches alpha", variant, cf_conj || cf_direct, "");
  return rep;
}

// ---------------------------------------------------------------------------

Report suite_cocycles(ContextPtr ctx) {
  Report rep;
  rep.suite = "cocycles";
  int n = ctx->n();
  const auto& theta = ctx->theta();
  auto perms = all_perms(n);
  Perm e = Perm::identity(n);

  std::vector<IntVector> rset;
  if (n == 3)
    rset = {{1, 1, 0}, {2, 1, 0}, {1, 1, 1}, {2, 2, 1}, {1, 0, -1}};
  else if (n == 2)
    rset = {{1, 0}, {1, 1}, {2, 1}, {2, 2}, {1, -1}};
  else if (n == 1)
    rset = {{0}, {1}, {2}};
  else {
    auto reps = orbit_representatives(n, 2);
    for (size_t i = 0; i < reps.size() && rset.size() < 5; i += reps.size() / 5 + 1)
      rset.push_back(reps[i]);
  }

  for (const auto& r : rset) {
    Subgroup h = stabilizer(r, n);
    std::string base = "r=" + vec_str(r);

    bool triv = true;
    for (const auto& tau : perms)
      triv = triv && theta_cocycle(theta, r, e, tau).is_one() &&
             psi_tilde(theta, r, e, tau).is_one();
    triv = triv && phi_r(theta, r, e).is_one();
    rep.add("normalization vartheta_r(e,.) = psi~_r(e,.) = phi_r(e) = 1", base, triv, "");

    bool lemma = true;
    for (const auto& s : h.elements())
      for (const auto& tau : perms)
        for (const auto& rho : perms)
          lemma = lemma && theta_cocycle(theta, r, s * tau, rho) ==
                               theta_cocycle(theta, r, s, tau * rho) *
                                   theta_cocycle(theta, r, tau, rho);
    rep.add("cocycle factorization vartheta_r(st,p) = vartheta_r(s,tp) vartheta_r(t,p)", base,
            lemma, "");

    bool prop = true, law = true, norm = true, consist = true;
    for (const auto& s : h.elements())
      for (const auto& t : h.elements()) {
        prop = prop && phi_r(theta, r, s) * phi_r(theta, r, t) ==
                           phi_r(theta, r, s * t) * psi_cocycle(theta, r, s, t);
        consist = consist && psi_cocycle(theta, r, s, t) == psi_tilde(theta, r, s, s * t);
        for (const auto& k : h.elements())
          law = law && psi_cocycle(theta, r, s, t) * psi_cocycle(theta, r, s * t, k) ==
                           psi_cocycle(theta, r, s, t * k) * psi_cocycle(theta, r, t, k);
      }
    for (const auto& s : h.elements())
      norm = norm && psi_cocycle(theta, r, e, s).is_one() &&
             psi_cocycle(theta, r, s, e).is_one();
    rep.add("twisting phi_r(s)phi_r(t) = phi_r(st) psi_r(s,t)", base, prop, "");
    rep.add("2-cocycle law for psi_r on the stabilizer", base, law, "");
    rep.add("psi_r normalized at the identity", base, norm, "");
    rep.add("psi_r(s,t) = psi~_r(s,st)", base, consist, "");

    bool forms = true, alfa = true;
    for (const auto& tau : perms)
      for (const auto& s : perms) {
        forms = forms && psi_tilde(theta, r, tau, s) == psi_tilde_alt(theta, r, tau, s);
        alfa = alfa && psi_tilde(theta, r, tau, s) ==
                           theta_cocycle(theta, r, tau, e).conj() *
                               theta_cocycle(theta, r, tau, tau.inverse() * s);
      }
    rep.add("both inversion-product forms of psi~_r agree", base, forms, "");
    rep.add("psi~_r(s,t) = conj(vartheta_r(s,e)) vartheta_r(s, s^-1 t)", base, alfa, "");

    MultiElement chi = chi_character(ctx, orbit_representative(r));
    Subgroup hc = stabilizer(orbit_representative(r), n);
    bool grouplike = delta_H(hc, chi) == outer(chi, chi);
    rep.add("chi_r group-like under the restricted comultiplication", base, grouplike, "");
  }
  return rep;
}

// ---------------------------------------------------------------------------

Report suite_induction(ContextPtr ctx, long bound) {
  Report rep;
  rep.suite = "induction";
  int n = ctx->n();

  struct Entry {
    IntVector rk;
    Irrep v;
    Corep c;
  };
  std::vector<Entry> entries;
  for (const auto& rk : orbit_representatives(n, bound)) {
    Subgroup h = stabilizer(rk, n);
    CosetDecomposition dec = right_cosets(h);
    for (const auto& v : stabilizer_irreps(ctx->field(), rk)) {
      Corep c = induce(ctx, rk, v);
      std::string inst = "r=" + vec_str(rk) + " v=" + v.name;
      rep.add("corepresentation law Delta(a_ij) = sum_k a_ik x a_kj", inst, corep_law(c), "");
      rep.add("corep matrix unitary", inst, corep_unitary(c), "");
      rep.add("dim = [S_n:H_r] dim(v)", inst,
              c.dim == (int)(dec.reps.size() * (size_t)v.dim), "");
      rep.add("self-intertwiner space is one-dimensional", inst,
              intertwiners(c, c).size() == 1, "");

      bool tau_ind = true;
      for (size_t nu = 0; nu < dec.reps.size() && tau_ind; ++nu)
        for (const auto& xi : h.elements()) {
          Perm tau = xi * dec.reps[nu];
          for (int j = 0; j < v.dim && tau_ind; ++j)
            for (int mu = 0; mu < (int)dec.reps.size() && tau_ind; ++mu)
              for (int i = 0; i < v.dim; ++i)
                if (amu_entry(ctx, rk, v, dec, (int)nu, j, mu, i, tau) !=
                    c.a[nu * v.dim + j][mu * v.dim + i]) {
                  tau_ind = false;
                  break;
                }
          if (!tau_ind) break;
        }
      rep.add("matrix coefficients independent of the coset representative", inst, tau_ind, "");

      entries.push_back({rk, v, std::move(c)});
    }
  }

  bool cross = true;
  std::string icr;
  for (size_t a = 0; a < entries.size() && cross; ++a)
    for (size_t b = a + 1; b < entries.size(); ++b)
      if (!intertwiners(entries[a].c, entries[b].c).empty()) {
        cross = false;
        icr = "pair " + vec_str(entries[a].rk) + "/" + entries[a].v.name + " vs " +
              vec_str(entries[b].rk) + "/" + entries[b].v.name;
        break;
      }
  rep.add("no intertwiners between distinct labels", icr, cross, "");

  bool ortho = true;
  std::string ior;
  for (size_t a = 0; a < entries.size() && ortho; ++a) {
    MultiElement chia = corep_character(entries[a].c);
    for (size_t b = 0; b < entries.size(); ++b) {
      Cyclo val = haar(chia * corep_character(entries[b].c).star());
      Cyclo want = a == b ? ctx->one() : ctx->zero();
      if (val != want) {
        ortho = false;
        ior = "pair " + std::to_string(a) + "," + std::to_string(b);
        break;
      }
    }
  }
  rep.add("character orthogonality h(chi_a chi_b*) = delta_ab", ior, ortho, "");

  std::map<IntVector, std::vector<std::pair<Irrep, Corep>>> by_orbit;
  for (const auto& en : entries) by_orbit[en.rk].emplace_back(en.v, en.c);
  bool recon = true;
  std::string irc, wrc;
  for (const auto& r : degree_vectors(n, bound)) {
    for (const auto& sigma : all_perms(n)) {
      MultiElement got =
          reconstruct_monomial(ctx, sigma, r, by_orbit.at(orbit_representative(r)));
      MultiElement want = MultiElement::monomial(ctx, sigma, r);
      if (got != want) {
        recon = false;
        irc = key_str(sigma, r);
        wrc = diff_str(got, want);
        break;
      }
    }
    if (!recon) break;
  }
  rep.add("reconstruction of every basis monomial from matrix coefficients", irc, recon, wrc);

  long classical = classical_mackey_count(n, bound);
  rep.add("corep count matches the classical Mackey count",
          "count=" + std::to_string(entries.size()) + " classical=" + std::to_string(classical),
          (long)entries.size() == classical, "");

  std::vector<long> dims, cdims = classical_mackey_dims(n, bound);
  for (const auto& en : entries) dims.push_back(en.c.dim);
  std::sort(dims.begin(), dims.end());
  rep.add("corep dimensions match the classical Mackey dimensions", "", dims == cdims, "");
  return rep;
}

// ---------------------------------------------------------------------------

Report suite_model(ContextPtr ctx, long M) {
  Report rep;
  rep.suite = "model";
  if (M <= 0) M = ctx->conductor();
  ModelSpace space(ctx, M);
  int n = ctx->n();

  ModelRelationReport direct = verify_model_relations(space, IndexReading::SigmaDirect);
  ModelRelationReport inverse = verify_model_relations(space, IndexReading::SigmaInverse);
  rep.add("exchange relation on the model", "sigma-direct reading", direct.e11, "");
  rep.add("sum_i U_ik U_ik* = 1", "sigma-direct reading", direct.e12a, "");
  rep.add("sum_i U_ik* U_ik = 1", "sigma-direct reading", direct.e12b, "");
  rep.add("U_jk U_ik* = 0 = U_ik* U_jk (i != j)", "sigma-direct reading",
          direct.e14a && direct.e14b, "");
  rep.add("generators are normal partial isometries", "sigma-direct reading",
          direct.partial_isometry && direct.normal, "");
  rep.add("component projections resolve the identity", "", direct.projections, "");
  rep.add("displayed adjoint equals the matrix adjoint", "", direct.adjoint_consistent, "");
  rep.add("index reading sigma(l2): " + std::string(direct.all() ? "consistent" : "inconsistent"),
          "informational", true, "");
  rep.add("index reading sigma^-1(l2): " + std::string(inverse.all() ? "consistent" : "inconsistent"),
          "informational", true, "");
  rep.add("at least one index reading is consistent", "", direct.all() || inverse.all(), "");

  IndexReading reading =
      direct.all() ? IndexReading::SigmaDirect : IndexReading::SigmaInverse;

  rep.add("pi(1) = identity", "",
          evaluate(space, MultiElement::unit(ctx), reading) == SparseOp::identity(space), "");
  {
    bool ok = true;
    std::string inst;
    for (int i = 1; i <= n && ok; ++i)
      for (int k = 1; k <= n; ++k)
        if (evaluate(space, MultiElement::u_gen(ctx, i, k), reading) !=
            build_U(space, i, k, reading)) {
          ok = false;
          inst = "i,k=" + std::to_string(i) + "," + std::to_string(k);
          break;
        }
    rep.add("pi(u_ik) = U_ik", inst, ok, "");
  }
  {
    bool ok = true;
    std::string inst;
    for (const auto& sigma : all_perms(n))
      if (evaluate(space, MultiElement::p_sigma(ctx, sigma), reading) !=
          build_P(space, sigma)) {
        ok = false;
        inst = "sigma=" + sigma.str();
        break;
      }
    rep.add("pi(p_sigma) = projection onto H_sigma", inst, ok, "");
  }

  std::mt19937 rng(20240814);
  bool hom = true, star_ok = true;
  std::string ih, is_;
  for (int t = 0; t < 200; ++t) {
    MultiElement a = random_multi(ctx, rng, 2);
    MultiElement b = random_multi(ctx, rng, 2);
    if (hom &&
        evaluate(space, a * b, reading) != evaluate(space, a, reading) * evaluate(space, b, reading)) {
      hom = false;
      ih = "random pair " + std::to_string(t);
    }
    if (star_ok && evaluate(space, a.star(), reading) != evaluate(space, a, reading).adjoint()) {
      star_ok = false;
      is_ = "random element " + std::to_string(t);
    }
    if (!hom && !star_ok) break;
  }
  rep.add("pi(ab) = pi(a) pi(b) on random pairs", ih, hom, "");
  rep.add("pi(a*) = pi(a)* on random elements", is_, star_ok, "");

  // Faithfulness on the window |r_i| < M: evaluate of a basis monomial never
  // vanishes.  pi(x_sigma^r) maps the block basis vector at v = 0 to a phase
  // times another basis vector, so one column decides.
  std::vector<std::vector<SparseOp>> U(n + 1, std::vector<SparseOp>(n + 1));
  std::vector<std::vector<SparseOp>> Us(n + 1, std::vector<SparseOp>(n + 1));
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= n; ++k) {
      U[i][k] = build_U(space, i, k, reading);
      Us[i][k] = build_U_star(space, i, k, reading);
    }
  auto apply_monomial = [&](const Perm& sigma, const IntVector& r,
                            long start) -> std::optional<std::pair<long, Cyclo>> {
    Perm si = sigma.inverse();
    std::pair<long, Cyclo> cur{start, ctx->one()};
    for (int i = 1; i <= n; ++i) {
      const SparseOp& gen = r[i - 1] >= 0 ? U[i][si.apply(i)] : Us[i][si.apply(i)];
      long reps = r[i - 1] >= 0 ? r[i - 1] : -r[i - 1];
      for (long t = 0; t < reps; ++t) {
        const auto& col = gen.col(cur.first);
        if (col.empty()) return std::nullopt;
        cur = {col[0].first, col[0].second * cur.second};
      }
    }
    return cur;
  };
  bool inj = true;
  std::string ii;
  std::vector<long> zero_v(space.num_factors(), 0);
  for (int sidx = 0; sidx < (int)space.perms().size() && inj; ++sidx) {
    const Perm& sigma = space.perms()[sidx];
    for (const auto& r : degree_vectors(n, M - 1)) {
      auto base = apply_monomial(sigma, r, space.index(sidx, zero_v));
      if (!base || base->second.is_zero()) {
        inj = false;
        ii = key_str(sigma, r);
        break;
      }
    }
  }
  rep.add("pi nonvanishing on basis monomials with |r_i| < M", ii, inj, "");
  return rep;
}

// ---------------------------------------------------------------------------

Report run_suite(const std::string& name, const SessionConfig& cfg) {
  ContextPtr ctx = cfg.make_context();
  long bound = cfg.degree_bound;
  long M = cfg.model_M > 0 ? cfg.model_M : ctx->conductor();
  if (name == "relations") return suite_relations(ctx, bound);
  if (name == "hopf") return suite_hopf(ctx, bound);
  if (name == "haar") return suite_haar(ctx, bound);
  if (name == "coaction") return suite_coaction(ctx, bound);
  if (name == "cocycles") return suite_cocycles(ctx);
  if (name == "induction") return suite_induction(ctx, bound);
  if (name == "model") return suite_model(ctx, M);
  if (name == "all") {
    Report all;
    all.suite = "all";
    all.append(suite_relations(ctx, bound));
    all.append(suite_hopf(ctx, bound));
    all.append(suite_haar(ctx, bound));
    all.append(suite_coaction(ctx, bound));
    all.append(suite_cocycles(ctx));
    all.append(suite_induction(ctx, bound));
    all.append(suite_model(ctx, M));
    return all;
  }
  throw ConfigError("unknown suite: " + name);
}

}  // namespace qsym

#include "qsym/perm.hpp"

#include <numeric>
#include <set>
#include <sstream>

namespace qsym {

Perm Perm::identity(int n) {
  Perm p;
  p.img_.resize(n);
  std::iota(p.img_.begin(), p.img_.end(), 0);
  return p;
}

Perm Perm::from_one_line(const std::vector<int>& images) {
  int n = (int)images.size();
  std::vector<bool> seen(n, false);
  Perm p;
  p.img_.resize(n);
  for (int k = 0; k < n; ++k) {
    int v = images[k] - 1;
    if (v < 0 || v >= n || seen[v])
      throw std::invalid_argument("not a permutation in one-line notation");
    seen[v] = true;
    p.img_[k] = v;
  }
  return p;
}

Perm Perm::inverse() const {
  Perm p;
  p.img_.resize(img_.size());
  for (size_t k = 0; k < img_.size(); ++k) p.img_[img_[k]] = (int)k;
  return p;
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) throw DegreeMismatch();
  Perm p;
  p.img_.resize(a.img_.size());
  for (size_t k = 0; k < a.img_.size(); ++k) p.img_[k] = a.img_[b.img_[k]];
  return p;
}

bool Perm::is_identity() const {
  for (size_t k = 0; k < img_.size(); ++k)
    if (img_[k] != (int)k) return false;
  return true;
}

IntVector Perm::act(const IntVector& r) const {
  if ((int)r.size() != degree()) throw DegreeMismatch();
  Perm inv = inverse();
  IntVector out(r.size());
  for (size_t i = 0; i < r.size(); ++i) out[i] = r[inv.img_[i]];
  return out;
}

int Perm::sign() const {
  int s = 1;
  for (size_t i = 0; i < img_.size(); ++i)
    for (size_t j = i + 1; j < img_.size(); ++j)
      if (img_[i] > img_[j]) s = -s;
  return s;
}

std::vector<int> Perm::one_line() const {
  std::vector<int> out(img_.size());
  for (size_t k = 0; k < img_.size(); ++k) out[k] = img_[k] + 1;
  return out;
}

std::string Perm::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t k = 0; k < img_.size(); ++k) os << (k ? "," : "") << img_[k] + 1;
  os << "]";
  return os.str();
}

std::vector<Perm> all_perms(int n) {
  if (n < 0 || n > 8) throw std::invalid_argument("degree out of range (n <= 8)");
  std::vector<int> ol(n);
  std::iota(ol.begin(), ol.end(), 1);
  std::vector<Perm> out;
  do {
    out.push_back(Perm::from_one_line(ol));
  } while (std::next_permutation(ol.begin(), ol.end()));
  return out;
}

Subgroup::Subgroup(int n, std::vector<Perm> elements) : n_(n), elems_(std::move(elements)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end(),
                           [](const Perm& a, const Perm& b) { return a == b; }),
               elems_.end());
}

bool Subgroup::contains(const Perm& p) const {
  return std::binary_search(elems_.begin(), elems_.end(), p);
}

bool Subgroup::closed() const {
  if (!contains(Perm::identity(n_))) return false;
  for (const auto& a : elems_) {
    if (!contains(a.inverse())) return false;
    for (const auto& b : elems_)
      if (!contains(a * b)) return false;
  }
  return true;
}

Subgroup Subgroup::full(int n) { return Subgroup(n, all_perms(n)); }
Subgroup Subgroup::trivial(int n) { return Subgroup(n, {Perm::identity(n)}); }

Subgroup stabilizer(const IntVector& r, int n) {
  if ((int)r.size() != n) throw DegreeMismatch();
  std::vector<Perm> elems;
  for (const auto& s : all_perms(n))
    if (s.act(r) == r) elems.push_back(s);
  return Subgroup(n, std::move(elems));
}

IntVector orbit_representative(IntVector r) {
  std::sort(r.begin(), r.end(), std::greater<long>());
  return r;
}

CosetDecomposition right_cosets(const Subgroup& h) {
  int n = h.degree();
  CosetDecomposition dec;
  dec.subgroup = h;
  std::set<std::vector<int>> covered;
  for (const auto& s : all_perms(n)) {
    if (covered.count(s.one_line())) continue;
    dec.reps.push_back(s);  // lex-smallest of its coset: all_perms is lex ordered
    for (const auto& x : h.elements()) covered.insert((x * s).one_line());
  }
  return dec;
}

int CosetDecomposition::coset_of(const Perm& sigma) const {
  for (size_t nu = 0; nu < reps.size(); ++nu)
    if (subgroup.contains(sigma * reps[nu].inverse())) return (int)nu;
  throw std::logic_error("coset decomposition does not cover S_n");
}

}  // namespace qsym

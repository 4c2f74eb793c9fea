#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsym {

struct DegreeMismatch : std::runtime_error {
  DegreeMismatch() : std::runtime_error("permutation/vector degree mismatch") {}
};

using IntVector = std::vector<long>;

/// Permutation of {1..n} in one-line notation, stored 0-based: img_[k] = sigma(k+1)-1.
class Perm {
public:
  Perm() = default;
  static Perm identity(int n);
  /// One-line notation, 1-based entries as serialized externally, e.g. {2,1,3}.
  static Perm from_one_line(const std::vector<int>& images_1based);

  int degree() const { return (int)img_.size(); }
  /// sigma(k) for 1-based k, 1-based result.
  int apply(int k) const { return img_[k - 1] + 1; }

  Perm inverse() const;
  friend Perm operator*(const Perm& a, const Perm& b);  // (a*b)(k) = a(b(k))
  bool is_identity() const;

  /// (sigma r)_i = r_{sigma^{-1}(i)}.  A left action on Z^n.
  IntVector act(const IntVector& r) const;

  friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
  friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }
  friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

  int sign() const;
  std::vector<int> one_line() const;  // 1-based
  std::string str() const;

private:
  std::vector<int> img_;
};

std::vector<Perm> all_perms(int n);  // lexicographic order, n <= 8

/// Subgroup of S_n held as a sorted explicit element list.
class Subgroup {
public:
  Subgroup() = default;
  Subgroup(int n, std::vector<Perm> elements);

  int degree() const { return n_; }
  size_t order() const { return elems_.size(); }
  const std::vector<Perm>& elements() const { return elems_; }
  bool contains(const Perm& p) const;
  bool closed() const;  // contains identity, closed under product and inverse

  static Subgroup full(int n);
  static Subgroup trivial(int n);

private:
  int n_ = 0;
  std::vector<Perm> elems_;
};

struct CosetDecomposition {
  Subgroup subgroup;
  std::vector<Perm> reps;  // lex-smallest element of each right coset H\sigma, identity first
  /// Index of the coset containing sigma.
  int coset_of(const Perm& sigma) const;
};

Subgroup stabilizer(const IntVector& r, int n);
IntVector orbit_representative(IntVector r);  // weakly decreasing reordering
CosetDecomposition right_cosets(const Subgroup& h);

}  // namespace qsym

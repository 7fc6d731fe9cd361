#pragma once

#include "catkit/simplicial_set.hpp"

namespace catkit {

/// Bisimplicial set truncated at (bound_m, bound_n). The first index is the
/// horizontal direction, the second the vertical one.
class TruncatedBisimplicialSet {
 public:
  int bound_m() const { return bound_m_; }
  int bound_n() const { return bound_n_; }
  std::size_t size(int m, int n) const { return names_[at(m, n)].size(); }
  const std::string& name(int m, int n, int x) const { return names_[at(m, n)][x]; }

  int hface(int m, int n, int i, int x) const { return hface_[at(m, n)][static_cast<std::size_t>(x) * (m + 1) + i]; }
  int hdegeneracy(int m, int n, int j, int x) const { return hdeg_[at(m, n)][static_cast<std::size_t>(x) * (m + 1) + j]; }
  int vface(int m, int n, int i, int x) const { return vface_[at(m, n)][static_cast<std::size_t>(x) * (n + 1) + i]; }
  int vdegeneracy(int m, int n, int j, int x) const { return vdeg_[at(m, n)][static_cast<std::size_t>(x) * (n + 1) + j]; }

  const std::string& provenance() const { return provenance_; }

 private:
  friend class BisimplicialSetBuilder;
  std::size_t at(int m, int n) const { return static_cast<std::size_t>(m) * (bound_n_ + 1) + n; }
  int bound_m_ = 0;
  int bound_n_ = 0;
  std::vector<std::vector<std::string>> names_;
  std::vector<std::vector<int>> hface_, hdeg_, vface_, vdeg_;
  std::string provenance_;
};

using BiSSetPtr = std::shared_ptr<const TruncatedBisimplicialSet>;

class BisimplicialSetBuilder {
 public:
  BisimplicialSetBuilder(int bound_m, int bound_n);
  int add_cell(int m, int n, std::string name);
  void set_hface(int m, int n, int i, int x, int y);
  void set_hdegeneracy(int m, int n, int j, int x, int y);
  void set_vface(int m, int n, int i, int x, int y);
  void set_vdegeneracy(int m, int n, int j, int x, int y);
  void set_provenance(std::string p) { W_.provenance_ = std::move(p); }
  /// Checks both families of simplicial identities and that they commute.
  BiSSetPtr build(bool validate = true);

 private:
  TruncatedBisimplicialSet W_;
};

/// Fixed n: a simplicial set in m.
SSetPtr row(const TruncatedBisimplicialSet& W, int n);
/// Fixed m: a simplicial set in n.
SSetPtr column(const TruncatedBisimplicialSet& W, int m);
/// (m,m) cells up to min of the bounds.
SSetPtr diagonal(const TruncatedBisimplicialSet& W);
/// Map row(n) -> row(k) induced by a monotone theta : [k] -> [n]; `from`
/// and `to` are the two rows.
SimplicialMap row_operator(const TruncatedBisimplicialSet& W, int n, const std::vector<int>& theta,
                           const SSetPtr& from, const SSetPtr& to);
/// The bisimplicial set constant in n with value K.
BiSSetPtr constant_bisimplicial(const SSetPtr& K, int bound_n);
/// K x L as a bisimplicial set (K horizontal, L vertical).
BiSSetPtr external_product(const SSetPtr& K, const SSetPtr& L);

}  // namespace catkit

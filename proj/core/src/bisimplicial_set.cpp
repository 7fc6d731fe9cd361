#include "catkit/bisimplicial_set.hpp"

namespace catkit {

BisimplicialSetBuilder::BisimplicialSetBuilder(int bound_m, int bound_n) {
  if (bound_m < 0 || bound_n < 0) throw Error(ErrorKind::BadIndex, "negative bound");
  W_.bound_m_ = bound_m;
  W_.bound_n_ = bound_n;
  const std::size_t cells = static_cast<std::size_t>(bound_m + 1) * (bound_n + 1);
  W_.names_.resize(cells);
  W_.hface_.resize(cells);
  W_.hdeg_.resize(cells);
  W_.vface_.resize(cells);
  W_.vdeg_.resize(cells);
}

int BisimplicialSetBuilder::add_cell(int m, int n, std::string name) {
  const std::size_t a = W_.at(m, n);
  W_.names_[a].push_back(std::move(name));
  const std::size_t count = W_.names_[a].size();
  W_.hface_[a].resize(count * (m + 1), kNone);
  W_.hdeg_[a].resize(count * (m + 1), kNone);
  W_.vface_[a].resize(count * (n + 1), kNone);
  W_.vdeg_[a].resize(count * (n + 1), kNone);
  return static_cast<int>(count - 1);
}

void BisimplicialSetBuilder::set_hface(int m, int n, int i, int x, int y) {
  W_.hface_[W_.at(m, n)][static_cast<std::size_t>(x) * (m + 1) + i] = y;
}
void BisimplicialSetBuilder::set_hdegeneracy(int m, int n, int j, int x, int y) {
  W_.hdeg_[W_.at(m, n)][static_cast<std::size_t>(x) * (m + 1) + j] = y;
}
void BisimplicialSetBuilder::set_vface(int m, int n, int i, int x, int y) {
  W_.vface_[W_.at(m, n)][static_cast<std::size_t>(x) * (n + 1) + i] = y;
}
void BisimplicialSetBuilder::set_vdegeneracy(int m, int n, int j, int x, int y) {
  W_.vdeg_[W_.at(m, n)][static_cast<std::size_t>(x) * (n + 1) + j] = y;
}

BiSSetPtr BisimplicialSetBuilder::build(bool validate) {
  auto W = std::make_shared<TruncatedBisimplicialSet>(W_);
  if (!validate) return W;
  // Rows and columns re-run the one-directional checks.
  for (int n = 0; n <= W->bound_n(); ++n) row(*W, n);
  for (int m = 0; m <= W->bound_m(); ++m) column(*W, m);
  for (int m = 0; m <= W->bound_m(); ++m) {
    for (int n = 0; n <= W->bound_n(); ++n) {
      for (int x = 0; x < static_cast<int>(W->size(m, n)); ++x) {
        const std::string where = " at '" + W->name(m, n, x) + "'";
        for (int i = 0; m > 0 && i <= m; ++i) {
          for (int k = 0; n > 0 && k <= n; ++k) {
            if (W->vface(m - 1, n, k, W->hface(m, n, i, x)) != W->hface(m, n - 1, i, W->vface(m, n, k, x))) {
              throw Error(ErrorKind::SimplicialIdentity, "horizontal and vertical faces do not commute" + where);
            }
          }
          for (int k = 0; n < W->bound_n() && k <= n; ++k) {
            if (W->vdegeneracy(m - 1, n, k, W->hface(m, n, i, x)) != W->hface(m, n + 1, i, W->vdegeneracy(m, n, k, x))) {
              throw Error(ErrorKind::SimplicialIdentity, "horizontal face and vertical degeneracy do not commute" + where);
            }
          }
        }
        for (int j = 0; m < W->bound_m() && j <= m; ++j) {
          for (int k = 0; n > 0 && k <= n; ++k) {
            if (W->vface(m + 1, n, k, W->hdegeneracy(m, n, j, x)) != W->hdegeneracy(m, n - 1, j, W->vface(m, n, k, x))) {
              throw Error(ErrorKind::SimplicialIdentity, "horizontal degeneracy and vertical face do not commute" + where);
            }
          }
          for (int k = 0; n < W->bound_n() && k <= n; ++k) {
            if (W->vdegeneracy(m + 1, n, k, W->hdegeneracy(m, n, j, x)) !=
                W->hdegeneracy(m, n + 1, j, W->vdegeneracy(m, n, k, x))) {
              throw Error(ErrorKind::SimplicialIdentity, "degeneracies do not commute" + where);
            }
          }
        }
      }
    }
  }
  return W;
}

SSetPtr row(const TruncatedBisimplicialSet& W, int n) {
  SimplicialSetBuilder b(W.bound_m());
  b.set_provenance(W.provenance() + " row " + std::to_string(n));
  for (int m = 0; m <= W.bound_m(); ++m) {
    for (std::size_t x = 0; x < W.size(m, n); ++x) b.add_simplex(m, W.name(m, n, static_cast<int>(x)));
  }
  for (int m = 0; m <= W.bound_m(); ++m) {
    for (int x = 0; x < static_cast<int>(W.size(m, n)); ++x) {
      for (int i = 0; m > 0 && i <= m; ++i) b.set_face(m, i, x, W.hface(m, n, i, x));
      for (int j = 0; m < W.bound_m() && j <= m; ++j) b.set_degeneracy(m, j, x, W.hdegeneracy(m, n, j, x));
    }
  }
  return b.build();
}

SSetPtr column(const TruncatedBisimplicialSet& W, int m) {
  SimplicialSetBuilder b(W.bound_n());
  b.set_provenance(W.provenance() + " column " + std::to_string(m));
  for (int n = 0; n <= W.bound_n(); ++n) {
    for (std::size_t x = 0; x < W.size(m, n); ++x) b.add_simplex(n, W.name(m, n, static_cast<int>(x)));
  }
  for (int n = 0; n <= W.bound_n(); ++n) {
    for (int x = 0; x < static_cast<int>(W.size(m, n)); ++x) {
      for (int i = 0; n > 0 && i <= n; ++i) b.set_face(n, i, x, W.vface(m, n, i, x));
      for (int j = 0; n < W.bound_n() && j <= n; ++j) b.set_degeneracy(n, j, x, W.vdegeneracy(m, n, j, x));
    }
  }
  return b.build();
}

SSetPtr diagonal(const TruncatedBisimplicialSet& W) {
  const int d = std::min(W.bound_m(), W.bound_n());
  SimplicialSetBuilder b(d);
  b.set_provenance("diag " + W.provenance());
  for (int k = 0; k <= d; ++k) {
    for (std::size_t x = 0; x < W.size(k, k); ++x) b.add_simplex(k, W.name(k, k, static_cast<int>(x)));
  }
  for (int k = 0; k <= d; ++k) {
    for (int x = 0; x < static_cast<int>(W.size(k, k)); ++x) {
      for (int i = 0; k > 0 && i <= k; ++i) b.set_face(k, i, x, W.vface(k - 1, k, i, W.hface(k, k, i, x)));
      for (int j = 0; k < d && j <= k; ++j) b.set_degeneracy(k, j, x, W.vdegeneracy(k + 1, k, j, W.hdegeneracy(k, k, j, x)));
    }
  }
  return b.build();
}

SimplicialMap row_operator(const TruncatedBisimplicialSet& W, int n, const std::vector<int>& theta,
                           const SSetPtr& from, const SSetPtr& to) {
  SimplicialMap f{from, to, {}};
  for (int m = 0; m <= W.bound_m(); ++m) {
    auto col = column(W, m);
    std::vector<int> lv;
    for (int x = 0; x < static_cast<int>(W.size(m, n)); ++x) lv.push_back(col->apply(n, x, theta));
    f.levels.push_back(std::move(lv));
  }
  return f;
}

BiSSetPtr constant_bisimplicial(const SSetPtr& K, int bound_n) {
  BisimplicialSetBuilder b(K->bound(), bound_n);
  b.set_provenance("const(" + K->provenance() + ")");
  for (int m = 0; m <= K->bound(); ++m) {
    for (int n = 0; n <= bound_n; ++n) {
      for (std::size_t x = 0; x < K->size(m); ++x) b.add_cell(m, n, K->name(m, static_cast<int>(x)));
    }
  }
  for (int m = 0; m <= K->bound(); ++m) {
    for (int n = 0; n <= bound_n; ++n) {
      for (int x = 0; x < static_cast<int>(K->size(m)); ++x) {
        for (int i = 0; m > 0 && i <= m; ++i) b.set_hface(m, n, i, x, K->face(m, i, x));
        for (int j = 0; m < K->bound() && j <= m; ++j) b.set_hdegeneracy(m, n, j, x, K->degeneracy(m, j, x));
        for (int i = 0; n > 0 && i <= n; ++i) b.set_vface(m, n, i, x, x);
        for (int j = 0; n < bound_n && j <= n; ++j) b.set_vdegeneracy(m, n, j, x, x);
      }
    }
  }
  return b.build();
}

BiSSetPtr external_product(const SSetPtr& K, const SSetPtr& L) {
  BisimplicialSetBuilder b(K->bound(), L->bound());
  b.set_provenance("(" + K->provenance() + ")[x](" + L->provenance() + ")");
  for (int m = 0; m <= K->bound(); ++m) {
    for (int n = 0; n <= L->bound(); ++n) {
      for (std::size_t x = 0; x < K->size(m); ++x) {
        for (std::size_t y = 0; y < L->size(n); ++y) {
          b.add_cell(m, n, "(" + K->name(m, static_cast<int>(x)) + "," + L->name(n, static_cast<int>(y)) + ")");
        }
      }
    }
  }
  for (int m = 0; m <= K->bound(); ++m) {
    for (int n = 0; n <= L->bound(); ++n) {
      const int ln = static_cast<int>(L->size(n));
      for (int x = 0; x < static_cast<int>(K->size(m)); ++x) {
        for (int y = 0; y < ln; ++y) {
          const int c = x * ln + y;
          for (int i = 0; m > 0 && i <= m; ++i) b.set_hface(m, n, i, c, K->face(m, i, x) * ln + y);
          for (int j = 0; m < K->bound() && j <= m; ++j) b.set_hdegeneracy(m, n, j, c, K->degeneracy(m, j, x) * ln + y);
          for (int i = 0; n > 0 && i <= n; ++i) {
            b.set_vface(m, n, i, c, x * static_cast<int>(L->size(n - 1)) + L->face(n, i, y));
          }
          for (int j = 0; n < L->bound() && j <= n; ++j) {
            b.set_vdegeneracy(m, n, j, c, x * static_cast<int>(L->size(n + 1)) + L->degeneracy(n, j, y));
          }
        }
      }
    }
  }
  return b.build();
}

}  // namespace catkit

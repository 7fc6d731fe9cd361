#include <algorithm>
#include <map>

#include "catkit/monotone.hpp"
#include "catkit/simplicial_set.hpp"

namespace catkit {
namespace {

std::vector<std::vector<int>> all_sequences(int k, int values) {
  std::vector<std::vector<int>> out{{}};
  for (int i = 0; i <= k; ++i) {
    std::vector<std::vector<int>> next;
    for (const auto& s : out) {
      for (int v = 0; v < values; ++v) {
        auto t = s;
        t.push_back(v);
        next.push_back(std::move(t));
      }
    }
    out = std::move(next);
  }
  return out;
}

bool keep_cell(CellKind kind, int m, int horn, const std::vector<int>& values) {
  std::vector<char> hit(m + 1, 0);
  for (int v : values) hit[v] = 1;
  switch (kind) {
    case CellKind::Simplex:
    case CellKind::E1:
      return true;
    case CellKind::Boundary:
      return std::count(hit.begin(), hit.end(), 1) < m + 1;
    case CellKind::Horn:
      for (int v = 0; v <= m; ++v) {
        if (v != horn && !hit[v]) return true;
      }
      return false;
    case CellKind::Spine:
      return values.front() == values.back() || values.back() - values.front() <= 1;
  }
  return false;
}

const char* kind_name(CellKind kind) {
  switch (kind) {
    case CellKind::Simplex: return "Delta";
    case CellKind::Boundary: return "dDelta";
    case CellKind::Horn: return "Lambda";
    case CellKind::Spine: return "Spine";
    case CellKind::E1: return "E1";
  }
  return "?";
}

}  // namespace

SSetPtr standard_cells(CellKind kind, int m, int bound, int horn_index) {
  if (bound < 0) throw Error(ErrorKind::BadIndex, "negative dimension bound");
  if (m < 0 && kind != CellKind::E1) throw Error(ErrorKind::BadIndex, "negative simplex dimension");
  if (kind == CellKind::Horn && (horn_index < 0 || horn_index > m)) {
    throw Error(ErrorKind::BadIndex, "horn index " + std::to_string(horn_index) + " outside [0," + std::to_string(m) + "]");
  }
  SimplicialSetBuilder b(bound);
  std::string prov = std::string(kind_name(kind));
  if (kind != CellKind::E1) prov += "[" + std::to_string(m) + (kind == CellKind::Horn ? "," + std::to_string(horn_index) : "") + "]";
  b.set_provenance(prov + "<=" + std::to_string(bound));
  std::vector<std::map<std::vector<int>, int>> index(bound + 1);
  std::vector<std::vector<std::vector<int>>> cells(bound + 1);
  for (int k = 0; k <= bound; ++k) {
    auto candidates = kind == CellKind::E1 ? all_sequences(k, 2) : monotone_maps(k, m);
    for (auto& v : candidates) {
      if (kind != CellKind::E1 && !keep_cell(kind, m, horn_index, v)) continue;
      index[k][v] = b.add_simplex(k, format_values(v));
      cells[k].push_back(std::move(v));
    }
  }
  for (int k = 0; k <= bound; ++k) {
    for (std::size_t x = 0; x < cells[k].size(); ++x) {
      const auto& v = cells[k][x];
      for (int i = 0; k > 0 && i <= k; ++i) {
        auto f = v;
        f.erase(f.begin() + i);
        b.set_face(k, i, static_cast<int>(x), index[k - 1].at(f));
      }
      for (int j = 0; k < bound && j <= k; ++j) {
        auto s = v;
        s.insert(s.begin() + j, v[j]);
        b.set_degeneracy(k, j, static_cast<int>(x), index[k + 1].at(s));
      }
    }
  }
  return b.build();
}

SimplicialMap standard_inclusion(const SSetPtr& sub, const SSetPtr& simplex) {
  if (sub->bound() != simplex->bound()) throw Error(ErrorKind::BoundMismatch, "inclusion between different bounds");
  SimplicialMap f{sub, simplex, {}};
  for (int k = 0; k <= sub->bound(); ++k) {
    std::vector<int> lv;
    for (std::size_t x = 0; x < sub->size(k); ++x) {
      auto y = simplex->find(k, sub->name(k, static_cast<int>(x)));
      if (!y) throw Error(ErrorKind::PreconditionViolated, "'" + sub->name(k, static_cast<int>(x)) + "' is not a simplex of the target");
      lv.push_back(*y);
    }
    f.levels.push_back(std::move(lv));
  }
  if (auto v = simplicial_map_violation(f)) throw Error(ErrorKind::PreconditionViolated, *v);
  return f;
}

SimplicialMap yoneda_map(const SSetPtr& simplex, const SSetPtr& K, int x) {
  if (simplex->bound() != K->bound()) throw Error(ErrorKind::BoundMismatch, "classifying map between different bounds");
  const int m = static_cast<int>(simplex->size(0)) - 1;
  if (m > K->bound()) throw Error(ErrorKind::BoundMismatch, "simplex dimension exceeds the bound");
  SimplicialMap f{simplex, K, {}};
  for (int k = 0; k <= K->bound(); ++k) {
    std::vector<int> lv;
    for (const auto& theta : monotone_maps(k, m)) lv.push_back(K->apply(m, x, theta));
    f.levels.push_back(std::move(lv));
  }
  return f;
}

}  // namespace catkit

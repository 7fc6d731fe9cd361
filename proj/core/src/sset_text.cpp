#include <sstream>
#include <unordered_map>

#include "catkit/sset_text.hpp"

namespace catkit {
namespace {

int to_int(const std::pair<int, std::string>& word, int line) {
  try {
    std::size_t used = 0;
    int v = std::stoi(word.second, &used);
    if (used == word.second.size() && v >= 0) return v;
  } catch (const std::exception&) {
  }
  throw_parse_error(line, word.first, "expected a non-negative integer, got '" + word.second + "'");
}

std::string provenance_of(const TextDocument& doc) {
  const TextSection* s = doc.find("provenance");
  if (!s || s->lines.empty()) return {};
  return s->lines.front().text;
}

const TextSection& require(const TextDocument& doc, const char* name) {
  const TextSection* s = doc.find(name);
  if (!s) throw Error(ErrorKind::ParseError, std::string("missing section '") + name + "'");
  return *s;
}

// "k1 .. kr x = a b c": returns the r indices, the key name and the values.
struct Row {
  std::vector<int> index;
  std::pair<int, std::string> key;
  std::vector<std::pair<int, std::string>> values;
};

Row table_row(const TextLine& line, int arity) {
  auto w = split_words(line);
  if (static_cast<int>(w.size()) < arity + 2 || w[arity + 1].second != "=") {
    throw_parse_error(line.number, line.column, "expected '" + std::string(arity == 1 ? "k" : "m n") + " name = ...'");
  }
  Row r;
  for (int a = 0; a < arity; ++a) r.index.push_back(to_int(w[a], line.number));
  r.key = w[arity];
  r.values.assign(w.begin() + arity + 2, w.end());
  return r;
}

// "k1 .. kr: names"; the last index carries the colon.
std::pair<std::vector<int>, std::vector<std::pair<int, std::string>>> listing_row(const TextLine& line, int arity) {
  auto w = split_words(line);
  if (static_cast<int>(w.size()) < arity || w[arity - 1].second.empty() || w[arity - 1].second.back() != ':') {
    throw_parse_error(line.number, line.column, "expected '" + std::string(arity == 1 ? "k:" : "m n:") + " names'");
  }
  w[arity - 1].second.pop_back();
  std::vector<int> idx;
  for (int a = 0; a < arity; ++a) idx.push_back(to_int(w[a], line.number));
  return {idx, {w.begin() + arity, w.end()}};
}

std::string join(const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? " " : "") + names[i];
  return out;
}

}  // namespace

SSetPtr sset_from_document(const TextDocument& doc) {
  const TextSection& bs = require(doc, "bound");
  if (bs.lines.size() != 1) throw_parse_error(bs.line, 1, "bound takes one integer");
  auto bw = split_words(bs.lines[0]);
  if (bw.size() != 1) throw_parse_error(bs.lines[0].number, bs.lines[0].column, "bound takes one integer");
  const int d = to_int(bw[0], bs.lines[0].number);
  SimplicialSetBuilder b(d);
  b.set_provenance(provenance_of(doc));
  std::vector<std::unordered_map<std::string, int>> index(d + 1);
  for (const auto& line : require(doc, "simplices").lines) {
    auto [idx, names] = listing_row(line, 1);
    const int k = idx[0];
    if (k > d) throw_parse_error(line.number, line.column, "level " + std::to_string(k) + " above the bound");
    for (const auto& [col, name] : names) {
      if (index[k].count(name)) throw_parse_error(line.number, col, "duplicate simplex '" + name + "'");
      index[k][name] = b.add_simplex(k, name);
    }
  }
  auto lookup = [&](int k, const std::pair<int, std::string>& w, int line) {
    if (k < 0 || k > d) throw_parse_error(line, w.first, "level " + std::to_string(k) + " outside the bound");
    auto it = index[k].find(w.second);
    if (it == index[k].end()) {
      throw_parse_error(line, w.first, "unknown " + std::to_string(k) + "-simplex '" + w.second + "'");
    }
    return it->second;
  };
  if (const TextSection* s = doc.find("faces")) {
    for (const auto& line : s->lines) {
      auto r = table_row(line, 1);
      const int k = r.index[0];
      const int x = lookup(k, r.key, line.number);
      if (k == 0 || static_cast<int>(r.values.size()) != k + 1) {
        throw_parse_error(line.number, line.column, "a " + std::to_string(k) + "-simplex has " + std::to_string(k + 1) + " faces");
      }
      for (int i = 0; i <= k; ++i) b.set_face(k, i, x, lookup(k - 1, r.values[i], line.number));
    }
  }
  if (const TextSection* s = doc.find("degeneracies")) {
    for (const auto& line : s->lines) {
      auto r = table_row(line, 1);
      const int k = r.index[0];
      const int x = lookup(k, r.key, line.number);
      if (k >= d || static_cast<int>(r.values.size()) != k + 1) {
        throw_parse_error(line.number, line.column, "degeneracies need k < bound and k+1 entries");
      }
      for (int j = 0; j <= k; ++j) b.set_degeneracy(k, j, x, lookup(k + 1, r.values[j], line.number));
    }
  }
  return b.build();
}

SSetPtr parse_sset(std::string_view text) { return sset_from_document(parse_sections(text)); }

std::string format_sset(const TruncatedSimplicialSet& K) {
  std::ostringstream out;
  if (!K.provenance().empty()) out << "provenance:\n  " << K.provenance() << "\n";
  out << "bound:\n  " << K.bound() << "\nsimplices:\n";
  for (int k = 0; k <= K.bound(); ++k) {
    std::vector<std::string> names;
    for (int x = 0; x < static_cast<int>(K.size(k)); ++x) names.push_back(K.name(k, x));
    out << "  " << k << ":" << (names.empty() ? "" : " " + join(names)) << "\n";
  }
  if (K.bound() > 0) {
    out << "faces:\n";
    for (int k = 1; k <= K.bound(); ++k) {
      for (int x = 0; x < static_cast<int>(K.size(k)); ++x) {
        out << "  " << k << " " << K.name(k, x) << " =";
        for (int i = 0; i <= k; ++i) out << " " << K.name(k - 1, K.face(k, i, x));
        out << "\n";
      }
    }
    out << "degeneracies:\n";
    for (int k = 0; k < K.bound(); ++k) {
      for (int x = 0; x < static_cast<int>(K.size(k)); ++x) {
        out << "  " << k << " " << K.name(k, x) << " =";
        for (int j = 0; j <= k; ++j) out << " " << K.name(k + 1, K.degeneracy(k, j, x));
        out << "\n";
      }
    }
  }
  return out.str();
}

BiSSetPtr bisset_from_document(const TextDocument& doc) {
  const TextSection& bs = require(doc, "bounds");
  if (bs.lines.size() != 1) throw_parse_error(bs.line, 1, "bounds takes two integers");
  auto bw = split_words(bs.lines[0]);
  if (bw.size() != 2) throw_parse_error(bs.lines[0].number, bs.lines[0].column, "bounds takes two integers");
  const int dm = to_int(bw[0], bs.lines[0].number);
  const int dn = to_int(bw[1], bs.lines[0].number);
  BisimplicialSetBuilder b(dm, dn);
  b.set_provenance(provenance_of(doc));
  std::vector<std::vector<std::unordered_map<std::string, int>>> index(dm + 1, std::vector<std::unordered_map<std::string, int>>(dn + 1));
  for (const auto& line : require(doc, "cells").lines) {
    auto [idx, names] = listing_row(line, 2);
    const int m = idx[0], n = idx[1];
    if (m > dm || n > dn) throw_parse_error(line.number, line.column, "cell degree above the bounds");
    for (const auto& [col, name] : names) {
      if (index[m][n].count(name)) throw_parse_error(line.number, col, "duplicate cell '" + name + "'");
      index[m][n][name] = b.add_cell(m, n, name);
    }
  }
  auto lookup = [&](int m, int n, const std::pair<int, std::string>& w, int line) {
    if (m < 0 || n < 0 || m > dm || n > dn) throw_parse_error(line, w.first, "cell degree outside the bounds");
    auto it = index[m][n].find(w.second);
    if (it == index[m][n].end()) throw_parse_error(line, w.first, "unknown cell '" + w.second + "'");
    return it->second;
  };
  struct Table {
    const char* name;
    bool horizontal;
    bool face;
  };
  for (const Table t : {Table{"hfaces", true, true}, Table{"hdegeneracies", true, false}, Table{"vfaces", false, true},
                        Table{"vdegeneracies", false, false}}) {
    const TextSection* s = doc.find(t.name);
    if (!s) continue;
    for (const auto& line : s->lines) {
      auto r = table_row(line, 2);
      const int m = r.index[0], n = r.index[1];
      const int x = lookup(m, n, r.key, line.number);
      const int k = t.horizontal ? m : n;
      const int bound = t.horizontal ? dm : dn;
      if ((t.face && k == 0) || (!t.face && k >= bound) || static_cast<int>(r.values.size()) != k + 1) {
        throw_parse_error(line.number, line.column, std::string("wrong number of entries for ") + t.name);
      }
      const int step = t.face ? -1 : 1;
      for (int i = 0; i <= k; ++i) {
        const int tm = t.horizontal ? m + step : m;
        const int tn = t.horizontal ? n : n + step;
        const int y = lookup(tm, tn, r.values[i], line.number);
        if (t.horizontal && t.face) b.set_hface(m, n, i, x, y);
        if (t.horizontal && !t.face) b.set_hdegeneracy(m, n, i, x, y);
        if (!t.horizontal && t.face) b.set_vface(m, n, i, x, y);
        if (!t.horizontal && !t.face) b.set_vdegeneracy(m, n, i, x, y);
      }
    }
  }
  return b.build();
}

BiSSetPtr parse_bisset(std::string_view text) { return bisset_from_document(parse_sections(text)); }

std::string format_bisset(const TruncatedBisimplicialSet& W) {
  std::ostringstream out;
  if (!W.provenance().empty()) out << "provenance:\n  " << W.provenance() << "\n";
  out << "bounds:\n  " << W.bound_m() << " " << W.bound_n() << "\ncells:\n";
  for (int m = 0; m <= W.bound_m(); ++m) {
    for (int n = 0; n <= W.bound_n(); ++n) {
      std::vector<std::string> names;
      for (int x = 0; x < static_cast<int>(W.size(m, n)); ++x) names.push_back(W.name(m, n, x));
      out << "  " << m << " " << n << ":" << (names.empty() ? "" : " " + join(names)) << "\n";
    }
  }
  auto table = [&](const char* title, bool horizontal, bool face) {
    out << title << ":\n";
    for (int m = 0; m <= W.bound_m(); ++m) {
      for (int n = 0; n <= W.bound_n(); ++n) {
        const int k = horizontal ? m : n;
        const int bound = horizontal ? W.bound_m() : W.bound_n();
        if ((face && k == 0) || (!face && k >= bound)) continue;
        const int tm = horizontal ? m + (face ? -1 : 1) : m;
        const int tn = horizontal ? n : n + (face ? -1 : 1);
        for (int x = 0; x < static_cast<int>(W.size(m, n)); ++x) {
          out << "  " << m << " " << n << " " << W.name(m, n, x) << " =";
          for (int i = 0; i <= k; ++i) {
            int y = 0;
            if (horizontal) {
              y = face ? W.hface(m, n, i, x) : W.hdegeneracy(m, n, i, x);
            } else {
              y = face ? W.vface(m, n, i, x) : W.vdegeneracy(m, n, i, x);
            }
            out << " " << W.name(tm, tn, y);
          }
          out << "\n";
        }
      }
    }
  };
  table("hfaces", true, true);
  table("hdegeneracies", true, false);
  table("vfaces", false, true);
  table("vdegeneracies", false, false);
  return out.str();
}

}  // namespace catkit

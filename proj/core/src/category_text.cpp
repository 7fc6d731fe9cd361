#include <fstream>
#include <set>
#include <sstream>

#include "catkit/text_format.hpp"

namespace catkit {

const TextSection* TextDocument::find(std::string_view name) const {
  for (const auto& s : sections) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

void throw_parse_error(int line, int column, const std::string& message) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TextDocument parse_sections(std::string_view text) {
  TextDocument doc;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(pos, end - pos));
    pos = end + 1;
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r')) line.pop_back();
    const std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos) {
      if (end == text.size()) break;
      continue;
    }
    const int column = static_cast<int>(first) + 1;
    std::string body = line.substr(first);
    if (body.back() == ':' && body.find(' ') == std::string::npos) {
      doc.sections.push_back({body.substr(0, body.size() - 1), number, {}});
    } else {
      if (doc.sections.empty()) throw_parse_error(number, column, "content before the first section header");
      doc.sections.back().lines.push_back({number, column, body});
    }
    if (end == text.size()) break;
  }
  return doc;
}

std::vector<std::pair<int, std::string>> split_words(const TextLine& line) {
  std::vector<std::pair<int, std::string>> out;
  std::size_t i = 0;
  const std::string& s = line.text;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    if (i >= s.size()) break;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    out.emplace_back(line.column + static_cast<int>(i), s.substr(i, j - i));
    i = j;
  }
  return out;
}

namespace {

int parse_int(const TextLine& line) {
  auto w = split_words(line);
  if (w.size() != 1) throw_parse_error(line.number, line.column, "expected a single integer");
  try {
    std::size_t used = 0;
    int v = std::stoi(w[0].second, &used);
    if (used != w[0].second.size() || v < 0) throw std::invalid_argument("x");
    return v;
  } catch (const std::exception&) {
    throw_parse_error(line.number, w[0].first, "expected a non-negative integer, got '" + w[0].second + "'");
  }
}

// Splits "lhs <sep> rhs" with whitespace-separated tokens.
std::vector<std::pair<int, std::string>> expect_tokens(const TextLine& line, std::size_t count, const char* shape) {
  auto w = split_words(line);
  if (w.size() != count) throw_parse_error(line.number, line.column, std::string("expected '") + shape + "'");
  return w;
}

}  // namespace

CatPtr category_from_document(const TextDocument& doc) {
  if (auto s = doc.find("chain")) {
    if (s->lines.size() != 1) throw_parse_error(s->line, 1, "chain takes one integer");
    return Poset::chain(parse_int(s->lines[0])).to_category();
  }
  if (auto s = doc.find("divisors")) {
    if (s->lines.size() != 1) throw_parse_error(s->line, 1, "divisors takes one integer");
    const int n = parse_int(s->lines[0]);
    if (n < 1) throw_parse_error(s->lines[0].number, s->lines[0].column, "divisors needs a positive integer");
    return Poset::divisors(n).to_category();
  }
  if (auto s = doc.find("elements")) {
    std::vector<std::string> elements;
    for (const auto& l : s->lines) {
      for (auto& [col, w] : split_words(l)) elements.push_back(w);
    }
    std::vector<std::pair<std::string, std::string>> covers;
    if (auto o = doc.find("order")) {
      for (const auto& l : o->lines) {
        auto w = expect_tokens(l, 3, "a <= b");
        if (w[1].second != "<=") throw_parse_error(l.number, w[1].first, "expected '<='");
        for (int k : {0, 2}) {
          if (std::find(elements.begin(), elements.end(), w[k].second) == elements.end()) {
            throw_parse_error(l.number, w[k].first, "unknown element '" + w[k].second + "'");
          }
        }
        covers.emplace_back(w[0].second, w[2].second);
      }
    }
    try {
      return Poset::from_relation(elements, covers).to_category();
    } catch (const Error& e) {
      throw_parse_error(s->line, 1, e.detail());
    }
  }

  CategoryTable table;
  const TextSection* objects = doc.find("objects");
  if (!objects) throw_parse_error(1, 1, "missing 'objects:' section");
  std::set<std::string> object_set;
  for (const auto& l : objects->lines) {
    for (auto& [col, w] : split_words(l)) {
      if (!object_set.insert(w).second) throw_parse_error(l.number, col, "duplicate object '" + w + "'");
      table.objects.push_back(w);
    }
  }
  std::set<std::string> morphism_set;
  if (auto s = doc.find("morphisms")) {
    for (const auto& l : s->lines) {
      auto w = expect_tokens(l, 4, "f: a -> b");
      if (w[0].second.back() != ':' || w[0].second.size() < 2) throw_parse_error(l.number, w[0].first, "expected 'name:'");
      if (w[2].second != "->") throw_parse_error(l.number, w[2].first, "expected '->'");
      const std::string name = w[0].second.substr(0, w[0].second.size() - 1);
      for (int k : {1, 3}) {
        if (!object_set.count(w[k].second)) throw_parse_error(l.number, w[k].first, "unknown object '" + w[k].second + "'");
      }
      if (!morphism_set.insert(name).second) throw_parse_error(l.number, w[0].first, "duplicate morphism '" + name + "'");
      table.morphisms.push_back({name, w[1].second, w[3].second});
    }
  }
  std::set<std::string> has_identity;
  if (auto s = doc.find("identities")) {
    for (const auto& l : s->lines) {
      auto w = expect_tokens(l, 3, "a = id");
      if (w[1].second != "=") throw_parse_error(l.number, w[1].first, "expected '='");
      if (!object_set.count(w[0].second)) throw_parse_error(l.number, w[0].first, "unknown object '" + w[0].second + "'");
      if (!morphism_set.count(w[2].second)) {
        throw_parse_error(l.number, w[2].first, "unknown morphism '" + w[2].second + "'");
      }
      has_identity.insert(w[0].second);
      table.identities.emplace_back(w[0].second, w[2].second);
    }
  }
  for (const auto& o : table.objects) {
    if (has_identity.count(o)) continue;
    std::string id = "id_" + o;
    if (morphism_set.count(id)) throw_parse_error(objects->line, 1, "identity of '" + o + "' is not declared");
    table.morphisms.push_back({id, o, o});
    table.identities.emplace_back(o, id);
  }
  if (auto s = doc.find("composites")) {
    for (const auto& l : s->lines) {
      auto w = expect_tokens(l, 5, "g * f = h");
      if (w[1].second != "*") throw_parse_error(l.number, w[1].first, "expected '*'");
      if (w[3].second != "=") throw_parse_error(l.number, w[3].first, "expected '='");
      for (int k : {0, 2, 4}) {
        if (!morphism_set.count(w[k].second)) {
          throw_parse_error(l.number, w[k].first, "unknown morphism '" + w[k].second + "'");
        }
      }
      table.composites.push_back({w[0].second, w[2].second, w[4].second});
    }
  }
  return build_category(table);
}

CatPtr parse_category(std::string_view text) { return category_from_document(parse_sections(text)); }

std::string format_category(const FiniteCategory& C) {
  std::ostringstream out;
  out << "objects:\n";
  for (std::size_t a = 0; a < C.num_objects(); ++a) out << "  " << C.object_name(static_cast<Obj>(a)) << "\n";
  out << "morphisms:\n";
  for (std::size_t f = 0; f < C.num_morphisms(); ++f) {
    const auto& r = C.morphism(static_cast<Mor>(f));
    out << "  " << r.name << ": " << C.object_name(r.source) << " -> " << C.object_name(r.target) << "\n";
  }
  out << "identities:\n";
  for (std::size_t a = 0; a < C.num_objects(); ++a) {
    out << "  " << C.object_name(static_cast<Obj>(a)) << " = " << C.morphism_name(C.identity(static_cast<Obj>(a))) << "\n";
  }
  out << "composites:\n";
  for (std::size_t h = 0; h < C.num_morphisms(); ++h) {
    for (auto [g, f] : C.factorizations(static_cast<Mor>(h))) {
      if (C.is_identity(g) || C.is_identity(f)) continue;
      out << "  " << C.morphism_name(g) << " * " << C.morphism_name(f) << " = " << C.morphism_name(static_cast<Mor>(h)) << "\n";
    }
  }
  return out.str();
}

Marking marking_from_section(const CatPtr& C, const TextSection& section) {
  Marking m = Marking::identities(C);
  for (const auto& l : section.lines) {
    for (auto& [col, w] : split_words(l)) {
      if (w == "all") {
        m = Marking::all(C);
      } else if (w == "identities") {
        continue;
      } else if (auto f = C->find_morphism(w)) {
        m.insert(*f);
      } else {
        throw_parse_error(l.number, col, "unknown morphism '" + w + "' in " + section.name + " marking");
      }
    }
  }
  return m;
}

std::string format_marking(const std::string& name, const Marking& m) {
  std::ostringstream out;
  out << name << ":\n";
  for (const auto& n : m.names()) out << "  " << n << "\n";
  return out.str();
}

Functor functor_from_document(const TextDocument& doc, const CatPtr& source, const CatPtr& target) {
  const TextSection* map = doc.find("map");
  if (!map) throw_parse_error(1, 1, "missing 'map:' section");
  std::vector<Obj> objs(source->num_objects(), kNone);
  std::vector<Mor> mors(source->num_morphisms(), kNone);
  for (const auto& l : map->lines) {
    auto w = expect_tokens(l, 3, "x -> y");
    if (w[1].second != "->") throw_parse_error(l.number, w[1].first, "expected '->'");
    if (auto a = source->find_object(w[0].second)) {
      auto x = target->find_object(w[2].second);
      if (!x) throw_parse_error(l.number, w[2].first, "unknown target object '" + w[2].second + "'");
      objs[*a] = *x;
    } else if (auto f = source->find_morphism(w[0].second)) {
      auto g = target->find_morphism(w[2].second);
      if (!g) throw_parse_error(l.number, w[2].first, "unknown target morphism '" + w[2].second + "'");
      mors[*f] = *g;
    } else {
      throw_parse_error(l.number, w[0].first, "unknown source cell '" + w[0].second + "'");
    }
  }
  for (std::size_t a = 0; a < objs.size(); ++a) {
    if (objs[a] == kNone) {
      throw_parse_error(map->line, 1, "object '" + source->object_name(static_cast<Obj>(a)) + "' is not mapped");
    }
    Mor& id = mors[source->identity(static_cast<Obj>(a))];
    if (id == kNone) id = target->identity(objs[a]);
  }
  for (std::size_t f = 0; f < mors.size(); ++f) {
    if (mors[f] != kNone) continue;
    auto h = target->hom(objs[source->source(static_cast<Mor>(f))], objs[source->target(static_cast<Mor>(f))]);
    if (h.size() != 1) {
      throw_parse_error(map->line, 1, "morphism '" + source->morphism_name(static_cast<Mor>(f)) + "' is not mapped");
    }
    mors[f] = h[0];
  }
  return make_functor(source, target, std::move(objs), std::move(mors));
}

std::string format_functor(const Functor& F) {
  std::ostringstream out;
  out << "map:\n";
  for (std::size_t a = 0; a < F.on_objects.size(); ++a) {
    out << "  " << F.source->object_name(static_cast<Obj>(a)) << " -> " << F.target->object_name(F.on_objects[a]) << "\n";
  }
  for (std::size_t f = 0; f < F.on_morphisms.size(); ++f) {
    if (F.source->is_identity(static_cast<Mor>(f))) continue;
    out << "  " << F.source->morphism_name(static_cast<Mor>(f)) << " -> "
        << F.target->morphism_name(F.on_morphisms[f]) << "\n";
  }
  return out.str();
}

}  // namespace catkit

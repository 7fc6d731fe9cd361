#include <sstream>

#include "catkit/presentation.hpp"

namespace catkit {
namespace {

// a -f-> b, a -g-> c. Also read backwards as the cospan b -f-> a <-g- c.
CatPtr span_shape(bool cospan) {
  CategoryTable t;
  t.objects = {"a", "b", "c"};
  t.morphisms = {{"1a", "a", "a"}, {"1b", "b", "b"}, {"1c", "c", "c"}};
  t.identities = {{"a", "1a"}, {"b", "1b"}, {"c", "1c"}};
  if (cospan) {
    t.morphisms.insert(t.morphisms.end(), {{"f", "b", "a"}, {"g", "c", "a"}});
  } else {
    t.morphisms.insert(t.morphisms.end(), {{"f", "a", "b"}, {"g", "a", "c"}});
  }
  return build_category(t);
}

const CatPtr& shape(bool cospan) {
  static const CatPtr span = span_shape(false);
  static const CatPtr co = span_shape(true);
  return cospan ? co : span;
}

Diagram make_span(const CatPtr& C, Mor f, Mor g, bool cospan) {
  const CatPtr& S = shape(cospan);
  Obj a, b, c;
  if (cospan) {
    if (C->target(f) != C->target(g)) throw Error(ErrorKind::IllTypedComposite, "cospan legs with different targets");
    a = C->target(f), b = C->source(f), c = C->source(g);
  } else {
    if (C->source(f) != C->source(g)) throw Error(ErrorKind::IllTypedComposite, "span legs with different sources");
    a = C->source(f), b = C->target(f), c = C->target(g);
  }
  const std::vector<Obj> objs{a, b, c};
  std::vector<Mor> mors(S->num_morphisms());
  for (std::size_t m = 0; m < mors.size(); ++m) {
    const Mor k = static_cast<Mor>(m);
    if (S->is_identity(k)) {
      mors[m] = C->identity(objs[S->source(k)]);
    } else {
      mors[m] = S->morphism_name(k) == "f" ? f : g;
    }
  }
  return Functor{S, C, objs, mors};
}

std::string name(const FiniteCategory& C, Mor f) { return C.morphism_name(f); }

Verdict wide_and_closed(const Marking& m, const std::string& what) {
  if (!m.is_wide()) return Fails(what + " do not contain every identity");
  if (auto v = m.composition_violation()) return Fails(what + " not closed under composition: " + *v);
  return Holds();
}

bool same_category(const Marking& m, const CatPtr& C) { return m.category() == C; }

// Every f : FA -> Y costs one unit per candidate (i, Z, w1, w2).
Verdict app2(const Functor& F, const CofibrationPresentation& P, const CofibrationPresentation& Q, Budget& budget) {
  const auto& C = *P.category;
  const auto& D = *Q.category;
  for (std::size_t a = 0; a < C.num_objects(); ++a) {
    const Obj A = static_cast<Obj>(a);
    for (Mor f : D.out(F(A))) {
      bool found = false;
      for (Mor i : C.out(A)) {
        const Mor Fi = F.map(i);
        for (std::size_t z = 0; z < D.num_objects() && !found; ++z) {
          for (Mor w1 : D.hom(D.target(f), static_cast<Obj>(z))) {
            if (!Q.we.contains(w1)) continue;
            for (Mor w2 : D.hom(D.target(Fi), static_cast<Obj>(z))) {
              if (!budget.spend()) return Unknown("budget exhausted at " + C.object_name(A) + ", " + name(D, f));
              if (Q.we.contains(w2) && D.compose(w1, f) == D.compose(w2, Fi)) {
                found = true;
                break;
              }
            }
            if (found) break;
          }
        }
        if (found) break;
      }
      if (!found) return Fails("no square for " + name(D, f) + " out of F(" + C.object_name(A) + ")");
    }
  }
  return Holds();
}

}  // namespace

Diagram span_diagram(const CatPtr& C, Mor f, Mor g) { return make_span(C, f, g, false); }
Diagram cospan_diagram(const CatPtr& C, Mor f, Mor g) { return make_span(C, f, g, true); }

std::optional<Mor> factor_cone(const Diagram& X, const Cocone& lim, const Cocone& other) {
  const auto& C = *X.target;
  std::optional<Mor> found;
  for (Mor u : C.hom(other.apex, lim.apex)) {
    bool ok = true;
    for (std::size_t i = 0; i < X.source->num_objects() && ok; ++i) ok = C.compose(lim.legs[i], u) == other.legs[i];
    if (!ok) continue;
    if (found) return std::nullopt;
    found = u;
  }
  return found;
}

std::optional<Cocone> pushout(const CatPtr& C, Mor f, Mor g) { return find_colimit(make_span(C, f, g, false)); }

std::optional<Cocone> pullback(const CatPtr& C, Mor f, Mor g) { return find_limit(make_span(C, f, g, true)); }

bool is_initial(const FiniteCategory& C, Obj a) {
  for (std::size_t b = 0; b < C.num_objects(); ++b) {
    if (C.hom(a, static_cast<Obj>(b)).size() != 1) return false;
  }
  return true;
}

bool is_terminal(const FiniteCategory& C, Obj a) {
  for (std::size_t b = 0; b < C.num_objects(); ++b) {
    if (C.hom(static_cast<Obj>(b), a).size() != 1) return false;
  }
  return true;
}

std::optional<Obj> find_initial(const FiniteCategory& C) {
  for (std::size_t a = 0; a < C.num_objects(); ++a) {
    if (is_initial(C, static_cast<Obj>(a))) return static_cast<Obj>(a);
  }
  return std::nullopt;
}

std::optional<Obj> find_terminal(const FiniteCategory& C) {
  for (std::size_t a = 0; a < C.num_objects(); ++a) {
    if (is_terminal(C, static_cast<Obj>(a))) return static_cast<Obj>(a);
  }
  return std::nullopt;
}

bool is_homotopical(const Functor& F, const Marking& source_we, const Marking& target_we) {
  for (std::size_t m = 0; m < F.source->num_morphisms(); ++m) {
    if (source_we.contains(static_cast<Mor>(m)) && !target_we.contains(F.map(static_cast<Mor>(m)))) return false;
  }
  return true;
}

CheckReport check_cofibration_axioms(const CofibrationPresentation& P) {
  const CatPtr& Cp = P.category;
  const auto& C = *Cp;
  CheckReport report;
  if (!same_category(P.cof, Cp) || !same_category(P.we, Cp)) {
    report.push_back({"markings", Fails("markings belong to another category")});
    return report;
  }
  report.push_back({"markings", wide_and_closed(P.cof, "cofibrations")});

  {
    Verdict v = wide_and_closed(P.we, "weak equivalences");
    if (v.holds()) {
      if (auto w = two_out_of_six_violation(P.we)) v = Fails(*w);
    }
    report.push_back({"2-out-of-6", v});
  }

  {
    Verdict v = Holds();
    for (std::size_t m = 0; m < C.num_morphisms() && v.holds(); ++m) {
      const Mor f = static_cast<Mor>(m);
      if (C.is_isomorphism(f) && !(P.cof.contains(f) && P.we.contains(f))) {
        v = Fails("isomorphism " + name(C, f) + " is not an acyclic cofibration");
      }
    }
    report.push_back({"isomorphisms", v});
  }

  {
    Verdict v = Holds();
    for (std::size_t m = 0; m < C.num_morphisms() && v.holds(); ++m) {
      const Mor i = static_cast<Mor>(m);
      if (!P.cof.contains(i)) continue;
      for (Mor g : C.out(C.source(i))) {
        auto po = pushout(Cp, i, g);
        const std::string sq = name(C, i) + " along " + name(C, g);
        if (!po) {
          v = Fails("no pushout of " + sq);
          break;
        }
        const Mor j = po->legs[2];
        if (!P.cof.contains(j)) {
          v = Fails("pushout of " + sq + " is " + name(C, j) + ", not a cofibration");
          break;
        }
        if (P.we.contains(i) && !P.we.contains(j)) {
          v = Fails("pushout of acyclic " + sq + " is " + name(C, j) + ", not a weak equivalence");
          break;
        }
      }
    }
    report.push_back({"pushouts", v});
  }

  {
    Verdict v = Holds();
    if (P.initial == kNone || P.initial >= static_cast<Obj>(C.num_objects())) {
      v = find_initial(C) ? Fails("no initial object chosen") : Fails("no initial object");
    } else if (!is_initial(C, P.initial)) {
      v = Fails(C.object_name(P.initial) + " is not initial");
    } else {
      for (std::size_t b = 0; b < C.num_objects(); ++b) {
        const Mor u = C.hom(P.initial, static_cast<Obj>(b))[0];
        if (!P.cof.contains(u)) {
          v = Fails(C.object_name(static_cast<Obj>(b)) + " is not cofibrant");
          break;
        }
      }
    }
    report.push_back({"initial", v});
  }

  {
    Verdict v = Holds();
    for (std::size_t m = 0; m < C.num_morphisms() && v.holds(); ++m) {
      const Mor f = static_cast<Mor>(m);
      bool found = false;
      for (auto [w, c] : C.factorizations(f)) {
        if (P.cof.contains(c) && P.we.contains(w)) {
          found = true;
          break;
        }
      }
      if (!found) v = Fails(name(C, f) + " has no (cofibration, weak equivalence) factorization");
    }
    report.push_back({"factorization", v});
  }
  return report;
}

std::optional<std::string> lifting_violation(const FiniteCategory& C, Mor l, Mor r) {
  const Obj A = C.source(l), B = C.target(l), X = C.source(r), Y = C.target(r);
  for (Mor u : C.hom(A, X)) {
    for (Mor v : C.hom(B, Y)) {
      if (C.compose(r, u) != C.compose(v, l)) continue;
      bool lifted = false;
      for (Mor h : C.hom(B, X)) {
        if (C.compose(h, l) == u && C.compose(r, h) == v) {
          lifted = true;
          break;
        }
      }
      if (!lifted) {
        return "square (" + C.morphism_name(l) + ", " + C.morphism_name(r) + ", " + C.morphism_name(u) + ", " +
               C.morphism_name(v) + ") has no diagonal";
      }
    }
  }
  return std::nullopt;
}

CheckReport check_model_axioms(const ModelPresentation& M) {
  CheckReport report = check_cofibration_axioms(M.base);
  const CatPtr& Cp = M.category();
  const auto& C = *Cp;
  const auto& cof = M.base.cof;
  const auto& we = M.base.we;
  if (!same_category(M.fib, Cp)) {
    report.push_back({"fibrations", Fails("fibration marking belongs to another category")});
    return report;
  }
  {
    Verdict v = wide_and_closed(M.fib, "fibrations");
    for (std::size_t m = 0; m < C.num_morphisms() && v.holds(); ++m) {
      const Mor f = static_cast<Mor>(m);
      if (C.is_isomorphism(f) && !M.fib.contains(f)) v = Fails("isomorphism " + name(C, f) + " is not a fibration");
    }
    report.push_back({"fibrations", v});
  }
  {
    Verdict v = Holds();
    for (std::size_t m = 0; m < C.num_morphisms() && v.holds(); ++m) {
      const Mor p = static_cast<Mor>(m);
      if (!M.fib.contains(p)) continue;
      for (Mor g : C.in(C.target(p))) {
        auto pb = pullback(Cp, p, g);
        const std::string sq = name(C, p) + " along " + name(C, g);
        if (!pb) {
          v = Fails("no pullback of " + sq);
          break;
        }
        const Mor q = pb->legs[2];
        if (!M.fib.contains(q)) {
          v = Fails("pullback of " + sq + " is " + name(C, q) + ", not a fibration");
          break;
        }
        if (we.contains(p) && !we.contains(q)) {
          v = Fails("pullback of acyclic " + sq + " is " + name(C, q) + ", not a weak equivalence");
          break;
        }
      }
    }
    report.push_back({"pullbacks", v});
  }
  {
    Verdict v = Holds();
    if (M.terminal == kNone || M.terminal >= static_cast<Obj>(C.num_objects())) {
      v = Fails("no terminal object chosen");
    } else if (!is_terminal(C, M.terminal)) {
      v = Fails(C.object_name(M.terminal) + " is not terminal");
    }
    report.push_back({"terminal", v});
  }
  {
    Verdict v = Holds();
    if (M.acyclic_cof_fib.size() != C.num_morphisms() || M.cof_acyclic_fib.size() != C.num_morphisms()) {
      v = Fails("factorization tables do not cover every morphism");
    }
    for (std::size_t m = 0; m < C.num_morphisms() && v.holds(); ++m) {
      const Mor f = static_cast<Mor>(m);
      const auto& a = M.acyclic_cof_fib[m];
      const auto& b = M.cof_acyclic_fib[m];
      if (!a) {
        v = Fails("no (acyclic cofibration, fibration) entry for " + name(C, f));
      } else if (C.target(a->first) != C.source(a->second) || C.compose(a->second, a->first) != f ||
                 !cof.contains(a->first) || !we.contains(a->first) || !M.fib.contains(a->second)) {
        v = Fails("invalid (acyclic cofibration, fibration) entry for " + name(C, f));
      } else if (!b) {
        v = Fails("no (cofibration, acyclic fibration) entry for " + name(C, f));
      } else if (C.target(b->first) != C.source(b->second) || C.compose(b->second, b->first) != f ||
                 !cof.contains(b->first) || !M.fib.contains(b->second) || !we.contains(b->second)) {
        v = Fails("invalid (cofibration, acyclic fibration) entry for " + name(C, f));
      }
    }
    report.push_back({"factorization tables", v});
  }
  const std::size_t n = C.num_morphisms();
  auto acof = [&](Mor f) { return cof.contains(f) && we.contains(f); };
  auto afib = [&](Mor f) { return M.fib.contains(f) && we.contains(f); };
  {
    Verdict v = Holds();
    for (std::size_t l = 0; l < n && v.holds(); ++l) {
      for (std::size_t r = 0; r < n; ++r) {
        const Mor L = static_cast<Mor>(l), R = static_cast<Mor>(r);
        const bool pair1 = acof(L) && M.fib.contains(R);
        const bool pair2 = cof.contains(L) && afib(R);
        if (!pair1 && !pair2) continue;
        if (auto w = lifting_violation(C, L, R)) {
          v = Fails(*w);
          break;
        }
      }
    }
    report.push_back({"lifting", v});
  }
  {
    // cof = LLP(acyclic fibrations), fib = RLP(acyclic cofibrations).
    Verdict v = Holds();
    for (std::size_t l = 0; l < n && v.holds(); ++l) {
      const Mor f = static_cast<Mor>(l);
      if (!cof.contains(f)) {
        bool blocked = false;
        for (std::size_t r = 0; r < n && !blocked; ++r) {
          blocked = afib(static_cast<Mor>(r)) && lifting_violation(C, f, static_cast<Mor>(r));
        }
        if (!blocked) v = Fails(name(C, f) + " lifts against every acyclic fibration but is not a cofibration");
      }
      if (v.holds() && !M.fib.contains(f)) {
        bool blocked = false;
        for (std::size_t r = 0; r < n && !blocked; ++r) {
          blocked = acof(static_cast<Mor>(r)) && lifting_violation(C, static_cast<Mor>(r), f);
        }
        if (!blocked) v = Fails(name(C, f) + " lifts against every acyclic cofibration but is not a fibration");
      }
    }
    report.push_back({"closedness", v});
  }
  return report;
}

CofibrationPresentation lattice_cofcat(const Poset& L, WeMode mode) {
  if (!L.is_lattice()) throw Error(ErrorKind::NotALattice, "poset has a pair without join or meet");
  CofibrationPresentation P;
  P.category = L.to_category();
  P.cof = Marking::all(P.category);
  P.we = mode == WeMode::All ? Marking::all(P.category) : Marking::identities(P.category);
  for (std::size_t a = 0; a < L.size(); ++a) {
    bool bottom = true;
    for (std::size_t b = 0; b < L.size() && bottom; ++b) bottom = L.leq(static_cast<int>(a), static_cast<int>(b));
    if (bottom) P.initial = static_cast<Obj>(a);
  }
  P.provenance = std::string("lattice, we = ") + (mode == WeMode::All ? "all" : "identities");
  if (auto v = summarize(check_cofibration_axioms(P)); !v.holds()) {
    throw Error(ErrorKind::PreconditionViolated, "lattice presentation failed its axioms: " + v.witness);
  }
  return P;
}

ModelPresentation lattice_model(const Poset& L, WeMode mode) {
  ModelPresentation M;
  M.base = lattice_cofcat(L, mode);
  const auto& C = *M.category();
  M.fib = mode == WeMode::All ? Marking::identities(M.category()) : Marking::all(M.category());
  M.terminal = *find_terminal(C);
  for (std::size_t m = 0; m < C.num_morphisms(); ++m) {
    const Mor f = static_cast<Mor>(m);
    const Mor id_a = C.identity(C.source(f)), id_b = C.identity(C.target(f));
    // we = identities: f = f ∘ id is (acyclic cof, fib); we = all: f = id ∘ f.
    if (mode == WeMode::Identities) {
      M.acyclic_cof_fib.push_back(Factorization{id_a, f});
    } else {
      M.acyclic_cof_fib.push_back(Factorization{f, id_b});
    }
    M.cof_acyclic_fib.push_back(Factorization{f, id_b});
  }
  M.base.provenance = "lattice model, we = " + std::string(mode == WeMode::All ? "all" : "identities");
  return M;
}

std::size_t fill_factorizations(ModelPresentation& M) {
  const auto& C = *M.category();
  const auto& cof = M.base.cof;
  const auto& we = M.base.we;
  M.acyclic_cof_fib.resize(C.num_morphisms());
  M.cof_acyclic_fib.resize(C.num_morphisms());
  std::size_t missing = 0;
  for (std::size_t m = 0; m < C.num_morphisms(); ++m) {
    for (auto [p, i] : C.factorizations(static_cast<Mor>(m))) {
      if (!M.acyclic_cof_fib[m] && cof.contains(i) && we.contains(i) && M.fib.contains(p)) {
        M.acyclic_cof_fib[m] = Factorization{i, p};
      }
      if (!M.cof_acyclic_fib[m] && cof.contains(i) && M.fib.contains(p) && we.contains(p)) {
        M.cof_acyclic_fib[m] = Factorization{i, p};
      }
    }
    missing += !M.acyclic_cof_fib[m];
    missing += !M.cof_acyclic_fib[m];
  }
  return missing;
}

ProductPresentation product_presentation(const CofibrationPresentation& P, const CofibrationPresentation& Q) {
  auto prod = product(P.category, Q.category);
  ProductPresentation out;
  auto& R = out.presentation;
  R.category = prod.category;
  std::vector<char> cof(prod.category->num_morphisms()), we(prod.category->num_morphisms());
  for (std::size_t m = 0; m < cof.size(); ++m) {
    const Mor a = prod.first.map(static_cast<Mor>(m)), b = prod.second.map(static_cast<Mor>(m));
    cof[m] = P.cof.contains(a) && Q.cof.contains(b);
    we[m] = P.we.contains(a) && Q.we.contains(b);
  }
  R.cof = Marking(prod.category, cof);
  R.we = Marking(prod.category, we);
  R.initial = prod.category->object("(" + P.category->object_name(P.initial) + "," +
                                    Q.category->object_name(Q.initial) + ")");
  R.provenance = "product of (" + P.provenance + ") and (" + Q.provenance + ")";
  out.first = prod.first;
  out.second = prod.second;
  return out;
}

// Text -----------------------------------------------------------------------

namespace {

Obj object_section(const CatPtr& C, const TextSection& s) {
  if (s.lines.size() != 1) throw_parse_error(s.line, 1, "'" + s.name + ":' takes exactly one object");
  auto words = split_words(s.lines[0]);
  if (words.size() != 1) throw_parse_error(s.lines[0].number, s.lines[0].column, "expected one object name");
  auto a = C->find_object(words[0].second);
  if (!a) throw_parse_error(s.lines[0].number, words[0].first, "unknown object '" + words[0].second + "'");
  return *a;
}

Marking marking_or(const CatPtr& C, const TextDocument& doc, const char* section, bool all) {
  if (const TextSection* s = doc.find(section)) return marking_from_section(C, *s);
  return all ? Marking::all(C) : Marking::identities(C);
}

}  // namespace

// Absent sections default to cof = all, we = identities, fib = all.
CofibrationPresentation presentation_from_document(const TextDocument& doc) {
  CofibrationPresentation P;
  P.category = category_from_document(doc);
  P.cof = marking_or(P.category, doc, "cof", true);
  P.we = marking_or(P.category, doc, "we", false);
  if (const TextSection* s = doc.find("initial")) {
    P.initial = object_section(P.category, *s);
  } else if (auto a = find_initial(*P.category)) {
    P.initial = *a;
  }
  if (const TextSection* s = doc.find("provenance"); s && !s->lines.empty()) P.provenance = s->lines[0].text;
  return P;
}

CofibrationPresentation parse_presentation(std::string_view text) { return presentation_from_document(parse_sections(text)); }

ModelPresentation model_from_document(const TextDocument& doc) {
  ModelPresentation M;
  M.base = presentation_from_document(doc);
  const CatPtr& C = M.category();
  M.fib = marking_or(C, doc, "fib", true);
  if (const TextSection* s = doc.find("terminal")) {
    M.terminal = object_section(C, *s);
  } else if (auto a = find_terminal(*C)) {
    M.terminal = *a;
  }
  M.acyclic_cof_fib.assign(C->num_morphisms(), std::nullopt);
  M.cof_acyclic_fib.assign(C->num_morphisms(), std::nullopt);
  bool fill = false;
  if (const TextSection* s = doc.find("factor")) {
    for (const auto& l : s->lines) {
      auto w = split_words(l);
      if (w.size() == 1 && w[0].second == "auto") {
        fill = true;
        continue;
      }
      if (w.size() != 6 || w[2].second != "=" || w[4].second != "*") {
        throw_parse_error(l.number, l.column, "expected 'acof f = p * i' or 'afib f = p * i'");
      }
      if (w[0].second != "acof" && w[0].second != "afib") {
        throw_parse_error(l.number, w[0].first, "unknown table '" + w[0].second + "'");
      }
      Mor m[3];
      const std::size_t at[3] = {1, 3, 5};
      for (int k = 0; k < 3; ++k) {
        auto f = C->find_morphism(w[at[k]].second);
        if (!f) throw_parse_error(l.number, w[at[k]].first, "unknown morphism '" + w[at[k]].second + "'");
        m[k] = *f;
      }
      if (C->target(m[2]) != C->source(m[1]) || C->compose(m[1], m[2]) != m[0]) {
        throw_parse_error(l.number, w[1].first, "factors do not compose to " + w[1].second);
      }
      auto& table = w[0].second == "acof" ? M.acyclic_cof_fib : M.cof_acyclic_fib;
      table[m[0]] = Factorization{m[2], m[1]};
    }
  }
  if (fill) fill_factorizations(M);
  return M;
}

ModelPresentation parse_model(std::string_view text) { return model_from_document(parse_sections(text)); }

std::string format_presentation(const CofibrationPresentation& P) {
  std::ostringstream out;
  if (!P.provenance.empty()) out << "provenance:\n  " << P.provenance << "\n";
  out << format_category(*P.category) << format_marking("cof", P.cof) << format_marking("we", P.we);
  if (P.initial != kNone) out << "initial:\n  " << P.category->object_name(P.initial) << "\n";
  return out.str();
}

std::string format_model(const ModelPresentation& M) {
  const auto& C = *M.category();
  std::ostringstream out;
  out << format_presentation(M.base) << format_marking("fib", M.fib);
  if (M.terminal != kNone) out << "terminal:\n  " << C.object_name(M.terminal) << "\n";
  out << "factor:\n";
  for (std::size_t m = 0; m < M.acyclic_cof_fib.size(); ++m) {
    if (const auto& e = M.acyclic_cof_fib[m]) {
      out << "  acof " << C.morphism_name(static_cast<Mor>(m)) << " = " << C.morphism_name(e->second) << " * "
          << C.morphism_name(e->first) << "\n";
    }
  }
  for (std::size_t m = 0; m < M.cof_acyclic_fib.size(); ++m) {
    if (const auto& e = M.cof_acyclic_fib[m]) {
      out << "  afib " << C.morphism_name(static_cast<Mor>(m)) << " = " << C.morphism_name(e->second) << " * "
          << C.morphism_name(e->first) << "\n";
    }
  }
  return out.str();
}

// Functors between presentations --------------------------------------------

CheckReport exactness_report(const Functor& F, const CofibrationPresentation& P, const CofibrationPresentation& Q) {
  const CatPtr& Cp = P.category;
  const CatPtr& Dp = Q.category;
  const auto& C = *Cp;
  const auto& D = *Dp;
  CheckReport report;
  Verdict cof = Holds(), acof = Holds();
  for (std::size_t m = 0; m < C.num_morphisms(); ++m) {
    const Mor f = static_cast<Mor>(m);
    if (!P.cof.contains(f)) continue;
    if (cof.holds() && !Q.cof.contains(F.map(f))) cof = Fails(name(C, f) + " goes to " + name(D, F.map(f)));
    if (acof.holds() && P.we.contains(f) && !(Q.cof.contains(F.map(f)) && Q.we.contains(F.map(f)))) {
      acof = Fails(name(C, f) + " goes to " + name(D, F.map(f)));
    }
  }
  report.push_back({"cofibrations", cof});
  report.push_back({"acyclic cofibrations", acof});

  Verdict po_v = Holds();
  for (std::size_t m = 0; m < C.num_morphisms() && po_v.holds(); ++m) {
    const Mor i = static_cast<Mor>(m);
    if (!P.cof.contains(i)) continue;
    for (Mor g : C.out(C.source(i))) {
      auto po = pushout(Cp, i, g);
      if (!po) continue;  // not a presentation; reported by the axiom checker
      const std::string sq = name(C, i) + " along " + name(C, g);
      const Diagram image = span_diagram(Dp, F.map(i), F.map(g));
      auto target = find_colimit(image);
      if (!target) {
        po_v = Fails("no pushout of the image of " + sq);
        break;
      }
      Cocone mapped{F(po->apex), {F.map(po->legs[0]), F.map(po->legs[1]), F.map(po->legs[2])}};
      auto u = factor_cocone(image, *target, mapped);
      if (!u || !D.is_isomorphism(*u)) {
        po_v = Fails("pushout of " + sq + " is not preserved");
        break;
      }
    }
  }
  report.push_back({"pushouts", po_v});
  report.push_back({"initial", is_initial(D, F(P.initial))
                                   ? Holds()
                                   : Fails(D.object_name(F(P.initial)) + " is not initial")});
  return report;
}

Verdict is_exact(const Functor& F, const CofibrationPresentation& P, const CofibrationPresentation& Q) {
  return summarize(exactness_report(F, P, Q));
}

ApproximationResult approximation_check(const Functor& F, const CofibrationPresentation& P,
                                        const CofibrationPresentation& Q, Budget& budget) {
  ApproximationResult r;
  const auto& C = *P.category;
  for (std::size_t m = 0; m < C.num_morphisms() && r.app1.holds(); ++m) {
    const Mor f = static_cast<Mor>(m);
    if (Q.we.contains(F.map(f)) && !P.we.contains(f)) {
      r.app1 = Fails(name(C, f) + " is not a weak equivalence but its image is");
    }
  }
  r.app2 = app2(F, P, Q, budget);
  return r;
}

ApproximationResult approximation_check(const Functor& F, const CofibrationPresentation& P,
                                        const CofibrationPresentation& Q, std::uint64_t budget) {
  Budget b(budget);
  return approximation_check(F, P, Q, b);
}

CheckReport is_fibration_of_cofcats(const Functor& F, const CofibrationPresentation& P,
                                    const CofibrationPresentation& Q, std::uint64_t budget) {
  const auto& C = *P.category;
  const auto& D = *Q.category;
  CheckReport report;
  auto acof_c = [&](Mor f) { return P.cof.contains(f) && P.we.contains(f); };
  auto acof_d = [&](Mor f) { return Q.cof.contains(f) && Q.we.contains(f); };

  {
    Budget b(budget);
    Verdict v = Holds();
    for (std::size_t a = 0; a < C.num_objects() && v.holds(); ++a) {
      const Obj A = static_cast<Obj>(a);
      for (Mor iso : D.out(F(A))) {
        if (!D.is_isomorphism(iso)) continue;
        bool found = false;
        for (Mor u : C.out(A)) {
          if (!b.spend()) {
            v = Unknown("budget exhausted lifting " + name(D, iso));
            break;
          }
          if (C.is_isomorphism(u) && F.map(u) == iso) {
            found = true;
            break;
          }
        }
        if (!v.holds()) break;
        if (!found) {
          v = Fails("isomorphism " + name(D, iso) + " out of F(" + C.object_name(A) + ") has no lift");
          break;
        }
      }
    }
    report.push_back({"isofibration", v});
  }

  {
    Budget b(budget);
    Verdict v = Holds();
    for (std::size_t m = 0; m < C.num_morphisms() && v.holds(); ++m) {
      const Mor f = static_cast<Mor>(m);
      for (auto [t, j] : D.factorizations(F.map(f))) {
        if (!Q.cof.contains(j) || !Q.we.contains(t)) continue;
        bool found = false;
        for (auto [s, i] : C.factorizations(f)) {
          if (!b.spend()) {
            v = Unknown("budget exhausted at " + name(C, f));
            break;
          }
          if (P.cof.contains(i) && P.we.contains(s) && F.map(i) == j && F.map(s) == t) {
            found = true;
            break;
          }
        }
        if (!v.holds()) break;
        if (!found) {
          v = Fails("factorization (" + name(D, j) + ", " + name(D, t) + ") of F(" + name(C, f) + ") has no lift");
          break;
        }
      }
    }
    report.push_back({"factorization lift", v});
  }

  {
    Budget b(budget);
    Verdict v = Holds();
    for (std::size_t m = 0; m < C.num_morphisms() && v.holds(); ++m) {
      const Mor f = static_cast<Mor>(m);
      const Mor Pf = F.map(f);
      const Obj A = C.source(f), B = C.target(f);
      for (Mor j : D.out(F(A))) {
        if (!Q.cof.contains(j)) continue;
        for (Mor vv : D.out(F(B))) {
          if (!acof_d(vv)) continue;
          for (Mor t : D.hom(D.target(j), D.target(vv))) {
            if (!Q.we.contains(t) || D.compose(t, j) != D.compose(vv, Pf)) continue;
            bool found = false;
            for (Mor i : C.out(A)) {
              if (!P.cof.contains(i) || F.map(i) != j) continue;
              for (Mor u : C.out(B)) {
                if (!acof_c(u) || F.map(u) != vv) continue;
                for (Mor s : C.hom(C.target(i), C.target(u))) {
                  if (!b.spend()) {
                    v = Unknown("budget exhausted at " + name(C, f));
                    break;
                  }
                  if (P.we.contains(s) && F.map(s) == t && C.compose(s, i) == C.compose(u, f)) {
                    found = true;
                    break;
                  }
                }
                if (found || !v.holds()) break;
              }
              if (found || !v.holds()) break;
            }
            if (!v.holds()) break;
            if (!found) {
              v = Fails("square (" + name(D, j) + ", " + name(D, t) + ", " + name(D, vv) + ") over " + name(C, f) +
                        " has no lift");
              break;
            }
          }
          if (!v.holds()) break;
        }
        if (!v.holds()) break;
      }
    }
    report.push_back({"square lift", v});
  }
  return report;
}

}  // namespace catkit

#include "catkit_tools/commands.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>

#include "catkit/constructive.hpp"
#include "catkit/ex.hpp"
#include "catkit/frames.hpp"
#include "catkit/lifting.hpp"
#include "catkit/sset_text.hpp"
#include "catkit_tools/acceptance.hpp"
#include "catkit_tools/fixtures.hpp"

namespace catkit::tools {
namespace {

namespace fs = std::filesystem;

using Handler = void (*)(const RunConfig&, Report&);

std::string base(const std::string& path) { return fs::path(path).filename().string(); }

const std::string& input(const RunConfig& c, std::size_t k = 0) {
  if (c.inputs.size() <= k) {
    throw Error(ErrorKind::PreconditionViolated, c.command + " needs " + std::to_string(k + 1) + " input file(s)");
  }
  return c.inputs[k];
}

void positive(int v, const char* flag, int least = 0) {
  if (v < least) throw Error(ErrorKind::PreconditionViolated, std::string(flag) + " must be at least " + std::to_string(least));
}

CofibrationPresentation presentation(const RunConfig& c, std::size_t k = 0) {
  return parse_presentation(read_file(input(c, k)));
}

Verdict check(bool ok, const std::string& witness = "does not hold") { return ok ? Holds() : Fails(witness); }

MarkedCategory marked(const CofibrationPresentation& P) { return {P.category, P.we}; }

void count(Report& r, std::string name, std::size_t v) { r.counts.push_back({std::move(name), static_cast<long long>(v)}); }

void add_checks(Report& r, const CheckReport& rep, const std::string& prefix = {}) {
  for (const auto& c : rep) r.checks.push_back({prefix + c.name, c.verdict});
}

void degree_counts(Report& r, const std::string& what, const DegreeFunction& deg) {
  std::map<int, std::size_t> by;
  for (int d : deg) ++by[d];
  for (const auto& [d, n] : by) count(r, what + " degree " + std::to_string(d), n);
}

void level_counts(Report& r, const std::string& what, const TruncatedSimplicialSet& K) {
  for (int k = 0; k <= K.bound(); ++k) {
    count(r, what + " level " + std::to_string(k), K.size(k));
    count(r, what + " level " + std::to_string(k) + " nondegenerate", K.count_nondegenerate(k));
  }
}

// Categories -----------------------------------------------------------------

void check_cat(const RunConfig& c, Report& r) {
  auto C = category_from_document(parse_sections(read_file(input(c))));
  r.checks.push_back({"category laws", Holds()});
  count(r, "objects", C->num_objects());
  count(r, "morphisms", C->num_morphisms());
  count(r, "thin", C->is_thin());
  auto d = assign_degrees(C);
  count(r, "direct", d.verdict.holds());
  if (d.verdict.holds()) degree_counts(r, "objects", d.degree);
}

void check_cofcat(const RunConfig& c, Report& r) {
  auto P = presentation(c);
  r.provenance.push_back(P.provenance);
  add_checks(r, check_cofibration_axioms(P));
  count(r, "objects", P.category->num_objects());
  count(r, "cofibrations", P.cof.count());
  count(r, "weak equivalences", P.we.count());
}

void check_model(const RunConfig& c, Report& r) {
  auto M = parse_model(read_file(input(c)));
  r.provenance.push_back(M.base.provenance);
  add_checks(r, check_model_axioms(M));
  count(r, "objects", M.category()->num_objects());
  count(r, "fibrations", M.fib.count());
}

void check_marked_direct(Report& r, const MarkedDirectCategory& D) {
  r.checks.push_back({"direct", check_direct(*D.category, D.degree)});
  auto v = two_out_of_six_violation(D.we);
  r.checks.push_back({"marking 2-out-of-6", v ? Fails(*v) : Holds()});
  count(r, "objects", D.category->num_objects());
  count(r, "morphisms", D.category->num_morphisms());
  count(r, "marked", D.we.count());
  degree_counts(r, "objects", D.degree);
}

void d_cmd(const RunConfig& c, Report& r) {
  positive(c.deg, "--deg");
  auto P = presentation(c);
  auto D = d_of_category(marked(P), c.deg);
  check_marked_direct(r, D.elements.direct);
  r.dump = format_category(*D.elements.category()) + format_marking("we", D.elements.direct.we);
}

void sd_cmd(const RunConfig& c, Report& r) {
  auto P = presentation(c);
  if (!P.category->is_thin()) throw Error(ErrorKind::NotThin, "sd needs a poset");
  auto S = sd_poset(poset_of(*P.category));
  check_marked_direct(r, S.direct);
  r.checks.push_back({"max-created = inclusion-created",
                      check(Marking::created_by(S.inclusion, S.d.elements.direct.we) == S.direct.we)});
  r.dump = format_category(*S.direct.category) + format_marking("we", S.direct.we);
}

void dbar_cmd(const RunConfig& c, Report& r) {
  positive(c.s, "--s");
  positive(c.t, "--t");
  auto P = presentation(c);
  auto D = dbar(marked(P), c.s, c.t);
  r.checks.push_back({"Reedy structure", check_reedy_structure(D.reedy)});
  count(r, "objects", D.category->num_objects());
  count(r, "morphisms", D.category->num_morphisms());
  count(r, "faces", D.reedy.faces.count());
  count(r, "degeneracies", D.reedy.degeneracies.count());
  count(r, "marked", D.we.count());
  r.dump = format_category(*D.category) + format_marking("we", D.we);
}

// Simplicial -------------------------------------------------------------------

// A .sset file, or the nerve of a category file.
SSetPtr simplicial_input(const RunConfig& c, int bound) {
  const auto& path = input(c);
  if (fs::path(path).extension() == ".sset") return parse_sset(read_file(path));
  return nerve(category_from_document(parse_sections(read_file(path))), bound);
}

void ex_cmd(const RunConfig& c, Report& r) {
  positive(c.dim, "--dim");
  positive(c.deg, "--deg");
  auto K = simplicial_input(c, c.dim);
  if (K->bound() < c.dim) throw Error(ErrorKind::BoundMismatch, "input is truncated below --dim");
  auto E = ex_functor(truncate(K, c.dim), c.dim, c.deg, c.cap);
  auto v = simplicial_map_violation(E.unit);
  r.checks.push_back({"unit is simplicial", v ? Fails(*v) : Holds()});
  level_counts(r, "Ex", *E.ex);
  r.dump = format_sset(*E.ex);
}

void nf_cmd(const RunConfig& c, Report& r) {
  positive(c.dim, "--dim");
  positive(c.deg, "--deg");
  auto P = presentation(c);
  auto N = nf_truncated(P, c.dim, c.deg, c.cap);
  r.provenance.push_back(N.source);
  r.checks.push_back({"simplicial identities", Holds()});
  if (c.dim >= 2) {
    Budget b(c.budget);
    r.checks.push_back({"inner horns up to " + std::to_string(std::min(c.dim, 3)),
                        is_quasicategory_upto(N.complex, std::min(c.dim, 3), b)});
  }
  level_counts(r, "Nf", *N.complex);
  r.dump = format_sset(*N.complex);
}

void bold_nf_cmd(const RunConfig& c, Report& r) {
  positive(c.dim, "--dim");
  positive(c.n, "--n");
  positive(c.deg, "--deg");
  auto P = presentation(c);
  auto B = bold_nf(P, c.dim, c.n, c.deg, c.cap);
  auto N = nf_truncated(P, c.dim, c.deg, c.cap);
  auto r0 = bold_row_zero(B, N);
  auto v = simplicial_map_violation(r0);
  r.checks.push_back({"row 0 isomorphic to Nf", v ? Fails(*v) : check(is_levelwise_bijective(r0), "row 0 map is not bijective")});
  for (int m = 0; m <= c.dim; ++m) {
    for (int n = 0; n <= c.n; ++n) count(r, "cells " + std::to_string(m) + "," + std::to_string(n), B.object->size(m, n));
  }
  r.dump = format_bisset(*B.object);
}

void classify_cmd(const RunConfig& c, Report& r) {
  positive(c.dim, "--dim");
  positive(c.n, "--n");
  auto P = presentation(c);
  auto D = classification_diagram(marked(P), c.dim, c.n, c.cap);
  r.checks.push_back({"bisimplicial identities", Holds()});
  for (int m = 0; m <= c.dim; ++m) {
    for (int n = 0; n <= c.n; ++n) count(r, "cells " + std::to_string(m) + "," + std::to_string(n), D.object->size(m, n));
  }
  r.dump = format_bisset(*D.object);
}

void mnf_cmd(const RunConfig& c, Report& r) {
  positive(c.dim, "--dim");
  positive(c.s, "--s");
  positive(c.t, "--t");
  auto M = parse_model(read_file(input(c)));
  auto N = mnf(M, c.dim, c.s, c.t, c.cap);
  r.provenance.push_back(N.source);
  level_counts(r, "Mnf", *N.complex);
  if (c.t >= 1) {
    auto nf = nf_truncated(M.base, c.dim, c.s, c.cap);
    r.checks.push_back({"restriction to Nf", istar_comparison(N, nf).verdict});
  }
  r.dump = format_sset(*N.complex);
}

void lift_cmd(const RunConfig& c, Report& r) {
  positive(c.dim, "--dim", 2);
  auto K = simplicial_input(c, c.dim);
  if (K->bound() < c.dim) throw Error(ErrorKind::BoundMismatch, "input is truncated below --dim");
  Budget b(c.budget);
  r.checks.push_back({"inner horns up to " + std::to_string(c.dim), is_quasicategory_upto(K, c.dim, b)});
  if (!b.exhausted()) {
    for (const auto& h : inner_horn_filler_counts(K, c.dim)) {
      const std::string at = "horn " + std::to_string(h.m) + "," + std::to_string(h.i);
      count(r, at + " maps", h.horns);
      count(r, at + " min fillers", h.min_fillers);
      count(r, at + " max fillers", h.max_fillers);
    }
  }
}

// Diagrams ---------------------------------------------------------------------

// Every f : X -> Y of Reedy cofibrant diagrams on Sd[1], seeded on the
// vertices by the acyclic cofibration / fibration table.
void bisieve_lift_cmd(const RunConfig& c, Report& r) {
  auto M = parse_model(read_file(input(c)));
  r.provenance.push_back(M.base.provenance);
  auto S = sd_poset(Poset::chain(1));
  const CatPtr& J = S.direct.category;
  ReedyShape R = ReedyShape::direct(J, S.direct.degree);
  std::vector<Obj> deg0;
  for (std::size_t a = 0; a < J->num_objects(); ++a) {
    if (S.direct.degree[a] == 0) deg0.push_back(static_cast<Obj>(a));
  }
  auto I = full_subcategory(J, deg0);
  auto diagrams = homotopical_diagrams({J, Marking::identities(J), S.direct.degree}, M.base, true, c.cap);
  const auto& C = *M.category();
  std::size_t pairs = 0, lifted = 0;
  std::vector<Verdict> all;
  for (const auto& X : diagrams) {
    for (const auto& Y : diagrams) {
      for (const auto& f : transformations(X, Y, c.cap)) {
        if (pairs++ >= c.cap) throw Error(ErrorKind::EnumerationLimitExceeded, "more than --cap squares");
        PartialFactorization given;
        given.middle = compose(X, I.functor);
        std::vector<Mor> first, second;
        for (std::size_t a = 0; a < deg0.size(); ++a) {
          const Mor fa = f.components[deg0[a]];
          const auto& fac = M.acyclic_cof_fib[fa];
          if (!fac) throw Error(ErrorKind::FactorizationMissing, C.morphism_name(fa));
          given.middle.on_objects[a] = C.target(fac->first);
          first.push_back(fac->first);
          second.push_back(fac->second);
        }
        for (std::size_t u = 0; u < I.category->num_morphisms(); ++u) {
          given.middle.on_morphisms[u] = C.identity(given.middle.on_objects[I.category->source(static_cast<Mor>(u))]);
        }
        given.first = make_transformation(compose(X, I.functor), given.middle, first);
        given.second = make_transformation(given.middle, compose(Y, I.functor), second);
        auto res = bisieve_lift(M, R, I.functor, f, given);
        auto v = summarize(res.report);
        if (!v.holds()) v.witness = diagram_name(X) + " -> " + diagram_name(Y) + ": " + v.witness;
        lifted += res.factorization && v.holds();
        all.push_back(v);
      }
    }
  }
  r.checks.push_back({"every lift certified", conjoin(all)});
  count(r, "Reedy cofibrant diagrams", diagrams.size());
  count(r, "squares", pairs);
  count(r, "certified lifts", lifted);
}

void approx_cmd(const RunConfig& c, Report& r) {
  auto P = presentation(c);
  auto S = sd_poset(Poset::chain(1));
  auto reedy = diagram_cofcat(P, S.direct, DiagramVariant::Reedy, c.cap);
  auto lev = diagram_cofcat(P, S.direct, DiagramVariant::Levelwise, c.cap);
  auto F = diagram_inclusion(reedy, lev);
  add_checks(r, exactness_report(F, reedy.presentation, lev.presentation), "exact: ");
  auto a = approximation_check(F, reedy.presentation, lev.presentation, c.budget);
  r.checks.push_back({"App1", a.app1});
  r.checks.push_back({"App2", a.app2});
  count(r, "Reedy diagrams", reedy.objects.size());
  count(r, "levelwise diagrams", lev.objects.size());
}

void exact_cmd(const RunConfig& c, Report& r) {
  positive(c.deg, "--deg", 1);
  std::vector<CriterionInstance> inst;
  if (!c.inputs.empty()) {
    auto P = presentation(c);
    if (!P.category->is_thin()) throw Error(ErrorKind::NotThin, "exact needs a poset");
    const Poset Q = poset_of(*P.category);
    for (std::size_t p = 0; p < Q.size(); ++p) inst.push_back(max_fiber_instance(Q, static_cast<int>(p)));
  }
  inst.push_back(product_instance(1, 1, c.deg));
  for (const auto& i : inst) {
    auto res = exactness_criterion_check(i.f, i.source_degree, i.target_degree, i.candidate);
    r.checks.push_back({i.name, res.verdict});
    count(r, i.name + " steps", res.steps.size());
  }
}

Functor functor_input(const RunConfig& c) {
  auto S = category_from_document(parse_sections(read_file(input(c, 0))));
  auto T = category_from_document(parse_sections(read_file(input(c, 1))));
  return functor_from_document(parse_sections(read_file(input(c, 2))), S, T);
}

void cofinal_cmd(const RunConfig& c, Report& r) { r.checks.push_back({"cofinal", is_cofinal(functor_input(c))}); }

void sieve_cmd(const RunConfig& c, Report& r) { r.checks.push_back({"sieve", is_sieve(functor_input(c))}); }

void closure_cmd(const RunConfig& c, Report& r) {
  auto doc = parse_sections(read_file(input(c)));
  auto C = category_from_document(doc);
  const TextSection* we = doc.find("we");
  if (!we) throw Error(ErrorKind::PreconditionViolated, "closure needs a we: section as seed");
  auto seed = marking_from_section(C, *we);
  std::vector<Mor> s;
  for (std::size_t m = 0; m < C->num_morphisms(); ++m) {
    if (seed.contains(static_cast<Mor>(m))) s.push_back(static_cast<Mor>(m));
  }
  auto closed = two_out_of_six_closure(C, s);
  auto v = two_out_of_six_violation(closed);
  r.checks.push_back({"closure is 2-out-of-6", v ? Fails(*v) : Holds()});
  count(r, "seed", seed.count());
  count(r, "closure", closed.count());
  r.dump = format_marking("we", closed);
}

void corpus_verify_cmd(const RunConfig& c, Report& r) {
  AcceptanceConfig a;
  a.corpus_dir = c.corpus.empty() ? default_corpus_dir() : c.corpus;
  a.budget = c.budget;
  if (!c.criteria.empty()) a.criteria = parse_criteria(c.criteria);
  auto rep = corpus_report(a);
  r.provenance = rep.provenance;
  r.checks = rep.checks;
  r.counts = rep.counts;
}

const std::vector<std::pair<std::string, Handler>>& handlers() {
  static const std::vector<std::pair<std::string, Handler>> h = {
      {"check-cat", check_cat},     {"check-cofcat", check_cofcat}, {"check-model", check_model},
      {"d", d_cmd},                 {"sd", sd_cmd},                 {"dbar", dbar_cmd},
      {"ex", ex_cmd},               {"nf", nf_cmd},                 {"bold-nf", bold_nf_cmd},
      {"classify", classify_cmd},   {"mnf", mnf_cmd},               {"lift", lift_cmd},
      {"bisieve-lift", bisieve_lift_cmd}, {"approx", approx_cmd},   {"exact", exact_cmd},
      {"cofinal", cofinal_cmd},     {"sieve", sieve_cmd},           {"closure", closure_cmd},
      {"corpus-verify", corpus_verify_cmd},
  };
  return h;
}

std::string echo(const RunConfig& c) {
  std::string s = c.command;
  for (const auto& i : c.inputs) s += " " + base(i);
  auto flag = [&](const char* name, long long v) { s += std::string(" --") + name + " " + std::to_string(v); };
  static const std::map<std::string, std::string> uses = {
      {"d", "g"},       {"dbar", "st"},      {"ex", "Dg"},  {"nf", "Dgb"},    {"bold-nf", "Dng"},
      {"classify", "Dn"}, {"mnf", "Dst"},  {"lift", "Db"}, {"approx", "b"}, {"exact", "g"},
      {"corpus-verify", "b"}, {"bisieve-lift", ""},
  };
  auto it = uses.find(c.command);
  if (it == uses.end()) return s;
  for (char u : it->second) {
    switch (u) {
      case 'D': flag("dim", c.dim); break;
      case 'g': flag("deg", c.deg); break;
      case 'n': flag("n", c.n); break;
      case 's': flag("s", c.s); break;
      case 't': flag("t", c.t); break;
      case 'b': flag("budget", static_cast<long long>(c.budget)); break;
    }
  }
  if (!c.criteria.empty()) s += " --criteria " + c.criteria;
  return s;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& h : handlers()) n.push_back(h.first);
    return n;
  }();
  return names;
}

Report run(const RunConfig& config) {
  Handler h = nullptr;
  for (const auto& [name, fn] : handlers()) {
    if (name == config.command) h = fn;
  }
  if (!h) throw Error(ErrorKind::UnknownCommand, "'" + config.command + "'");
  Report r;
  r.command = echo(config);
  r.with_timing = config.timing;
  const auto start = std::chrono::steady_clock::now();
  h(config, r);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!config.out.empty() && !r.dump.empty()) {
    std::ofstream out(config.out);
    if (!out) throw Error(ErrorKind::PreconditionViolated, "cannot write " + config.out);
    out << r.dump;
    r.dump.clear();
  }
  return r;
}

}  // namespace catkit::tools

#include "catkit_tools/fixtures.hpp"

#include <algorithm>
#include <filesystem>
#include <sstream>

#include "catkit/text_format.hpp"

#ifndef CATKIT_CORPUS_DIR
#define CATKIT_CORPUS_DIR "corpus"
#endif

namespace catkit::tools {

namespace fs = std::filesystem;

std::string default_corpus_dir() { return CATKIT_CORPUS_DIR; }

namespace {

std::string expectation(const std::string& text) {
  std::istringstream in(text);
  const std::string key = "# expect-fail:";
  for (std::string line; std::getline(in, line);) {
    if (line.rfind(key, 0) == 0) {
      auto v = line.substr(key.size());
      v.erase(0, v.find_first_not_of(' '));
      v.erase(v.find_last_not_of(" \r") + 1);
      return v;
    }
  }
  return {};
}

}  // namespace

std::vector<Fixture> list_fixtures(const std::string& dir) {
  std::vector<Fixture> out;
  if (!fs::is_directory(dir)) throw Error(ErrorKind::PreconditionViolated, "no corpus directory " + dir);
  for (const auto& e : fs::recursive_directory_iterator(dir)) {
    if (!e.is_regular_file()) continue;
    const auto ext = e.path().extension().string();
    if (ext != ".cat" && ext != ".model") continue;
    Fixture f;
    f.name = fs::relative(e.path(), dir).generic_string();
    f.path = e.path().string();
    f.model = ext == ".model";
    f.expect_fail = expectation(read_file(f.path));
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), [](const Fixture& a, const Fixture& b) { return a.name < b.name; });
  return out;
}

const Fixture& find_fixture(const std::vector<Fixture>& all, const std::string& name) {
  for (const auto& f : all) {
    if (f.name == name) return f;
  }
  throw Error(ErrorKind::PreconditionViolated, "corpus has no fixture " + name);
}

CofibrationPresentation load_presentation(const std::string& path) { return parse_presentation(read_file(path)); }

ModelPresentation load_model(const std::string& path) { return parse_model(read_file(path)); }

Check verify_fixture(const Fixture& f) {
  Check c{"fixture " + f.name, Holds()};
  CheckReport rep;
  try {
    rep = f.model ? check_model_axioms(load_model(f.path)) : check_cofibration_axioms(load_presentation(f.path));
  } catch (const Error& e) {
    c.verdict = Fails(std::string(to_string(e.kind())) + ": " + e.detail());
    return c;
  }
  std::vector<std::string> failed;
  std::string first_witness;
  for (const auto& r : rep) {
    if (!r.verdict.holds()) {
      failed.push_back(r.name);
      if (first_witness.empty()) first_witness = r.verdict.witness;
    }
  }
  if (f.expect_fail.empty()) {
    if (!failed.empty()) c.verdict = Fails("axiom '" + failed[0] + "' fails: " + first_witness);
  } else if (failed.size() != 1 || failed[0] != f.expect_fail) {
    std::string got;
    for (const auto& n : failed) got += (got.empty() ? "" : ", ") + n;
    c.verdict = Fails("expected exactly '" + f.expect_fail + "' to fail, got {" + got + "}");
  } else {
    c.verdict = Holds("fails '" + f.expect_fail + "' as intended");
  }
  return c;
}

}  // namespace catkit::tools

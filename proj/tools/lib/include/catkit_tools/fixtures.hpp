#pragma once

#include <string>
#include <vector>

#include "catkit/presentation.hpp"

namespace catkit::tools {

/// A corpus file. `.cat` files are cofibration presentations, `.model`
/// files model presentations.
struct Fixture {
  std::string name;  // relative to the corpus directory, '/'-separated
  std::string path;
  bool model = false;
  /// From a "# expect-fail: <axiom>" line; empty when every axiom holds.
  std::string expect_fail;
};

/// Set at build time to the source corpus directory.
std::string default_corpus_dir();

/// Fixtures below `dir`, sorted by name.
std::vector<Fixture> list_fixtures(const std::string& dir);
const Fixture& find_fixture(const std::vector<Fixture>& all, const std::string& name);

CofibrationPresentation load_presentation(const std::string& path);
ModelPresentation load_model(const std::string& path);

/// Axiom report of a fixture checked against its expectation.
Check verify_fixture(const Fixture& f);

}  // namespace catkit::tools

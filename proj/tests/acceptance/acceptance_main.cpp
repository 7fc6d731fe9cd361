// One line per criterion. Exit status is 0 when every failure is one of the
// documented open criteria (kKnownOpen); those still print FAIL.
#include <cstdio>
#include <cstdlib>
#include <string>

#include "catkit_tools/acceptance.hpp"
#include "catkit_tools/fixtures.hpp"

using namespace catkit::tools;

int main(int argc, char** argv) {
  AcceptanceConfig cfg;
  cfg.corpus_dir = argc > 1 ? argv[1] : default_corpus_dir();
  int unexpected = 0, open_fail = 0, open_pass = 0;
  for (int k = 1; k <= kCriteria; ++k) {
    auto c = run_criterion(k, cfg);
    const bool pass = c.verdict.holds();
    const bool known = kKnownOpen.count(k) > 0;
    std::printf("criterion %2d %s %s%s%s\n", k, pass ? "PASS" : "FAIL", c.title.c_str(),
                known ? " [known open]" : "", pass ? "" : (" -- " + c.verdict.witness).c_str());
    if (!pass && !known) ++unexpected;
    if (!pass && known) ++open_fail;
    if (pass && known) ++open_pass;
  }
  std::printf("summary: %d unexpected failure(s), %d known open failing, %d known open now passing\n", unexpected,
              open_fail, open_pass);
  if (open_pass) std::printf("note: a known open criterion passes; take it off the list\n");
  return unexpected ? EXIT_FAILURE : EXIT_SUCCESS;
}

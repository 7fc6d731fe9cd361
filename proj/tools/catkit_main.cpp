#include <iostream>

#include "CLI11.hpp"
#include "catkit/error.hpp"
#include "catkit_tools/commands.hpp"

using catkit::tools::RunConfig;

namespace {

constexpr int kErrorStatus = 3;

int fail(const std::string& kind, const std::string& detail) {
  std::cerr << "error: " << kind << ": " << detail << "\n";
  return kErrorStatus;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"catkit: finite categories, cofibration categories and frames at desk scale"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format = "text";
  // shared flags live on every subcommand so they can follow the input path
  for (const auto& name : catkit::tools::command_names()) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("inputs", cfg.inputs, "input files");
    sub->add_option("--dim,--m", cfg.dim, "dimension bound (m)");
    sub->add_option("--deg", cfg.deg, "degree bound");
    sub->add_option("--n", cfg.n, "vertical bound for bold-nf and classify");
    sub->add_option("--s", cfg.s, "two-sided s bound");
    sub->add_option("--t", cfg.t, "two-sided t bound");
    sub->add_option("--budget", cfg.budget, "search budget in candidate assignments");
    sub->add_option("--cap", cfg.cap, "enumeration cap");
    sub->add_option("--out", cfg.out, "write the dump here instead of into the report");
    sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--timing", cfg.timing, "include wall clock time");
    if (name == "corpus-verify") {
      sub->add_option("--corpus", cfg.corpus, "corpus directory");
      sub->add_option("--criteria", cfg.criteria, "criteria to run, e.g. 1-11,13");
    }
    sub->callback([&cfg, name] { cfg.command = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::RequiredError& e) {
    return fail("UnknownCommand", std::string(e.what()) + " (commands: check-cat, check-cofcat, ... see --help)");
  } catch (const CLI::ExtrasError& e) {
    return fail("UnknownCommand", e.what());
  } catch (const CLI::ParseError& e) {
    return fail("ParseError", e.what());
  }
  cfg.format = format == "json" ? catkit::tools::Format::Json : catkit::tools::Format::Text;
  try {
    auto report = catkit::tools::run(cfg);
    std::cout << catkit::tools::render(report, cfg.format);
    return catkit::tools::exit_status(report);
  } catch (const catkit::Error& e) {
    return fail(catkit::to_string(e.kind()), e.detail());
  } catch (const std::exception& e) {
    return fail("error", e.what());
  }
}

#include "catkit_tools/report.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

#include "catkit/error.hpp"

namespace catkit::tools {

using nlohmann::ordered_json;

Verdict overall(const Report& r) { return summarize(r.checks); }

int exit_status(const Report& r) {
  switch (overall(r).outcome) {
    case Outcome::Holds: return 0;
    case Outcome::Fails: return 1;
    case Outcome::Unknown: return 2;
  }
  return 1;
}

std::string to_text(const Report& r) {
  std::ostringstream out;
  out << "command: " << r.command << "\n";
  for (const auto& p : r.provenance) out << "provenance: " << p << "\n";
  for (const auto& c : r.counts) out << "count " << c.name << " = " << c.value << "\n";
  for (const auto& c : r.checks) {
    out << "check " << c.name << ": " << to_string(c.verdict.outcome);
    if (!c.verdict.witness.empty()) out << " (" << c.verdict.witness << ")";
    out << "\n";
  }
  if (!r.dump.empty()) out << r.dump << (r.dump.back() == '\n' ? "" : "\n");
  if (r.with_timing) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", r.seconds);
    out << "time: " << buf << " s\n";
  }
  out << "result: " << to_string(overall(r).outcome) << "\n";
  return out.str();
}

std::string to_json(const Report& r) {
  ordered_json j;
  j["command"] = r.command;
  j["provenance"] = r.provenance;
  j["checks"] = ordered_json::array();
  for (const auto& c : r.checks) {
    j["checks"].push_back({{"name", c.name}, {"outcome", to_string(c.verdict.outcome)}, {"witness", c.verdict.witness}});
  }
  j["counts"] = ordered_json::array();
  for (const auto& c : r.counts) j["counts"].push_back({{"name", c.name}, {"value", c.value}});
  if (!r.dump.empty()) j["dump"] = r.dump;
  if (r.with_timing) j["seconds"] = r.seconds;
  j["result"] = to_string(overall(r).outcome);
  return j.dump(2) + "\n";
}

namespace {

Outcome outcome_of(const std::string& s) {
  for (Outcome o : {Outcome::Holds, Outcome::Fails, Outcome::Unknown}) {
    if (s == to_string(o)) return o;
  }
  throw Error(ErrorKind::ParseError, "unknown outcome '" + s + "'");
}

}  // namespace

Report report_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, std::string("report: ") + e.what());
  }
  Report r;
  try {
    r.command = j.at("command").get<std::string>();
    r.provenance = j.at("provenance").get<std::vector<std::string>>();
    for (const auto& c : j.at("checks")) {
      r.checks.push_back({c.at("name").get<std::string>(),
                          Verdict{outcome_of(c.at("outcome").get<std::string>()), c.at("witness").get<std::string>()}});
    }
    for (const auto& c : j.at("counts")) r.counts.push_back({c.at("name").get<std::string>(), c.at("value").get<long long>()});
    if (j.contains("dump")) r.dump = j["dump"].get<std::string>();
    if (j.contains("seconds")) {
      r.with_timing = true;
      r.seconds = j["seconds"].get<double>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("report: ") + e.what());
  }
  return r;
}

std::string render(const Report& r, Format f) { return f == Format::Json ? to_json(r) : to_text(r); }

}  // namespace catkit::tools

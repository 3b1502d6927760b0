#include "barbell/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "barbell/errors.hpp"
#include "barbell/geometries.hpp"
#include "barbell/scenario_file.hpp"
#include "barbell/theorems.hpp"

namespace barbell {

namespace {

constexpr int kExitPass = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInvalid = 2;

const std::vector<std::string> kParamNames = {"k", "l", "n", "m", "p", "q", "g", "gl", "gr",
                                              "h", "v", "b", "kp", "lp", "max", "variant", "field"};

// Binds every run parameter as an optional string flag.
struct ParamFlags {
  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option*> options;

  void attach(CLI::App* app) {
    for (const auto& name : kParamNames) {
      values[name];
      options[name] = app->add_option("--" + name, values[name], "parameter " + name);
    }
  }

  Params collect() const {
    Params p;
    for (const auto& [name, opt] : options)
      if (opt->count() > 0) p.set(name, values.at(name));
    return p;
  }
};

std::string padded(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

bool isReportRecord(const nlohmann::ordered_json& j) {
  return j.is_object() && j.contains("theorem") && j.contains("checks");
}

}  // namespace

Format parseFormat(const std::string& text) {
  if (text == "table") return Format::Table;
  if (text == "machine") return Format::Machine;
  throw InvalidArgument("format must be table or machine");
}

std::string emitReport(const Report& r, Format format) {
  if (format == Format::Machine) return reportToJson(r).dump(2) + "\n";
  std::ostringstream out;
  out << "== " << (r.theorem.empty() ? "report" : r.theorem);
  if (!r.params.values().empty()) out << " (" << r.params.str() << ")";
  out << " ==\n";
  if (r.values.empty() && r.checks.empty() && r.notes.empty()) return out.str();
  std::size_t width = 0;
  for (const auto& [name, v] : r.values) width = std::max(width, name.size());
  for (const auto& [name, v] : r.values) out << "  " << padded(name, width) << " = " << v << "\n";
  std::size_t passed = 0;
  for (const auto& c : r.checks) {
    if (c.pass) {
      ++passed;
      out << "  PASS " << c.name << ": " << c.actual << "\n";
    } else {
      out << "  FAIL " << c.name << ": expected " << c.expected << ", got " << c.actual << "\n";
    }
  }
  for (const auto& n : r.notes) out << "  note " << n << "\n";
  if (!r.checks.empty())
    out << (r.passed() ? "PASS" : "FAIL") << " (" << passed << "/" << r.checks.size() << " checks)\n";
  return out.str();
}

Report parseMachineReport(const std::string& text) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("machine report is not valid JSON: ") + e.what());
  }
  return reportFromJson(j);
}

Report rerunReport(const Report& r) {
  if (r.theorem == "scenario" || r.theorem.rfind("scenario:", 0) == 0) {
    if (!r.raw.contains("scenario")) throw InvalidArgument("scenario report carries no scenario");
    return runScenario(parseScenario(r.raw.at("scenario")));
  }
  if (r.theorem.rfind("sweep:", 0) == 0) return runSweep(r.theorem.substr(6), r.params, defaultThreads());
  return runTheorem(r.theorem, r.params);
}

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Barbell calculus: equivariant homology actions and module invariants"};
  // --h is a run parameter, so help is long-form only.
  app.set_help_flag("--help", "print this help");
  app.require_subcommand(1);
  std::string format = "table";
  std::string outPath;
  app.add_option("--format", format, "table or machine")->check(CLI::IsMember({"table", "machine"}));
  app.add_option("--out", outPath, "write the report to this file");
  app.fallthrough();

  std::string theoremName;
  ParamFlags theoremFlags;
  CLI::App* theorem = app.add_subcommand("theorem", "run one theorem or obstruction scenario");
  theorem->set_help_flag("--help", "print this help");
  theorem->add_option("name", theoremName, "theorem name (see list)")->required();
  theoremFlags.attach(theorem);

  std::string sweepName;
  ParamFlags sweepFlags;
  CLI::App* sweep = app.add_subcommand("sweep", "run a parameter grid");
  sweep->set_help_flag("--help", "print this help");
  sweep->add_option("name", sweepName, "sweep name (see list)")->required();
  sweepFlags.attach(sweep);

  std::string scenarioPath;
  CLI::App* scenario = app.add_subcommand("scenario", "run a scenario file or replay a machine report");
  scenario->set_help_flag("--help", "print this help");
  scenario->add_option("--scenario,file", scenarioPath, "scenario JSON file")->required();

  CLI::App* list = app.add_subcommand("list", "list theorems, sweeps and geometries");
  list->set_help_flag("--help", "print this help");

  std::vector<std::string> argv;
  for (auto it = args.rbegin(); it != args.rend(); ++it) argv.push_back(*it);
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }

  try {
    const Format fmt = parseFormat(format);
    std::string rendered;
    bool passed = true;
    if (list->parsed()) {
      std::ostringstream s;
      s << "theorems:";
      for (const auto& n : theoremNames()) s << " " << n;
      s << "\nobstructions:";
      for (const auto& n : obstructionNames()) s << " " << n;
      s << "\nsweeps:";
      for (const auto& n : sweepNames()) s << " " << n;
      s << "\ngeometries:";
      for (const auto& n : builtinGeometryNames()) s << " " << n;
      s << "\n";
      rendered = s.str();
    } else {
      Report r;
      if (theorem->parsed()) {
        r = runTheorem(theoremName, theoremFlags.collect());
      } else if (sweep->parsed()) {
        r = runSweep(sweepName, sweepFlags.collect(), defaultThreads());
      } else if (scenario->parsed()) {
        std::ifstream in(scenarioPath);
        if (!in) throw InvalidArgument("cannot open '" + scenarioPath + "'");
        nlohmann::ordered_json j;
        try {
          j = nlohmann::ordered_json::parse(in);
        } catch (const nlohmann::json::exception& e) {
          throw InvalidArgument("'" + scenarioPath + "' is not valid JSON: " + e.what());
        }
        r = isReportRecord(j) ? rerunReport(reportFromJson(j)) : runScenario(parseScenario(j));
      }
      passed = r.passed();
      rendered = emitReport(r, fmt);
    }
    if (outPath.empty()) {
      out << rendered;
    } else {
      std::ofstream file(outPath, std::ios::binary);
      if (!file) throw InvalidArgument("cannot write '" + outPath + "'");
      file << rendered;
    }
    return passed ? kExitPass : kExitMismatch;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
  } catch (const HypothesisViolation& e) {
    err << "hypothesis violated: " << e.what() << "\n";
  } catch (const ShapeError& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitInvalid;
}

}  // namespace barbell

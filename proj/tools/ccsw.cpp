#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ccsn/abstraction.hpp"
#include "ccsn/denotational.hpp"
#include "ccsn/errors.hpp"
#include "ccsn/gen.hpp"
#include "ccsn/json_io.hpp"
#include "ccsn/laws.hpp"
#include "ccsn/operational.hpp"
#include "ccsn/parser.hpp"

namespace {

using namespace ccsn;

struct Config {
  std::string calculus;  // empty: infer from file extension, fall back to ccsn
  int nbar = 2;
  std::size_t budget = 48;
  std::string semantics = "both";
  std::string format = "text";
  std::uint64_t seed = 1;
};

Calculus calculusFor(const Config& cfg, const std::string& file) {
  if (cfg.calculus == "ccsn") return Calculus::CCSN;
  if (cfg.calculus == "ccsnplus") return Calculus::CCSNPLUS;
  return file.ends_with(".ccsnp") ? Calculus::CCSNPLUS : Calculus::CCSN;
}

std::string readFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LangError("io", "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::json configJson(const Config& cfg, Calculus calc) {
  return {{"calculus", calc == Calculus::CCSN ? "ccsn" : "ccsnplus"},
          {"nbar", cfg.nbar},
          {"budget", cfg.budget},
          {"semantics", cfg.semantics},
          {"seed", cfg.seed}};
}

void emitJson(const Config& cfg, Calculus calc, nlohmann::json results) {
  nlohmann::json doc = {{"config", configJson(cfg, calc)},
                        {"results", std::move(results)}};
  std::cout << doc.dump(2) << "\n";
}

int cmdRun(const std::string& file, const Config& cfg) {
  const Calculus calc = calculusFor(cfg, file);
  const Program p = parseProgram(readFile(file), calc, cfg.nbar);
  const bool wantOp = cfg.semantics != "den";
  const bool wantDen = cfg.semantics != "op";
  TraceSet o, d;
  if (wantOp) o = denO(p.main, p, cfg.budget);
  if (wantDen) d = denD(p.main, p, cfg.budget);
  if (cfg.format == "json") {
    nlohmann::json res = {{"command", "run"}, {"file", file}};
    if (wantOp) res["op"] = traceSetToJson(o);
    if (wantDen) res["den"] = traceSetToJson(d);
    emitJson(cfg, calc, nlohmann::json::array({std::move(res)}));
  } else {
    if (wantOp) std::cout << "O = " << renderTraceSet(o) << "\n";
    if (wantDen) std::cout << "D = " << renderTraceSet(d) << "\n";
  }
  return 0;
}

int cmdCheckXi(const std::vector<std::string>& files, std::size_t randomCount,
               const Config& cfg) {
  const Calculus calc = calculusFor(cfg, files.empty() ? std::string{} : files.front());
  std::vector<std::pair<std::string, Program>> programs;
  if (!files.empty()) {
    for (const std::string& file : files)
      programs.emplace_back(
          file, parseProgram(readFile(file), calculusFor(cfg, file), cfg.nbar));
  } else {
    Rng rng(cfg.seed);
    GenOptions opts;
    opts.nbar = cfg.nbar;
    for (std::size_t i = 0; i < randomCount; ++i) {
      Program p = randomProgram(rng, calc, opts);
      programs.emplace_back("random#" + std::to_string(i), std::move(p));
    }
  }
  bool allEqual = true;
  nlohmann::json results = nlohmann::json::array();
  for (const auto& [name, p] : programs) {
    const XiVerdict v = checkXi(p.main, p, cfg.budget);
    allEqual = allEqual && v.equal;
    if (cfg.format == "json") {
      nlohmann::json res = {{"command", "check-xi"},
                            {"program", name},
                            {"equal", v.equal}};
      if (!v.equal) {
        res["op_image"] = traceSetToJson(v.opImage);
        res["den_image"] = traceSetToJson(v.denImage);
        if (v.witness) res["witness"] = traceToJson(*v.witness);
      }
      results.push_back(std::move(res));
    } else if (!v.equal) {
      std::cout << name << ": NOT equal\n"
                << "  abstracted O: " << renderTraceSet(v.opImage) << "\n"
                << "  D:            " << renderTraceSet(v.denImage) << "\n";
      if (v.witness) std::cout << "  witness: " << v.witness->toString() << "\n";
      std::cout << "  source: " << renderProgram(p) << "\n";
    }
  }
  if (cfg.format == "json") {
    emitJson(cfg, calc, std::move(results));
  } else {
    std::cout << (allEqual ? "equal" : "NOT equal") << " (" << programs.size()
              << " program" << (programs.size() == 1 ? "" : "s") << ")\n";
  }
  return allEqual ? 0 : 2;
}

int cmdLaws(const Config& cfg, std::size_t count, bool mutate) {
  LawsOptions opts;
  opts.seed = cfg.seed;
  opts.count = count;
  opts.nbar = cfg.nbar;
  opts.mutateChoiceMerge = mutate;
  const std::vector<LawReport> reports = runLawSuites(opts);
  if (cfg.format == "json") {
    nlohmann::json results = nlohmann::json::array();
    for (const LawReport& r : reports) {
      nlohmann::json res = {{"command", "laws"},
                            {"name", r.name},
                            {"checked", r.checked},
                            {"failed", r.failed}};
      if (r.failed) res["counterexample"] = r.firstCounterexample;
      results.push_back(std::move(res));
    }
    emitJson(cfg, calculusFor(cfg, ""), std::move(results));
  } else {
    for (const LawReport& r : reports) {
      std::cout << r.name << ": " << (r.failed ? "FAIL" : "ok") << " ("
                << r.checked << " checked";
      if (r.failed) std::cout << ", " << r.failed << " failed";
      std::cout << ")\n";
      if (r.failed) std::cout << "  first: " << r.firstCounterexample << "\n";
    }
  }
  return allPassed(reports) ? 0 : 2;
}

int cmdDiscriminate(const std::string& file1, const std::string& file2,
                    const Config& cfg, int maxDepth) {
  const Calculus calc = calculusFor(cfg, file1);
  const Program p1 = parseProgram(readFile(file1), calc, cfg.nbar);
  const Program p2 = parseProgram(readFile(file2), calc, cfg.nbar);
  Program merged = p1;
  merged.channels.insert(p2.channels.begin(), p2.channels.end());
  for (const auto& [y, body] : p2.decls) {
    auto [it, fresh] = merged.decls.emplace(y, body);
    if (!fresh && it->second != body)
      throw LangError("duplicate-decl",
                      "declaration " + y + " differs between the two files");
  }
  const DiscriminationResult r =
      discriminate(p1.main, p2.main, merged, maxDepth, cfg.budget);
  TraceSet left, right;
  if (r.context) {
    left = denO(fillContext(*r.context, p1.main), merged, cfg.budget);
    right = denO(fillContext(*r.context, p2.main), merged, cfg.budget);
  }
  if (cfg.format == "json") {
    nlohmann::json res = {{"command", "discriminate"},
                          {"found", r.context.has_value()},
                          {"searched_depth", r.searchedDepth}};
    if (r.context) {
      res["context"] = renderStatement(*r.context);
      res["left"] = traceSetToJson(left);
      res["right"] = traceSetToJson(right);
    }
    emitJson(cfg, calc, nlohmann::json::array({std::move(res)}));
  } else if (r.context) {
    std::cout << "Found: " << renderStatement(*r.context) << "\n"
              << "  left:  " << renderTraceSet(left) << "\n"
              << "  right: " << renderTraceSet(right) << "\n";
  } else {
    std::cout << "NotFound (searched depth <= " << r.searchedDepth << ")\n";
  }
  return 0;
}

void addCommon(CLI::App* sub, Config& cfg) {
  sub->add_option("--calculus", cfg.calculus, "ccsn or ccsnplus")
      ->check(CLI::IsMember({"ccsn", "ccsnplus"}));
  sub->add_option("--nbar", cfg.nbar, "synchronisation bound")
      ->check(CLI::PositiveNumber);
  sub->add_option("--budget", cfg.budget, "trace symbol budget")
      ->check(CLI::PositiveNumber);
  sub->add_option("--format", cfg.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--seed", cfg.seed, "seed for randomized suites");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"trace semantics workbench for calculi with joint inputs"};
  app.require_subcommand(1);
  Config cfg;
  int code = 0;

  std::string runFile;
  CLI::App* run = app.add_subcommand("run", "evaluate a program's trace sets");
  run->add_option("file", runFile, "program file")->required();
  run->add_option("--semantics", cfg.semantics, "op, den, or both")
      ->check(CLI::IsMember({"op", "den", "both"}));
  addCommon(run, cfg);
  run->callback([&] { code = cmdRun(runFile, cfg); });

  std::vector<std::string> xiFiles;
  std::size_t xiRandom = 0;
  CLI::App* xi = app.add_subcommand(
      "check-xi", "compare abstracted operational traces with denotational ones");
  CLI::Option* xiFileOpt = xi->add_option("files", xiFiles, "program files");
  CLI::Option* xiRandomOpt =
      xi->add_option("--random", xiRandom, "check N seeded random programs");
  xiFileOpt->excludes(xiRandomOpt);
  addCommon(xi, cfg);
  xi->callback([&] {
    if (xiFiles.empty() && xiRandom == 0)
      throw CLI::ValidationError("check-xi", "need files or --random N");
    code = cmdCheckXi(xiFiles, xiRandom, cfg);
  });

  std::size_t lawCount = 1000;
  bool mutate = false;
  CLI::App* laws = app.add_subcommand("laws", "run the property-law suites");
  laws->add_option("--count", lawCount, "checks per law");
  laws->add_flag("--mutate-choice-merge", mutate)->group("");  // test-only
  addCommon(laws, cfg);
  laws->callback([&] { code = cmdLaws(cfg, lawCount, mutate); });

  std::string dFile1, dFile2;
  int maxDepth = 2;
  CLI::App* disc = app.add_subcommand(
      "discriminate", "search for a context separating two programs");
  disc->add_option("file1", dFile1, "first program")->required();
  disc->add_option("file2", dFile2, "second program")->required();
  disc->add_option("--max-depth", maxDepth, "largest context depth to try")
      ->check(CLI::NonNegativeNumber);
  addCommon(disc, cfg);
  disc->callback([&] { code = cmdDiscriminate(dFile1, dFile2, cfg, maxDepth); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  } catch (const ccsn::LangError& e) {
    std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return code;
}

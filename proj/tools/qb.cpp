// Command-line front end: reads presentation files and prints invariants,
// duals, mho quivers, self-injectivity tables and torsionless censuses.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "quiverbench/duality.hpp"
#include "quiverbench/facts.hpp"
#include "quiverbench/module_io.hpp"
#include "quiverbench/presentation_io.hpp"
#include "quiverbench/report.hpp"

namespace fs = std::filesystem;
using namespace qb;

namespace {

enum Exit { Ok = 0, Usage = 1, Parse = 2, Budget = 3, Certification = 4, Mismatch = 5, Internal = 6 };

struct Settings {
  std::string file;
  bool json = false;
  std::string check;
  std::string module;
  std::string seeds = "simples";
  int maxSteps = 16;
  std::string format = "text";
  std::uint64_t budget = ClassificationOptions{}.enumerationBudget;
  bool lattice = true;
  std::string dataDir;
};

std::string readText(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidPresentation("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path dataDir(const Settings& s) {
  if (!s.dataDir.empty()) return s.dataDir;
  if (const char* env = std::getenv("QB_DATA")) return env;
  return QB_DATA_DIR;
}

std::string vec(const std::vector<int>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

const char* yesNo(bool b) { return b ? "yes" : "no"; }

template <class S>
Rep<S> moduleFromSpec(const AlgebraPtr<S>& a, const std::string& spec) {
  if (isModuleDescriptor(spec) && !fs::exists(spec)) return namedModule(a, spec);
  return parseModule(a, readText(spec));
}

template <class S>
int info(const AlgebraPtr<S>& a, const Settings& s) {
  if (s.json) {
    Json out;
    out["schema_version"] = kSchemaVersion;
    out["algebra"] = algebraJson(a);
    out["socle"] = socleJson(a);
    std::cout << out.dump(2) << '\n';
    return Ok;
  }
  const Json soc = socleJson(a);
  std::cout << "algebra " << a->presentation.name << " over " << FieldTraits<S>::name() << "\n";
  std::cout << "dim " << a->dim() << ", Loewy length " << a->loewyLength << "\n";
  std::cout << "basis";
  for (const auto& l : a->labels) std::cout << ' ' << l;
  std::cout << "\nregular module " << dimVectorString(regularRep(a)) << "\n";
  for (int v = 0; v < a->vertexCount(); ++v)
    std::cout << "P(" << a->quiver().vertices[static_cast<std::size_t>(v)] << ") " << dimVectorString(projective(a, v)) << "\n";
  std::cout << "socle dim " << soc["dim"].get<int>() << ":";
  for (const auto& b : soc["basis"]) std::cout << "  " << b.get<std::string>();
  std::cout << "\nsocle multiplicities " << vec(soc["multiplicities"].get<std::vector<int>>()) << "\n";
  return Ok;
}

int simples(const AlgebraPtr<F101>& a, const Settings& s) {
  ClassificationOptions limits;
  limits.enumerationBudget = s.budget;
  const auto report = simpleDualReport(a, limits);
  if (s.json) {
    Json out;
    out["schema_version"] = kSchemaVersion;
    out["simples"] = simplesJson(a, report);
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << std::left << std::setw(8) << "simple" << std::setw(10) << "dim S*" << std::setw(13) << "torsionless"
              << std::setw(11) << "reflexive" << std::setw(8) << "brick" << "coker phi\n";
    for (const auto& e : report.simples)
      std::cout << std::setw(8) << ("S" + a->quiver().vertices[static_cast<std::size_t>(e.vertex)]) << std::setw(10)
                << e.dualDim << std::setw(13) << yesNo(e.torsionless) << std::setw(11) << yesNo(e.reflexive)
                << std::setw(8) << yesNo(e.dualBrick) << vec(e.phiCokernelDims) << "\n";
    std::cout << "duals of reflexive simples are torsionless bricks without torsionless factors: " << yesNo(report.reflexiveDualsTorsionlessBricks)
              << "\nduals of reflexive simples pairwise orthogonal: " << yesNo(report.reflexiveDualsOrthogonal) << "\n";
  }
  if (s.check.empty()) return Ok;
  bool all = true;
  for (const auto& e : report.simples) all = all && (s.check == "torsionless" ? e.torsionless : e.reflexive);
  if (!s.json) std::cout << "all simples " << s.check << ": " << yesNo(all) << "\n";
  return all ? Ok : Mismatch;
}

template <class S>
int dual(const AlgebraPtr<S>& a, const Settings& s) {
  const Rep<S> m = moduleFromSpec(a, s.module);
  const PhiData<S> p = phi(m);
  const bool torsionless = p.kernelDim == 0;
  const bool reflexive = torsionless && p.cokernel.dim() == 0;
  if (s.json) {
    Json out;
    out["schema_version"] = kSchemaVersion;
    out["module"] = moduleJson(m);
    out["dual"] = moduleJson(p.dual());
    out["doubleDual"] = moduleJson(p.doubleDual());
    out["phiKernelDim"] = p.kernelDim;
    out["phiCokernelDims"] = p.cokernel.dims;
    out["torsionless"] = torsionless;
    out["reflexive"] = reflexive;
    std::cout << out.dump(2) << '\n';
    return Ok;
  }
  std::cout << "M   " << dimVectorString(m) << "\n";
  std::cout << "M*  " << dimVectorString(p.dual()) << " (right module)\n" << printModule(p.dual());
  std::cout << "M** " << dimVectorString(p.doubleDual()) << "\n";
  std::cout << "ker phi dim " << p.kernelDim << ", coker phi " << dimVectorString(p.cokernel) << "\n";
  std::cout << "torsionless " << yesNo(torsionless) << ", reflexive " << yesNo(reflexive) << "\n";
  return Ok;
}

template <class S>
int mhoQuiverCommand(const AlgebraPtr<S>& a, const Settings& s) {
  MhoQuiver<S> q;
  if (s.seeds == "simples") {
    q = simplesMhoQuiver(a, s.maxSteps);
  } else {
    std::vector<Rep<S>> seeds;
    std::vector<std::string> labels;
    std::stringstream list(s.seeds);
    std::string item;
    while (std::getline(list, item, ';')) {
      seeds.push_back(moduleFromSpec(a, item));
      labels.push_back(item);
    }
    q = mhoQuiver(seeds, labels, s.maxSteps);
  }
  if (s.format == "dot") {
    std::cout << mhoQuiverDot(q, a->presentation.name);
  } else if (s.format == "json") {
    Json out;
    out["schema_version"] = kSchemaVersion;
    out["mhoQuiver"] = mhoQuiverJson(q);
    std::cout << out.dump(2) << '\n';
  } else {
    for (std::size_t i = 0; i < q.nodes.size(); ++i) {
      const auto& n = q.nodes[i];
      std::cout << i << "  " << n.label << " " << dimVectorString(n.rep) << (n.projective ? " projective" : "")
                << (n.torsionless ? " torsionless" : "") << (n.reflexive ? " reflexive" : "") << "\n";
    }
    for (const auto& e : q.edges) std::cout << q.nodes[static_cast<std::size_t>(e.from)].label << " -> "
                                            << q.nodes[static_cast<std::size_t>(e.to)].label << "\n";
    for (const auto& b : q.branches)
      std::cout << "branch from " << q.nodes[static_cast<std::size_t>(b.seed)].label << ": " << b.steps << " steps, "
                << terminationName(b.reason) << "\n";
  }
  return Ok;
}

template <class S>
int selfInjective(const AlgebraPtr<S>& a, const Settings& s) {
  const auto r = selfInjectivityReport(a);
  if (s.json) {
    Json out;
    out["schema_version"] = kSchemaVersion;
    out["selfInjective"] = selfInjectiveJson(r);
    std::cout << out.dump(2) << '\n';
    return Ok;
  }
  std::cout << a->presentation.name << " is " << (r.verdict ? "" : "not ") << "self-injective\n";
  for (const auto& c : r.conditions) {
    std::cout << std::left << std::setw(8) << ("(" + c.id + ")") << std::setw(7) << (c.holds ? "true" : "false")
              << c.statement;
    if (!c.witness.empty()) std::cout << "  [" << c.witness << "]";
    std::cout << "\n";
  }
  const auto kasch = isKasch(a);
  const auto qf2 = isQF2(a);
  const auto qf3 = isQF3(a);
  std::cout << "left Kasch " << yesNo(kasch.holds) << ", left QF-2 " << yesNo(qf2.holds) << ", QF-3 " << yesNo(qf3.holds)
            << "\n";
  return Ok;
}

int census(const AlgebraPtr<F101>& a, const Settings& s) {
  CensusOptions options;
  options.limits.enumerationBudget = s.budget;
  options.latticeCrossCheck = s.lattice;
  const auto c = torsionlessCensus(a, options);
  if (s.json) {
    Json out;
    out["schema_version"] = kSchemaVersion;
    out["census"] = censusJson(a, c);
    std::cout << out.dump(2) << '\n';
    return Ok;
  }
  std::cout << c.members.size() << " torsionless indecomposables\n";
  for (std::size_t k = 0; k < c.members.size(); ++k)
    std::cout << "  " << std::left << std::setw(12) << c.labels[k] << dimVectorString(c.members[k]) << "\n";
  std::cout << c.completeness << "\n";
  return Ok;
}

int verifyPaper(const Settings& s) {
  const auto results = verifyCorpus(dataDir(s));
  bool ok = true;
  Json doc = Json::array();
  for (const auto& r : results) {
    ok = ok && r.ok();
    if (s.json) {
      Json checks = Json::array();
      for (const auto& c : r.checks)
        checks.push_back(Json{{"key", c.key}, {"expected", c.expected}, {"actual", c.actual}, {"provenance", c.provenance},
                              {"matches", c.matches}});
      doc.push_back(Json{{"name", r.name}, {"ok", r.ok()}, {"builderMatches", r.presentationMatchesBuilder}, {"checks", checks}});
      continue;
    }
    int passed = 0;
    for (const auto& c : r.checks) passed += c.matches;
    std::cout << (r.ok() ? "ok   " : "FAIL ") << std::left << std::setw(20) << r.name << passed << "/" << r.checks.size()
              << " facts\n";
    if (!r.presentationMatchesBuilder) std::cout << "     presentation file differs from the builder\n";
    for (const auto& c : r.checks) {
      if (c.matches) continue;
      std::cout << "     " << c.key << ": expected " << c.expected.dump() << ", got "
                << (c.error.empty() ? c.actual.dump() : "error: " + c.error) << "\n";
    }
  }
  if (s.json) std::cout << Json{{"schema_version", kSchemaVersion}, {"files", doc}, {"ok", ok}}.dump(2) << '\n';
  return ok ? Ok : Mismatch;
}

template <class F>
int withAlgebra(const Settings& s, F&& body) {
  const Presentation p = loadPresentation(s.file);
  const std::string& field = p.field;
  if (field == "F2") return body(buildAlgebra<F2>(p));
  if (field == "F3") return body(buildAlgebra<F3>(p));
  if (field == "F5") return body(buildAlgebra<F5>(p));
  if (field == "F7") return body(buildAlgebra<F7>(p));
  if (field == "F101") return body(buildAlgebra<F101>(p));
  if (field == "Q") return body(buildAlgebra<Rational>(p));
  throw InvalidPresentation("unsupported field " + field);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-dimensional algebras: A-duals, reflexive modules, mho quivers, self-injectivity"};
  app.require_subcommand(1);
  Settings s;

  auto* infoCmd = app.add_subcommand("info", "dimension, basis and socle");
  auto* simplesCmd = app.add_subcommand("simples", "duals of the simple modules");
  auto* dualCmd = app.add_subcommand("dual", "A-dual of a module and the map to its double dual");
  auto* mhoCmd = app.add_subcommand("mho-quiver", "iterate mho from seed modules");
  auto* siCmd = app.add_subcommand("self-injective", "the self-injectivity conditions");
  auto* censusCmd = app.add_subcommand("census", "torsionless indecomposable modules");
  auto* reportCmd = app.add_subcommand("report", "full JSON report");
  auto* verifyCmd = app.add_subcommand("verify-paper", "replay every corpus fact file");

  for (auto* cmd : {infoCmd, simplesCmd, dualCmd, mhoCmd, siCmd, censusCmd, reportCmd})
    cmd->add_option("file", s.file, "presentation file")->required();
  for (auto* cmd : {infoCmd, simplesCmd, dualCmd, siCmd, censusCmd, verifyCmd}) cmd->add_flag("--json", s.json, "JSON output");
  simplesCmd->add_option("--check", s.check, "exit 5 unless every simple has the property")
      ->check(CLI::IsMember({"torsionless", "reflexive"}));
  dualCmd->add_option("--module", s.module, "S<v>, P<v>, I<v>, rad(P<v>), soc(P<v>), A or a module file")->required();
  mhoCmd->add_option("--seeds", s.seeds, "'simples' or ';'-separated module specs");
  mhoCmd->add_option("--max-steps", s.maxSteps, "step cap per branch")->check(CLI::NonNegativeNumber);
  mhoCmd->add_option("--format", s.format, "output format")->check(CLI::IsMember({"text", "json", "dot"}));
  for (auto* cmd : {simplesCmd, censusCmd, reportCmd}) cmd->add_option("--budget", s.budget, "matrix tuples per enumeration");
  censusCmd->add_flag("!--no-lattice", s.lattice, "skip the submodule lattice cross-check");
  verifyCmd->add_option("--data", s.dataDir, "data directory with corpus/, presentations/ and modules/");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return Usage;
  }

  try {
    if (*verifyCmd) return verifyPaper(s);
    if (*infoCmd) return withAlgebra(s, [&](const auto& a) { return info(a, s); });
    if (*dualCmd) return withAlgebra(s, [&](const auto& a) { return dual(a, s); });
    if (*mhoCmd) return withAlgebra(s, [&](const auto& a) { return mhoQuiverCommand(a, s); });
    if (*siCmd) return withAlgebra(s, [&](const auto& a) { return selfInjective(a, s); });
    if (*reportCmd)
      return withAlgebra(s, [&](const auto& a) {
        ReportOptions options;
        options.limits.enumerationBudget = s.budget;
        std::cout << fullReport(a, options).dump(2) << '\n';
        return static_cast<int>(Ok);
      });
    // Censuses and simple-dual scans enumerate over small fields and certify over F101.
    const auto a = buildAlgebra<F101>(loadPresentation(s.file));
    if (*simplesCmd) return simples(a, s);
    if (*censusCmd) return census(a, s);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return Parse;
  } catch (const InvalidPresentation& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return Parse;
  } catch (const AdmissibilityError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return Parse;
  } catch (const InvalidRepresentation& e) {
    std::cerr << "invalid module: " << e.what() << '\n';
    return Parse;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return Budget;
  } catch (const FieldTooSmall& e) {
    std::cerr << "cannot certify: " << e.what() << '\n';
    return Certification;
  } catch (const UndeterminedSummand& e) {
    std::cerr << "cannot certify: " << e.what() << '\n';
    return Certification;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return Internal;
  }
  return Usage;
}

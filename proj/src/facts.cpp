#include "quiverbench/facts.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "quiverbench/corpus.hpp"
#include "quiverbench/duality.hpp"
#include "quiverbench/module_io.hpp"
#include "quiverbench/presentation_io.hpp"

namespace qb {

namespace fs = std::filesystem;

namespace {

std::string readFile(const fs::path& p) {
  std::ifstream in(p);
  if (!in) throw InvalidPresentation("cannot open " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json intList(const std::vector<int>& v) {
  Json out = Json::array();
  for (int x : v) out.push_back(x);
  return out;
}

// "f(a,rad(P1))" -> {"f", {"a", "rad(P1)"}}; plain keys have no arguments.
std::pair<std::string, std::vector<std::string>> splitKey(const std::string& key) {
  const auto open = key.find('(');
  if (open == std::string::npos) return {key, {}};
  if (key.back() != ')') throw InvalidPresentation("malformed fact key '" + key + "'");
  std::vector<std::string> args;
  std::string cur;
  int depth = 0;
  for (std::size_t i = open + 1; i + 1 < key.size(); ++i) {
    const char ch = key[i];
    if (ch == ',' && depth == 0) {
      args.push_back(cur);
      cur.clear();
      continue;
    }
    depth += ch == '(' ? 1 : ch == ')' ? -1 : 0;
    cur += ch;
  }
  args.push_back(cur);
  return {key.substr(0, open), args};
}

Rep<F101> moduleArg(FactContext& ctx, const std::string& arg) {
  if (!arg.empty() && arg[0] == '@') return parseModule(ctx.algebra, readFile(ctx.dataDir / "modules" / arg.substr(1)));
  return namedModule(ctx.algebra, arg);
}

std::vector<std::vector<int>> sortedComponentSizes(const MhoQuiver<F101>& q) {
  std::vector<int> sizes;
  for (const auto& c : q.components()) sizes.push_back(static_cast<int>(c.size()));
  std::sort(sizes.begin(), sizes.end());
  return {sizes};
}

Json cached(FactContext& ctx, const std::string& name, const std::function<Json()>& compute) {
  auto it = ctx.cache.find(name);
  if (it == ctx.cache.end()) it = ctx.cache.emplace(name, compute()).first;
  return it->second;
}

Json censusSummary(FactContext& ctx) {
  return cached(ctx, "census", [&] {
    try {
      CensusOptions co;
      co.limits = ctx.limits;
      return censusJson(ctx.algebra, torsionlessCensus(ctx.algebra, co));
    } catch (const BudgetExceeded& e) {
      return Json{{"error", e.what()}};
    }
  });
}

Json simplesSummary(FactContext& ctx) {
  return cached(ctx, "simples", [&] { return simplesJson(ctx.algebra, simpleDualReport(ctx.algebra, ctx.limits)); });
}

Json selfInjSummary(FactContext& ctx) {
  return cached(ctx, "selfInjective", [&] { return selfInjectiveJson(selfInjectivityReport(ctx.algebra)); });
}

Json mhoSummary(FactContext& ctx) {
  return cached(ctx, "mho", [&] {
    const auto q = simplesMhoQuiver(ctx.algebra);
    Json out;
    out["components"] = intList(sortedComponentSizes(q).front());
    out["nodes"] = q.nodes.size();
    out["edges"] = q.edges.size();
    return out;
  });
}

Json perSimple(FactContext& ctx, const char* field) {
  const Json summary = simplesSummary(ctx);
  Json out = Json::array();
  for (const auto& s : summary["list"]) out.push_back(s[field]);
  return out;
}

}  // namespace

const std::vector<std::string>& algebraFactKeys() {
  static const std::vector<std::string> keys = {
      "dim", "vertexCount", "arrowCount", "relationCount", "loewyLength", "regularDims", "projectiveDims",
      "socleDim", "socleMultiplicities", "dualDims", "selfInjective", "kasch", "qf2", "qf3", "local",
      "radicalSquareZero", "censusCount", "censusDims", "censusLatticeAgrees", "torsionlessSimples",
      "reflexiveSimples", "reflexiveDualsAreTorsionlessBricks", "reflexiveDualsPairwiseOrthogonal",
      "mhoComponentSizes", "mhoNodeCount", "mhoEdgeCount"};
  return keys;
}

Json evaluateFact(FactContext& ctx, const std::string& key) {
  const auto& a = ctx.algebra;
  const auto [name, args] = splitKey(key);
  if (args.empty()) {
    if (name == "dim") return a->dim();
    if (name == "vertexCount") return a->vertexCount();
    if (name == "arrowCount") return a->quiver().arrowCount();
    if (name == "relationCount") return a->presentation.relations.size();
    if (name == "loewyLength") return a->loewyLength;
    if (name == "regularDims") return intList(regularRep(a).dims);
    if (name == "projectiveDims") {
      std::vector<int> d;
      for (int v = 0; v < a->vertexCount(); ++v) d.push_back(projective(a, v).dim());
      return intList(d);
    }
    if (name == "socleDim") return socleLeftRegular(*a).cols();
    if (name == "socleMultiplicities") return selfInjSummary(ctx)["socleMultiplicities"];
    if (name == "dualDims") return selfInjSummary(ctx)["dualDims"];
    if (name == "selfInjective") return selfInjSummary(ctx)["verdict"];
    if (name == "kasch") return isKasch(a).holds;
    if (name == "qf2") return isQF2(a).holds;
    if (name == "qf3") return isQF3(a).holds;
    if (name == "local") return isLocal(*a);
    if (name == "radicalSquareZero") return isRadicalSquareZero(*a);
    if (name == "censusCount") {
      const Json c = censusSummary(ctx);
      return c.contains("error") ? Json(nullptr) : c["count"];
    }
    if (name == "censusDims") {
      const Json c = censusSummary(ctx);
      if (c.contains("error")) return nullptr;
      std::vector<std::vector<int>> dims;
      for (const auto& m : c["members"]) dims.push_back(m["dims"].get<std::vector<int>>());
      std::sort(dims.begin(), dims.end());
      return dims;
    }
    if (name == "censusLatticeAgrees") {
      const Json c = censusSummary(ctx);
      return c.contains("error") ? Json(nullptr) : c["latticeAgrees"];
    }
    if (name == "torsionlessSimples") return perSimple(ctx, "torsionless");
    if (name == "reflexiveSimples") return perSimple(ctx, "reflexive");
    if (name == "reflexiveDualsAreTorsionlessBricks") return simplesSummary(ctx)["reflexiveDualsAreTorsionlessBricks"];
    if (name == "reflexiveDualsPairwiseOrthogonal") return simplesSummary(ctx)["reflexiveDualsPairwiseOrthogonal"];
    if (name == "mhoComponentSizes") return mhoSummary(ctx)["components"];
    if (name == "mhoNodeCount") return mhoSummary(ctx)["nodes"];
    if (name == "mhoEdgeCount") return mhoSummary(ctx)["edges"];
    throw InvalidPresentation("unknown fact key '" + key + "'");
  }

  if (args.size() == 1) {
    const Rep<F101> m = moduleArg(ctx, args[0]);
    if (name == "dim") return m.dim();
    if (name == "dims") return intList(m.dims);
    if (name == "torsionless") return isTorsionless(m);
    if (name == "reflexive") return isReflexive(m);
    if (name == "brick") return isBrick(m);
    if (name == "projective") return isProjective(m);
    if (name == "indecomposable") return isIndecomposable(m).verdict == Indecomposability::Yes;
    if (name == "dualDim") return aDual(m).dim();
    if (name == "doubleDualDim") return phi(m).doubleDual().dim();
    if (name == "phiCokernelDims") return intList(phi(m).cokernel.dims);
    if (name == "mhoDim") return mho(m).dim();
    if (name == "mhoTorsionless") return isTorsionless(mho(m));
    if (name == "approximationTargetDim") return minimalLeftApprox(m).target.dim();
  } else if (args.size() == 2) {
    const Rep<F101> m = moduleArg(ctx, args[0]);
    const Rep<F101> n = moduleArg(ctx, args[1]);
    if (name == "homDim") return homDim(m, n);
    if (name == "ext1") return ext1(m, n);
    if (name == "iso") return isIso(m, n);
    if (name == "mhoIso") return isIso(mho(m), n);
    if (name == "doubleDualIso") {
      return isIso(phi(m).doubleDual(), n);
    }
    if (name == "orthogonalDuals") return areOrthogonal(aDual(m), aDual(n));
  }
  throw InvalidPresentation("unknown fact key '" + key + "'");
}

bool FactFileResult::ok() const {
  return presentationMatchesBuilder &&
         std::all_of(checks.begin(), checks.end(), [](const FactCheck& c) { return c.matches; });
}

Presentation loadPresentation(const fs::path& file, const fs::path& dataDir) {
  fs::path p = file;
  if (p.is_relative() && !dataDir.empty() && !fs::exists(p)) p = dataDir / "presentations" / file;
  return parsePresentation(readFile(p));
}

FactFileResult verifyFactFile(const fs::path& file, const fs::path& dataDir) {
  const Json doc = Json::parse(readFile(file));
  FactFileResult out;
  out.file = file;
  out.name = doc.at("name").get<std::string>();
  const Presentation p = loadPresentation(doc.at("presentation").get<std::string>(), dataDir);
  for (const auto& entry : corpus())
    if (entry.name == out.name) out.presentationMatchesBuilder = entry.presentation == p;

  FactContext ctx;
  ctx.dataDir = dataDir;
  ctx.algebra = buildAlgebra<F101>(p);
  for (const auto& f : doc.at("facts")) {
    FactCheck c;
    c.key = f.at("key").get<std::string>();
    c.expected = f.at("expected");
    c.provenance = f.value("provenance", "");
    c.note = f.value("note", "");
    try {
      c.actual = evaluateFact(ctx, c.key);
      c.matches = c.actual == c.expected;
    } catch (const Error& e) {
      c.error = e.what();
    }
    out.checks.push_back(std::move(c));
  }
  return out;
}

std::vector<FactFileResult> verifyCorpus(const fs::path& dataDir) {
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dataDir / "corpus"))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<FactFileResult> out;
  for (const auto& f : files) out.push_back(verifyFactFile(f, dataDir));
  return out;
}

}  // namespace qb

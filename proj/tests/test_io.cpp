#include <doctest.h>

#include <cstdlib>
#include <regex>

#include "fixtures.hpp"
#include "quiverbench/duality.hpp"
#include "quiverbench/facts.hpp"
#include "quiverbench/module_io.hpp"
#include "quiverbench/presentation_io.hpp"
#include "quiverbench/report.hpp"

using namespace qb;
using namespace qbtest;

namespace {

int countMatches(const std::string& text, const std::regex& re) {
  return static_cast<int>(std::distance(std::sregex_iterator(text.begin(), text.end(), re), std::sregex_iterator()));
}

int runCli(const std::string& args) {
  const std::string cmd = std::string(QB_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

const std::string kData = QB_DATA_DIR;

}  // namespace

TEST_CASE("module files round-trip") {
  const auto a = algebraA2();
  const auto b = parseModule(a, "# B\ndims 1 1\narrow b : 1\n");
  CHECK(isIso(b, moduleB(a)));
  const auto c = parseModule(a, "dims 2 0\narrow c : 0 0 ; 1 0\n");
  CHECK(isIso(c, moduleC(a)));
  for (const auto& m : {regularRep(a), projective(a, 1), moduleB(a), radicalRep(projective(a, 1)).rep}) {
    const auto back = parseModule(a, printModule(m));
    CHECK(back.dims == m.dims);
    CHECK(back.arrows == m.arrows);
  }
  const auto q = buildAlgebra<Rational>(familyA2().presentation);
  const auto frac = parseModule(q, "dims 1 1\narrow b : -3/4\n");
  CHECK(printModule(frac) == "dims 1 1\narrow c : 0\narrow b : -3/4\narrow x : 0\narrow y : 0\n");
}

TEST_CASE("module file errors carry positions") {
  const auto a = algebraA2();
  try {
    parseModule(a, "dims 1 1\narrow b : 1 2\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parseModule(a, "dims 1\n"), ParseError);
  CHECK_THROWS_AS(parseModule(a, "arrow b : 1\n"), ParseError);
  CHECK_THROWS_AS(parseModule(a, "dims 1 1\narrow z : 1\n"), ParseError);
  CHECK_THROWS_AS(parseModule(a, "dims 1 1\narrow b : 1/0\n"), ParseError);
  CHECK_THROWS_AS(parseModule(a, "dims 2 1\narrow y : 1 ; 0\narrow b : 1 0\n"), InvalidRepresentation);
}

TEST_CASE("named modules") {
  const auto a = algebraA2();
  CHECK(isIso(namedModule(a, "S1"), simple(a, 0)));
  CHECK(isIso(namedModule(a, "P2"), projective(a, 1)));
  CHECK(namedModule(a, "rad(P1)").dim() == 2);
  CHECK(namedModule(a, "soc(P2)").dim() == 2);
  CHECK(namedModule(a, "A").dim() == 8);
  CHECK(namedModule(a, "I1").dim() == injectiveEnvelope(simple(a, 0)).injective.dim());
  CHECK_THROWS_AS(namedModule(a, "S9"), InvalidRepresentation);
  CHECK_THROWS_AS(namedModule(a, "Q1"), InvalidRepresentation);
}

TEST_CASE("mho quiver DOT for A2 has six nodes and four edges") {
  const auto a = algebraA2();
  const std::string dot = mhoQuiverDot(simplesMhoQuiver(a), "A2");
  CHECK(countMatches(dot, std::regex(R"(\n\d+\[label=)")) == 6);
  CHECK(countMatches(dot, std::regex(R"(\n\d+->\d+)")) == 4);
  CHECK(dot.rfind("digraph", 0) == 0);
}

TEST_CASE("reports are deterministic and keep key order") {
  const auto a = algebraA2();
  const std::string first = fullReport(a).dump();
  const std::string second = fullReport(algebraA2()).dump();
  CHECK(first == second);
  const Json doc = Json::parse(first);
  std::vector<std::string> keys;
  for (auto it = doc.begin(); it != doc.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"schema_version", "algebra", "socle", "simples", "selfInjective", "census", "mhoQuiver"});
  CHECK(doc["algebra"]["dim"] == 8);
  CHECK(doc["socle"]["basis"] == Json::array({"b", "c", "bx", "cy"}));
  CHECK(doc["census"]["count"] == 6);
  CHECK(doc["selfInjective"]["verdict"] == false);
  CHECK(doc["mhoQuiver"]["edges"].size() == 4);
  const auto lc = buildAlgebra<F101>(localTruncated(LocalKind::Commutative).presentation);
  CHECK(fullReport(lc)["census"].contains("error"));
}

TEST_CASE("fact evaluation") {
  FactContext ctx;
  ctx.dataDir = kData;
  ctx.algebra = algebraA2();
  CHECK(evaluateFact(ctx, "dim") == 8);
  CHECK(evaluateFact(ctx, "reflexive(S1)") == true);
  CHECK(evaluateFact(ctx, "homDim(P1,rad(P2))") == homDim(projective(ctx.algebra, 0), radicalRep(projective(ctx.algebra, 1)).rep));
  CHECK(evaluateFact(ctx, "iso(@a2_B.mod,@a2_B.mod)") == true);
  CHECK(evaluateFact(ctx, "dims(@a2_P2_mod_Ax.mod)") == Json::array({2, 1}));
  CHECK(evaluateFact(ctx, "dims(@a2_P2_mod_Ay.mod)") == Json::array({1, 2}));
  CHECK_THROWS_AS(evaluateFact(ctx, "nonsense"), InvalidPresentation);
  CHECK_THROWS_AS(evaluateFact(ctx, "dim(S1,S2,S1)"), InvalidPresentation);
  for (const auto& key : algebraFactKeys()) CHECK_NOTHROW(evaluateFact(ctx, key));
}

TEST_CASE("shipped fact files replay") {
  const auto results = verifyCorpus(kData);
  CHECK(results.size() == corpus().size());
  for (const auto& r : results) {
    CAPTURE(r.name);
    CHECK(r.presentationMatchesBuilder);
    for (const auto& c : r.checks) {
      CAPTURE(c.key);
      CHECK(c.error.empty());
      CHECK(c.matches);
    }
  }
  const auto p = loadPresentation("a2.quiv", kData);
  CHECK(p.quiver.vertexCount() == 2);
  CHECK(p.quiver.arrowCount() == 4);
  CHECK(p.relations.size() == 6);
}

TEST_CASE("command-line exit codes") {
  const std::string a2 = kData + "/presentations/a2.quiv";
  CHECK(runCli("info " + a2) == 0);
  CHECK(runCli("census " + a2) == 0);
  CHECK(runCli("self-injective " + a2 + " --json") == 0);
  CHECK(runCli("dual " + a2 + " --module " + kData + "/modules/a2_C.mod") == 0);
  CHECK(runCli("mho-quiver " + a2 + " --format dot --max-steps 4") == 0);
  CHECK(runCli("") == 1);
  CHECK(runCli("info") == 1);
  CHECK(runCli("mho-quiver " + a2 + " --format svg") == 1);
  CHECK(runCli("info /nonexistent.quiv") == 2);
  CHECK(runCli("census " + kData + "/presentations/a2.quiv --budget 10") == 3);
  CHECK(runCli("simples " + kData + "/presentations/threevertex.quiv --check reflexive") == 5);
  CHECK(runCli("simples " + kData + "/presentations/nakayama3_l2.quiv --check reflexive") == 0);
}

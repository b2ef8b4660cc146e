#include "quiverbench/report.hpp"

#include <sstream>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/graphviz.hpp>

#include "quiverbench/duality.hpp"

namespace qb {

namespace {

Json intList(const std::vector<int>& v) {
  Json out = Json::array();
  for (int x : v) out.push_back(x);
  return out;
}

template <class S>
Json matrixJson(const Matrix<S>& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(FieldTraits<S>::format(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string vertexName(const Quiver& q, int v) { return q.vertices[static_cast<std::size_t>(v)]; }

}  // namespace

template <class S>
Json algebraJson(const AlgebraPtr<S>& a) {
  const Quiver& q = a->quiver();
  Json out;
  out["name"] = a->presentation.name;
  out["field"] = FieldTraits<S>::name();
  out["dim"] = a->dim();
  out["vertices"] = q.vertices;
  Json arrows = Json::array();
  for (const Arrow& ar : q.arrows)
    arrows.push_back(Json{{"name", ar.name}, {"source", vertexName(q, ar.source)}, {"target", vertexName(q, ar.target)}});
  out["arrows"] = std::move(arrows);
  out["basis"] = a->labels;
  out["loewyLength"] = a->loewyLength;
  return out;
}

template <class S>
Json socleJson(const AlgebraPtr<S>& a) {
  const Matrix<S> soc = socleLeftRegular(*a);
  Json basis = Json::array();
  for (Index j = 0; j < soc.cols(); ++j) basis.push_back(formatElement(*a, Vector<S>(soc.col(j))));
  Json out;
  out["dim"] = soc.cols();
  out["basis"] = std::move(basis);
  out["multiplicities"] = intList(socleMultiplicities(regularRep(a)));
  return out;
}

template <class S>
Json moduleJson(const Rep<S>& m) {
  const Quiver& q = m.algebra->quiver();
  Json out;
  out["dims"] = intList(m.dims);
  Json arrows;
  for (int ai = 0; ai < q.arrowCount(); ++ai)
    arrows[q.arrows[static_cast<std::size_t>(ai)].name] = matrixJson(m.arrows[static_cast<std::size_t>(ai)]);
  out["arrows"] = arrows.is_null() ? Json::object() : arrows;
  return out;
}

Json selfInjectiveJson(const SelfInjReport& r) {
  Json out;
  out["verdict"] = r.verdict;
  Json conditions;
  Json witnesses;
  for (const auto& c : r.conditions) {
    conditions[c.id] = c.holds;
    if (!c.witness.empty()) witnesses[c.id] = c.witness;
  }
  out["conditions"] = std::move(conditions);
  out["witnesses"] = witnesses.is_null() ? Json::object() : witnesses;
  out["socleMultiplicities"] = intList(r.socleMultiplicities);
  out["dualDims"] = intList(r.dualDims);
  return out;
}

Json simplesJson(const AlgebraPtr<F101>& a, const SimpleDualReport& r) {
  const Quiver& q = a->quiver();
  Json list = Json::array();
  for (const auto& e : r.simples) {
    Json s;
    s["name"] = "S" + vertexName(q, e.vertex);
    s["dualDim"] = e.dualDim;
    s["dualDims"] = intList(e.dualDims);
    s["dualBrick"] = e.dualBrick;
    s["torsionless"] = e.torsionless;
    s["reflexive"] = e.reflexive;
    s["phiCokernelDims"] = intList(e.phiCokernelDims);
    if (e.factorScanRan) s["torsionlessFactorsOfDual"] = e.noTorsionlessFactor ? 0 : 1;
    list.push_back(std::move(s));
  }
  Json orth = Json::array();
  for (const auto& row : r.orthogonal) {
    Json jr = Json::array();
    for (bool b : row) jr.push_back(b);
    orth.push_back(std::move(jr));
  }
  Json out;
  out["list"] = std::move(list);
  out["orthogonalDuals"] = std::move(orth);
  out["reflexiveDualsAreTorsionlessBricks"] = r.reflexiveDualsTorsionlessBricks;
  out["reflexiveDualsPairwiseOrthogonal"] = r.reflexiveDualsOrthogonal;
  out["allReflexiveOneDualNonSimple"] = r.reflexiveWithOneNonSimpleDual;
  out["allDualsSimple"] = r.dualsSimpleAndSelfInjective;
  return out;
}

Json censusJson(const AlgebraPtr<F101>& a, const CensusResult& c) {
  (void)a;
  Json members = Json::array();
  for (std::size_t k = 0; k < c.members.size(); ++k)
    members.push_back(Json{{"label", c.labels[k]}, {"dims", intList(c.members[k].dims)}});
  Json out;
  out["count"] = c.members.size();
  out["members"] = std::move(members);
  out["cap"] = intList(c.cap);
  out["latticeChecked"] = c.latticeChecked;
  out["latticeAgrees"] = c.latticeAgrees;
  out["latticeSize"] = c.latticeSize;
  out["completeness"] = c.completeness;
  return out;
}

template <class S>
Json mhoQuiverJson(const MhoQuiver<S>& q) {
  Json nodes = Json::array();
  for (std::size_t i = 0; i < q.nodes.size(); ++i) {
    const auto& n = q.nodes[i];
    nodes.push_back(Json{{"id", i},
                         {"label", n.label},
                         {"dims", intList(n.rep.dims)},
                         {"flags",
                          {{"projective", n.projective},
                           {"torsionless", n.torsionless},
                           {"reflexive", n.reflexive},
                           {"indecomposable", n.indecomposable}}}});
  }
  Json edges = Json::array();
  for (const auto& e : q.edges) edges.push_back(Json{{"from", e.from}, {"to", e.to}});
  Json branches = Json::array();
  for (const auto& b : q.branches)
    branches.push_back(Json{{"seed", b.seed}, {"steps", b.steps}, {"termination", terminationName(b.reason)}});
  Json comps = Json::array();
  for (const auto& c : q.components()) comps.push_back(intList(c));
  Json out;
  out["nodes"] = std::move(nodes);
  out["edges"] = std::move(edges);
  out["branches"] = std::move(branches);
  out["components"] = std::move(comps);
  return out;
}

template <class S>
std::string mhoQuiverDot(const MhoQuiver<S>& q, const std::string& name) {
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::directedS>;
  Graph g(q.nodes.size());
  for (const auto& e : q.edges) boost::add_edge(static_cast<std::size_t>(e.from), static_cast<std::size_t>(e.to), g);
  const auto writeNode = [&](std::ostream& out, std::size_t v) {
    const auto& n = q.nodes[v];
    out << "[label=\"" << n.label << "\\n" << dimVectorString(n.rep) << "\"";
    if (n.projective) out << ", shape=box";
    if (!n.torsionless) out << ", style=dashed";
    if (n.reflexive) out << ", peripheries=2";
    out << "]";
  };
  const auto writeGraph = [&](std::ostream& out) { out << "label=\"" << name << "\";\n"; };
  std::ostringstream out;
  boost::write_graphviz(out, g, writeNode, boost::default_writer(), writeGraph);
  return out.str();
}

template <class S>
MhoQuiver<S> simplesMhoQuiver(const AlgebraPtr<S>& a, int maxSteps) {
  std::vector<Rep<S>> seeds;
  std::vector<std::string> labels;
  for (int v = 0; v < a->vertexCount(); ++v) {
    seeds.push_back(simple(a, v));
    labels.push_back("S" + vertexName(a->quiver(), v));
  }
  return mhoQuiver(seeds, labels, maxSteps);
}

template <class S>
Json fullReport(const AlgebraPtr<S>& a, const ReportOptions& options) {
  Json out;
  out["schema_version"] = kSchemaVersion;
  out["algebra"] = algebraJson(a);
  out["socle"] = socleJson(a);
  const auto a101 = buildAlgebra<F101>(a->presentation);
  out["simples"] = simplesJson(a101, simpleDualReport(a101, options.limits));
  out["selfInjective"] = selfInjectiveJson(selfInjectivityReport(a));
  try {
    CensusOptions co;
    co.limits = options.limits;
    out["census"] = censusJson(a101, torsionlessCensus(a101, co));
  } catch (const BudgetExceeded& e) {
    out["census"] = Json{{"error", e.what()}};
  }
  out["mhoQuiver"] = mhoQuiverJson(simplesMhoQuiver(a, options.maxSteps));
  return out;
}

#define QB_INSTANTIATE_REPORT(S)                                                      \
  template Json algebraJson<S>(const AlgebraPtr<S>&);                                 \
  template Json socleJson<S>(const AlgebraPtr<S>&);                                   \
  template Json moduleJson<S>(const Rep<S>&);                                         \
  template Json mhoQuiverJson<S>(const MhoQuiver<S>&);                                \
  template std::string mhoQuiverDot<S>(const MhoQuiver<S>&, const std::string&);     \
  template MhoQuiver<S> simplesMhoQuiver<S>(const AlgebraPtr<S>&, int);               \
  template Json fullReport<S>(const AlgebraPtr<S>&, const ReportOptions&);
QB_FOR_EACH_FIELD(QB_INSTANTIATE_REPORT)

}  // namespace qb

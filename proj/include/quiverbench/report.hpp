#pragma once

// JSON and DOT renderings of the computed data. Key order is fixed and
// matrix entries are strings ("a/b" for fractions), so equal inputs give
// byte-identical output.

#include <string>

#include <json.hpp>

#include "quiverbench/approximation.hpp"
#include "quiverbench/classification.hpp"

namespace qb {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

template <class S>
Json algebraJson(const AlgebraPtr<S>& a);

/// Basis of the socle of A as a left module, with simple multiplicities.
template <class S>
Json socleJson(const AlgebraPtr<S>& a);

template <class S>
Json moduleJson(const Rep<S>& m);

Json selfInjectiveJson(const SelfInjReport& r);

Json simplesJson(const AlgebraPtr<F101>& a, const SimpleDualReport& r);

Json censusJson(const AlgebraPtr<F101>& a, const CensusResult& c);

template <class S>
Json mhoQuiverJson(const MhoQuiver<S>& q);

template <class S>
std::string mhoQuiverDot(const MhoQuiver<S>& q, const std::string& name);

/// mho quiver seeded by all simples.
template <class S>
MhoQuiver<S> simplesMhoQuiver(const AlgebraPtr<S>& a, int maxSteps = 16);

struct ReportOptions {
  int maxSteps = 16;
  ClassificationOptions limits;
};

/// The full document: algebra, socle, simples, selfInjective, census,
/// mhoQuiver. Simples and census are computed over F101 from the same
/// presentation; sections that run out of budget carry an "error" entry.
template <class S>
Json fullReport(const AlgebraPtr<S>& a, const ReportOptions& options = {});

}  // namespace qb

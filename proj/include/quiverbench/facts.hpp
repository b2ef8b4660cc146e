#pragma once

// Expected-fact files and their replay.
//
// A fact file (data/corpus/<name>.json) names a presentation file and lists
// facts as {key, expected, provenance[, note]}. Keys are either plain
// algebra invariants ("dim", "censusCount", ...) or module queries such as
// "reflexive(S1)", "mhoDim(@a2_C.mod)" and "doubleDualIso(S2,P3)"; module
// arguments are named constructions or @files relative to data/modules.

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "quiverbench/report.hpp"

namespace qb {

struct FactContext {
  std::filesystem::path dataDir;
  AlgebraPtr<F101> algebra;
  ClassificationOptions limits;
  // Expensive whole-algebra results, computed on first use.
  std::map<std::string, Json> cache;
};

/// Value of one fact key; throws InvalidPresentation for unknown keys.
Json evaluateFact(FactContext& ctx, const std::string& key);

/// Plain keys understood by evaluateFact.
const std::vector<std::string>& algebraFactKeys();

struct FactCheck {
  std::string key;
  Json expected;
  Json actual;
  std::string provenance;
  std::string note;
  bool matches = false;
  std::string error;  // evaluation failure
};

struct FactFileResult {
  std::string name;
  std::filesystem::path file;
  std::vector<FactCheck> checks;
  bool presentationMatchesBuilder = true;

  bool ok() const;
};

FactFileResult verifyFactFile(const std::filesystem::path& file, const std::filesystem::path& dataDir);

/// Every *.json under dataDir/corpus, in file-name order.
std::vector<FactFileResult> verifyCorpus(const std::filesystem::path& dataDir);

/// Loads a presentation file (relative paths resolve against dataDir/presentations).
Presentation loadPresentation(const std::filesystem::path& file, const std::filesystem::path& dataDir = {});

}  // namespace qb

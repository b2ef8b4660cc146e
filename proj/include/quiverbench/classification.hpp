#pragma once

// Desk-scale exhaustive searches and the socle characterisations of
// self-injectivity: submodule lattices over F2/F3, enumeration of small
// indecomposables, the torsionless census, and reports on the duals of
// simple modules.

#include <cstdint>
#include <string>
#include <vector>

#include "quiverbench/rep.hpp"

namespace qb {

struct ClassificationOptions {
  int latticeCap = 10;                        // max ambient dimension for lattices
  std::uint64_t enumerationBudget = 1u << 22; // max matrix tuples per enumeration
};

// ---- submodule lattices ------------------------------------------------------

template <class S>
struct SubmoduleLattice {
  Rep<S> ambient;
  std::vector<Matrix<S>> submodules;  // global column bases, by dimension then echelon form

  int count() const { return static_cast<int>(submodules.size()); }
};

/// All submodules of m over F2 or F3: cyclic submodules of every nonzero
/// vector, closed under sums. `reverse` walks the generators backwards.
template <class S>
SubmoduleLattice<S> submoduleLattice(const Rep<S>& m, int cap = 10, bool reverse = false);

// ---- enumeration ---------------------------------------------------------------

/// Indecomposable modules with dimension vector <= cap, one per isomorphism
/// class, found by running over all arrow matrices with entries in E (F2 or
/// F3) and lifting them to F101. Modules must be killed by the columns of
/// `killed` (an ideal of A, possibly empty).
template <class E>
std::vector<Rep<F101>> enumerateIndecomposables(const AlgebraPtr<F101>& a, const std::vector<int>& cap,
                                                const Matrix<F101>& killed = Matrix<F101>(),
                                                std::uint64_t budget = ClassificationOptions{}.enumerationBudget);

// ---- torsionless census ----------------------------------------------------------

struct CensusOptions {
  ClassificationOptions limits;
  bool latticeCrossCheck = true;
};

struct CensusResult {
  std::vector<Rep<F101>> members;  // projectives first
  std::vector<std::string> labels;
  std::vector<int> cap;            // dimension cap used for enumeration
  Matrix<F101> annihilator;        // left annihilator of J
  bool latticeChecked = false;     // the F2 cross-check ran
  bool latticeAgrees = false;      // it found exactly the census classes
  int latticeSize = 0;
  std::string completeness;        // "proved within cap" / "cross-checked" wording
};

/// Projectives together with the indecomposables of A/Ann(J) cogenerated by J.
CensusResult torsionlessCensus(const AlgebraPtr<F101>& a, const CensusOptions& options = {});

/// Dimension cap for the census: one more than the largest dimension of an
/// indecomposable projective or injective A/Ann(J)-module at each vertex.
std::vector<int> censusCap(const AlgebraPtr<F101>& a, const Matrix<F101>& annihilator);

// ---- self-injectivity ------------------------------------------------------------

struct Condition {
  std::string id;   // "i", "ii", ..., "v'", ...
  std::string statement;
  bool holds = false;
  std::string witness;
};

struct SelfInjReport {
  std::vector<Condition> conditions;
  bool verdict = false;
  std::vector<int> socleMultiplicities;
  std::vector<int> dualDims;  // dim S(i)*
};

/// Evaluates each condition independently and throws InternalError unless
/// they agree.
template <class S>
SelfInjReport selfInjectivityReport(const AlgebraPtr<S>& a);

struct PropertyVerdict {
  bool holds = false;
  std::string witness;
};

template <class S>
PropertyVerdict isKasch(const AlgebraPtr<S>& a);

template <class S>
PropertyVerdict isQF2(const AlgebraPtr<S>& a);

template <class S>
PropertyVerdict isQF3(const AlgebraPtr<S>& a);

template <class S>
bool isSelfInjective(const AlgebraPtr<S>& a);

// ---- duals of simples ------------------------------------------------------------

struct SimpleDualEntry {
  int vertex = 0;
  int dualDim = 0;
  std::vector<int> dualDims;
  bool dualSimple = false;
  bool dualBrick = false;
  bool torsionless = false;
  bool reflexive = false;
  std::vector<int> phiCokernelDims;
  // Factor scan of S* (reflexive S only).
  bool factorScanRan = false;
  int factorsChecked = 0;
  bool noTorsionlessFactor = false;
};

struct SimpleDualReport {
  std::vector<SimpleDualEntry> simples;
  std::vector<std::vector<bool>> orthogonal;  // duals pairwise
  bool reflexiveDualsTorsionlessBricks = true;  // every reflexive S: S* torsionless brick, no torsionless proper factor
  bool reflexiveDualsOrthogonal = true;         // reflexive pairs have orthogonal brick duals
  // All simples reflexive with at most one non-simple dual; then every dual
  // should be simple and A self-injective.
  bool reflexiveWithOneNonSimpleDual = false;
  bool dualsSimpleAndSelfInjective = false;
  std::string remark;
};

/// Factor modules of S* are scanned over F3 with the lattice of S*; the
/// field-independent test "every nonzero map S* -> A is injective" is run
/// alongside as a cross-check.
SimpleDualReport simpleDualReport(const AlgebraPtr<F101>& a, const ClassificationOptions& options = {});

enum class AlgebraClass { QF2, DualSimples, RadSquareZero, Local };

std::string algebraClassName(AlgebraClass c);

struct ScanVerdict {
  AlgebraClass algebraClass = AlgebraClass::QF2;
  bool selfInjective = false;
  bool vacuous = false;
  int witnessVertex = -1;    // simple lacking the property
  std::string witnessKind;   // "not torsionless" / "not reflexive"
};

/// Contrapositive of the statements "all simples torsionless (reflexive) in
/// this class implies self-injective". Throws InvalidPresentation when a is
/// not in the class and InternalError when no witness exists.
ScanVerdict contrapositiveScan(const AlgebraPtr<F101>& a, AlgebraClass c);

bool inClass(const AlgebraPtr<F101>& a, AlgebraClass c);

}  // namespace qb

#include "quiverbench/corpus.hpp"

#include "quiverbench/presentation_io.hpp"

namespace qb {

namespace {

Presentation skeleton(std::string name, int vertices) {
  Presentation p;
  p.name = std::move(name);
  for (int v = 1; v <= vertices; ++v) p.quiver.vertices.push_back(std::to_string(v));
  return p;
}

void addArrow(Presentation& p, std::string name, int source, int target) {
  p.quiver.arrows.push_back({std::move(name), source - 1, target - 1});
}

void addRelation(Presentation& p, const std::string& text) { p.relations.push_back(parseRelation(p.quiver, text)); }

}  // namespace

CorpusEntry familyA2() {
  Presentation p = skeleton("A2", 2);
  addArrow(p, "c", 1, 1);
  addArrow(p, "b", 1, 2);
  addArrow(p, "x", 2, 1);
  addArrow(p, "y", 2, 1);
  for (const char* r : {"c*x", "b*y", "c*c", "b*c", "x*b", "y*b"}) addRelation(p, r);
  return {"A2", p, false};
}

CorpusEntry familyAn(int n) {
  if (n == 2) return familyA2();
  if (n < 3) throw InvalidPresentation("familyAn needs n >= 2");
  Presentation p = skeleton("A" + std::to_string(n), n);
  addArrow(p, "c", 1, 1);
  addArrow(p, "b", 1, 2);
  addArrow(p, "x", n, 1);
  addArrow(p, "y", n, 1);
  for (int i = 2; i < n; ++i) addArrow(p, "a" + std::to_string(i), i, i + 1);
  for (const char* r : {"c*x", "b*y", "c*c", "b*c", "a2*b"}) addRelation(p, r);
  for (int i = 2; i + 1 < n; ++i) addRelation(p, "a" + std::to_string(i + 1) + "*a" + std::to_string(i));
  const std::string last = "a" + std::to_string(n - 1);
  addRelation(p, "x*" + last);
  addRelation(p, "y*" + last);
  return {p.name, p, false};
}

CorpusEntry threeVertexExample() {
  Presentation p = skeleton("ThreeVertex", 3);
  addArrow(p, "a", 2, 1);
  addArrow(p, "b", 3, 2);
  addRelation(p, "a*b");
  return {p.name, p, false};
}

CorpusEntry nakayamaCycle(int n, bool radSquareZero) {
  if (n < 1) throw InvalidPresentation("nakayamaCycle needs n >= 1");
  const int length = radSquareZero ? 2 : 3;
  Presentation p = skeleton("Nakayama" + std::to_string(n) + "_L" + std::to_string(length), n);
  for (int i = 1; i <= n; ++i) addArrow(p, "a" + std::to_string(i), i, i % n + 1);
  for (int i = 1; i <= n; ++i) {
    std::string word;
    for (int k = length - 1; k >= 0; --k) {
      if (!word.empty()) word += '*';
      word += "a" + std::to_string((i - 1 + k) % n + 1);
    }
    addRelation(p, word);
  }
  return {p.name, p, true};
}

CorpusEntry localTruncated(LocalKind kind, int power) {
  Presentation p = skeleton("", 1);
  switch (kind) {
    case LocalKind::Truncated: {
      if (power < 2) throw InvalidPresentation("localTruncated needs x^k with k >= 2");
      p.name = "LocalX" + std::to_string(power);
      addArrow(p, "x", 1, 1);
      std::string word = "x";
      for (int k = 1; k < power; ++k) word += "*x";
      addRelation(p, word);
      return {p.name, p, true};
    }
    case LocalKind::TwoLoopsSquareZero:
      p.name = "LocalXYSquareZero";
      addArrow(p, "x", 1, 1);
      addArrow(p, "y", 1, 1);
      for (const char* r : {"x*x", "y*y", "x*y", "y*x"}) addRelation(p, r);
      return {p.name, p, false};
    case LocalKind::Commutative:
      p.name = "LocalCommXY";
      addArrow(p, "x", 1, 1);
      addArrow(p, "y", 1, 1);
      for (const char* r : {"x*x", "y*y", "x*y - y*x"}) addRelation(p, r);
      return {p.name, p, true};
    case LocalKind::TwoLoopsMixed:
      p.name = "LocalXYMixed";
      addArrow(p, "x", 1, 1);
      addArrow(p, "y", 1, 1);
      for (const char* r : {"x*x", "x*y", "y*x", "y*y*y"}) addRelation(p, r);
      return {p.name, p, false};
  }
  throw InvalidPresentation("unknown local algebra kind");
}

CorpusEntry lineQuiver(int n) {
  if (n < 1) throw InvalidPresentation("lineQuiver needs n >= 1");
  Presentation p = skeleton("Line" + std::to_string(n), n);
  for (int i = 1; i < n; ++i) addArrow(p, "a" + std::to_string(i), i, i + 1);
  return {p.name, p, n == 1};
}

CorpusEntry semisimple(int n) {
  if (n < 1) throw InvalidPresentation("semisimple needs n >= 1");
  Presentation p = skeleton("Semisimple" + std::to_string(n), n);
  return {p.name, p, true};
}

std::vector<CorpusEntry> corpus() {
  return {
      familyA2(),
      familyAn(3),
      familyAn(4),
      threeVertexExample(),
      nakayamaCycle(3, true),
      nakayamaCycle(2, false),
      localTruncated(LocalKind::Truncated, 3),
      localTruncated(LocalKind::Truncated, 4),
      localTruncated(LocalKind::TwoLoopsSquareZero),
      localTruncated(LocalKind::Commutative),
      localTruncated(LocalKind::TwoLoopsMixed),
      lineQuiver(2),
      lineQuiver(3),
      semisimple(2),
  };
}

}  // namespace qb

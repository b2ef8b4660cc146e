#include "quiverbench/presentation.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qb {

int Quiver::vertexIndex(std::string_view name) const {
  for (int i = 0; i < vertexCount(); ++i)
    if (vertices[static_cast<std::size_t>(i)] == name) return i;
  return -1;
}

int Quiver::arrowIndex(std::string_view name) const {
  for (int i = 0; i < arrowCount(); ++i)
    if (arrows[static_cast<std::size_t>(i)].name == name) return i;
  return -1;
}

Path makePath(const Quiver& q, const std::vector<int>& arrows) {
  if (arrows.empty()) throw InvalidPresentation("empty arrow word");
  for (int a : arrows)
    if (a < 0 || a >= q.arrowCount()) throw InvalidPresentation("arrow index out of range");
  for (std::size_t i = 0; i + 1 < arrows.size(); ++i) {
    const Arrow& left = q.arrows[static_cast<std::size_t>(arrows[i])];
    const Arrow& right = q.arrows[static_cast<std::size_t>(arrows[i + 1])];
    if (left.source != right.target)
      throw InvalidPresentation("word " + left.name + "*" + right.name + " is not composable: " + right.name +
                                " ends at " + q.vertices[static_cast<std::size_t>(right.target)] + " but " +
                                left.name + " starts at " + q.vertices[static_cast<std::size_t>(left.source)]);
  }
  Path p;
  p.arrows = arrows;
  p.source = q.arrows[static_cast<std::size_t>(arrows.back())].source;
  p.target = q.arrows[static_cast<std::size_t>(arrows.front())].target;
  return p;
}

Path concatenate(const Path& left, const Path& right, bool& ok) {
  ok = left.source == right.target;
  if (!ok) return {};
  Path p;
  p.arrows = left.arrows;
  p.arrows.insert(p.arrows.end(), right.arrows.begin(), right.arrows.end());
  p.source = right.source;
  p.target = left.target;
  return p;
}

bool pathLess(const Quiver& q, const Path& a, const Path& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  if (a.source != b.source) return a.source < b.source;
  if (a.isTrivial()) return false;
  return std::lexicographical_compare(
      a.arrows.begin(), a.arrows.end(), b.arrows.begin(), b.arrows.end(), [&](int x, int y) {
        return q.arrows[static_cast<std::size_t>(x)].name < q.arrows[static_cast<std::size_t>(y)].name;
      });
}

std::string pathLabel(const Quiver& q, const Path& p) {
  if (p.isTrivial()) return "e" + q.vertices[static_cast<std::size_t>(p.source)];
  const bool compact =
      std::all_of(q.arrows.begin(), q.arrows.end(), [](const Arrow& a) { return a.name.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i > 0 && !compact) out += '*';
    out += q.arrows[static_cast<std::size_t>(p.arrows[i])].name;
  }
  return out;
}

Presentation oppositePresentation(const Presentation& p) {
  Presentation op = p;
  for (Arrow& a : op.quiver.arrows) std::swap(a.source, a.target);
  for (Relation& r : op.relations)
    for (Term& t : r.terms) {
      std::reverse(t.path.arrows.begin(), t.path.arrows.end());
      std::swap(t.path.source, t.path.target);
    }
  return op;
}

void validatePresentation(const Presentation& p, bool requireAdmissibleWords) {
  const Quiver& q = p.quiver;
  if (q.vertices.empty()) throw InvalidPresentation("quiver has no vertices");
  std::set<std::string> names(q.vertices.begin(), q.vertices.end());
  if (names.size() != q.vertices.size()) throw InvalidPresentation("duplicate vertex name");
  std::set<std::string> arrowNames;
  for (const Arrow& a : q.arrows) {
    if (!arrowNames.insert(a.name).second) throw InvalidPresentation("duplicate arrow name " + a.name);
    if (a.source < 0 || a.source >= q.vertexCount() || a.target < 0 || a.target >= q.vertexCount())
      throw InvalidPresentation("arrow " + a.name + " has an undeclared endpoint");
  }
  if (p.nilpotencyBound < 1) throw InvalidPresentation("nilpotency bound must be at least 1");
  for (const Relation& r : p.relations)
    for (const Term& t : r.terms) {
      if (t.path.isTrivial()) throw InvalidPresentation("relation contains a trivial path");
      const Path check = makePath(q, t.path.arrows);
      if (check.source != t.path.source || check.target != t.path.target)
        throw InvalidPresentation("relation term has inconsistent endpoints");
      if (requireAdmissibleWords && t.path.length() < 2)
        throw InvalidPresentation("relation word " + pathLabel(q, t.path) + " has length < 2");
    }
}

std::vector<Relation> uniformRelations(const Presentation& p) {
  std::vector<Relation> out;
  for (const Relation& r : p.relations) {
    std::map<std::pair<int, int>, Relation> parts;
    for (const Term& t : r.terms)
      if (t.coefficient != 0) parts[{t.path.target, t.path.source}].terms.push_back(t);
    for (auto& [key, part] : parts) out.push_back(std::move(part));
  }
  return out;
}

}  // namespace qb

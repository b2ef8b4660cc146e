#include "quiverbench/presentation_io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qb {

namespace {

struct Token {
  std::string text;
  int column = 0;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({std::string(line.substr(start, i - start)), static_cast<int>(start) + 1});
  }
  return out;
}

bool isIdentifier(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_' && ch != '\'') return false;
  return true;
}

// Relation grammar: [sign] term (sign term)*, term = [integer ['*']] name ('*' name)*.
class RelationParser {
 public:
  RelationParser(const Quiver& q, std::string_view text, int line, int column)
      : q_(q), text_(text), line_(line), column_(column) {}

  Relation parse() {
    Relation r;
    skipSpace();
    if (pos_ == text_.size()) fail("empty relation");
    bool first = true;
    while (true) {
      skipSpace();
      if (pos_ == text_.size()) break;
      int sign = 1;
      if (text_[pos_] == '+' || text_[pos_] == '-') {
        sign = text_[pos_] == '-' ? -1 : 1;
        ++pos_;
        skipSpace();
      } else if (!first) {
        fail("expected '+' or '-' between terms");
      }
      r.terms.push_back(term(sign));
      first = false;
    }
    return r;
  }

 private:
  Term term(int sign) {
    BigInt coefficient = sign;
    const std::size_t termStart = pos_;
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      coefficient *= BigInt(std::string(text_.substr(start, pos_ - start)));
      skipSpace();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        skipSpace();
      }
    }
    std::vector<int> arrows;
    while (true) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && isIdentifier(text_.substr(pos_, 1))) ++pos_;
      if (start == pos_) fail("expected an arrow name");
      const std::string name(text_.substr(start, pos_ - start));
      const int a = q_.arrowIndex(name);
      if (a < 0) failAt("unknown arrow '" + name + "'", start);
      arrows.push_back(a);
      skipSpace();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        skipSpace();
        continue;
      }
      break;
    }
    try {
      return {coefficient, makePath(q_, arrows)};
    } catch (const InvalidPresentation& e) {
      failAt(e.what(), termStart);
    }
  }

  void skipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) { failAt(what, pos_); }
  [[noreturn]] void failAt(const std::string& what, std::size_t at) {
    throw ParseError(what, line_, column_ + static_cast<int>(at));
  }

  const Quiver& q_;
  std::string_view text_;
  int line_;
  int column_;
  std::size_t pos_ = 0;
};

}  // namespace

const std::vector<std::string>& supportedFields() {
  static const std::vector<std::string> fields{"F2", "F3", "F5", "F7", "F101", "Q"};
  return fields;
}

Relation parseRelation(const Quiver& q, std::string_view text) { return RelationParser(q, text, 1, 1).parse(); }

Presentation parsePresentation(std::string_view text) {
  Presentation p;
  bool sawVertices = false;
  bool sawName = false;
  bool sawField = false;
  bool sawNilpotency = false;
  int lineNo = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++lineNo;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const std::string& kw = tokens[0].text;
    auto fail = [&](const std::string& what, int column) -> void { throw ParseError(what, lineNo, column); };
    auto endColumn = [&] { return static_cast<int>(line.size()) + 1; };

    if (kw == "name") {
      if (sawName) fail("duplicate name line", tokens[0].column);
      if (tokens.size() != 2) fail("expected: name NAME", tokens.size() < 2 ? endColumn() : tokens[2].column);
      p.name = tokens[1].text;
      sawName = true;
    } else if (kw == "field") {
      if (sawField) fail("duplicate field line", tokens[0].column);
      if (tokens.size() != 2) fail("expected: field Q|F<p>", tokens.size() < 2 ? endColumn() : tokens[2].column);
      const auto& fields = supportedFields();
      if (std::find(fields.begin(), fields.end(), tokens[1].text) == fields.end())
        fail("unsupported field '" + tokens[1].text + "' (supported: F2 F3 F5 F7 F101 Q)", tokens[1].column);
      p.field = tokens[1].text;
      sawField = true;
    } else if (kw == "vertices") {
      if (sawVertices) fail("duplicate vertices line", tokens[0].column);
      if (tokens.size() < 2) fail("vertices line lists no vertices", endColumn());
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        if (!isIdentifier(tokens[i].text)) fail("invalid vertex name '" + tokens[i].text + "'", tokens[i].column);
        if (p.quiver.vertexIndex(tokens[i].text) >= 0)
          fail("duplicate vertex '" + tokens[i].text + "'", tokens[i].column);
        p.quiver.vertices.push_back(tokens[i].text);
      }
      sawVertices = true;
    } else if (kw == "arrow") {
      if (!sawVertices) fail("arrow declared before vertices", tokens[0].column);
      if (!p.relations.empty()) fail("arrow declared after relations", tokens[0].column);
      if (tokens.size() != 4) fail("expected: arrow NAME SOURCE TARGET", tokens.size() < 4 ? endColumn() : tokens[4].column);
      const std::string& name = tokens[1].text;
      if (!isIdentifier(name) || std::isdigit(static_cast<unsigned char>(name[0])))
        fail("invalid arrow name '" + name + "'", tokens[1].column);
      if (p.quiver.arrowIndex(name) >= 0) fail("duplicate arrow '" + name + "'", tokens[1].column);
      const int s = p.quiver.vertexIndex(tokens[2].text);
      if (s < 0) fail("unknown vertex '" + tokens[2].text + "'", tokens[2].column);
      const int t = p.quiver.vertexIndex(tokens[3].text);
      if (t < 0) fail("unknown vertex '" + tokens[3].text + "'", tokens[3].column);
      p.quiver.arrows.push_back({name, s, t});
    } else if (kw == "relation") {
      if (!sawVertices) fail("relation declared before vertices", tokens[0].column);
      const auto rest = static_cast<std::size_t>(tokens[0].column - 1) + kw.size();
      Relation r = RelationParser(p.quiver, line.substr(rest), lineNo, static_cast<int>(rest) + 1).parse();
      for (const Term& t : r.terms)
        if (t.path.length() < 2) fail("relation words must have length at least 2", tokens[1].column);
      p.relations.push_back(std::move(r));
    } else if (kw == "nilpotency") {
      if (sawNilpotency) fail("duplicate nilpotency line", tokens[0].column);
      if (tokens.size() != 2) fail("expected: nilpotency N", tokens.size() < 2 ? endColumn() : tokens[2].column);
      int n = 0;
      try {
        std::size_t used = 0;
        n = std::stoi(tokens[1].text, &used);
        if (used != tokens[1].text.size()) n = 0;
      } catch (const std::exception&) {
        n = 0;
      }
      if (n < 1) fail("nilpotency must be a positive integer", tokens[1].column);
      p.nilpotencyBound = n;
      sawNilpotency = true;
    } else {
      fail("unknown directive '" + kw + "'", tokens[0].column);
    }
  }
  if (!sawVertices) throw ParseError("missing vertices line", lineNo, 1);
  return p;
}

std::string printRelation(const Quiver& q, const Relation& r) {
  std::string out;
  for (std::size_t i = 0; i < r.terms.size(); ++i) {
    const Term& t = r.terms[i];
    BigInt c = t.coefficient;
    if (c < 0) {
      out += i == 0 ? "-" : " - ";
      c = -c;
    } else if (i > 0) {
      out += " + ";
    }
    if (c != 1) out += c.str() + "*";
    for (std::size_t k = 0; k < t.path.arrows.size(); ++k) {
      if (k > 0) out += '*';
      out += q.arrows[static_cast<std::size_t>(t.path.arrows[k])].name;
    }
  }
  return out;
}

std::string printPresentation(const Presentation& p) {
  std::ostringstream os;
  if (!p.name.empty()) os << "name " << p.name << '\n';
  os << "field " << p.field << '\n';
  os << "vertices";
  for (const auto& v : p.quiver.vertices) os << ' ' << v;
  os << '\n';
  for (const Arrow& a : p.quiver.arrows)
    os << "arrow " << a.name << ' ' << p.quiver.vertices[static_cast<std::size_t>(a.source)] << ' '
       << p.quiver.vertices[static_cast<std::size_t>(a.target)] << '\n';
  for (const Relation& r : p.relations) os << "relation " << printRelation(p.quiver, r) << '\n';
  os << "nilpotency " << p.nilpotencyBound << '\n';
  return os.str();
}

}  // namespace qb

#include "quiverbench/module_io.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <regex>
#include <sstream>

namespace qb {

namespace {

struct Token {
  std::string text;
  int column = 0;
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
    if (line[i] == ':' || line[i] == ';') {
      ++i;
    } else {
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != ':' && line[i] != ';') ++i;
    }
    out.push_back({std::string(line.substr(start, i - start)), static_cast<int>(start) + 1});
  }
  return out;
}

template <class S>
S parseEntry(const Token& t, int line) {
  static const std::regex number(R"(([+-]?[0-9]+)(/([0-9]+))?)");
  std::smatch match;
  if (!std::regex_match(t.text, match, number)) throw ParseError("expected an integer or fraction, got '" + t.text + "'", line, t.column);
  const BigInt num(match[1].str());
  const BigInt den = match[3].matched ? BigInt(match[3].str()) : BigInt(1);
  if (den == 0) throw ParseError("zero denominator", line, t.column);
  try {
    return FieldTraits<S>::fromFraction(num, den);
  } catch (const Error& e) {
    throw ParseError(e.what(), line, t.column);
  }
}

int vertexOf(const Quiver& q, const std::string& name, const std::string& descriptor) {
  const int v = q.vertexIndex(name);
  if (v < 0) throw InvalidRepresentation("unknown vertex '" + name + "' in module descriptor " + descriptor);
  return v;
}

}  // namespace

template <class S>
Rep<S> parseModule(const AlgebraPtr<S>& a, std::string_view text) {
  const Quiver& q = a->quiver();
  std::vector<int> dims;
  std::vector<std::optional<Matrix<S>>> arrows(static_cast<std::size_t>(q.arrowCount()));
  int dimsLine = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineNo = 0;
  while (std::getline(in, raw)) {
    ++lineNo;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const auto tokens = tokenize(raw);
    if (tokens.empty()) continue;
    const std::string& keyword = tokens[0].text;
    if (keyword == "dims") {
      if (dimsLine) throw ParseError("duplicate dims line", lineNo, tokens[0].column);
      dimsLine = lineNo;
      if (static_cast<int>(tokens.size()) - 1 != q.vertexCount())
        throw ParseError("expected " + std::to_string(q.vertexCount()) + " dimensions", lineNo, tokens[0].column);
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        const std::string& t = tokens[i].text;
        if (t.empty() || !std::all_of(t.begin(), t.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
          throw ParseError("expected a dimension, got '" + t + "'", lineNo, tokens[i].column);
        dims.push_back(std::stoi(t));
      }
    } else if (keyword == "arrow") {
      if (!dimsLine) throw ParseError("arrow before dims", lineNo, tokens[0].column);
      if (tokens.size() < 3 || tokens[2].text != ":") throw ParseError("expected 'arrow NAME : entries'", lineNo, tokens[0].column);
      const int ai = q.arrowIndex(tokens[1].text);
      if (ai < 0) throw ParseError("unknown arrow '" + tokens[1].text + "'", lineNo, tokens[1].column);
      if (arrows[static_cast<std::size_t>(ai)]) throw ParseError("arrow given twice", lineNo, tokens[1].column);
      const Arrow& ar = q.arrows[static_cast<std::size_t>(ai)];
      const Index rows = dims[static_cast<std::size_t>(ar.target)];
      const Index cols = dims[static_cast<std::size_t>(ar.source)];
      Matrix<S> mat = zeros<S>(rows, cols);
      Index r = 0, c = 0;
      for (std::size_t i = 3; i < tokens.size(); ++i) {
        if (tokens[i].text == ";") {
          if (c != cols) throw ParseError("row " + std::to_string(r + 1) + " needs " + std::to_string(cols) + " entries", lineNo, tokens[i].column);
          ++r;
          c = 0;
          continue;
        }
        if (r >= rows || c >= cols) throw ParseError("too many entries for a " + std::to_string(rows) + "x" + std::to_string(cols) + " matrix", lineNo, tokens[i].column);
        mat(r, c++) = parseEntry<S>(tokens[i], lineNo);
      }
      if (rows * cols > 0 && !(r == rows - 1 && c == cols))
        throw ParseError("expected a " + std::to_string(rows) + "x" + std::to_string(cols) + " matrix", lineNo, tokens[0].column);
      arrows[static_cast<std::size_t>(ai)] = std::move(mat);
    } else {
      throw ParseError("unknown keyword '" + keyword + "'", lineNo, tokens[0].column);
    }
  }
  if (!dimsLine) throw ParseError("missing dims line", lineNo + 1, 1);
  std::vector<Matrix<S>> mats;
  for (int ai = 0; ai < q.arrowCount(); ++ai) {
    const Arrow& ar = q.arrows[static_cast<std::size_t>(ai)];
    mats.push_back(arrows[static_cast<std::size_t>(ai)].value_or(
        zeros<S>(dims[static_cast<std::size_t>(ar.target)], dims[static_cast<std::size_t>(ar.source)])));
  }
  return makeRep(a, dims, std::move(mats));
}

template <class S>
std::string printModule(const Rep<S>& m) {
  const Quiver& q = m.algebra->quiver();
  std::ostringstream out;
  out << "dims";
  for (int d : m.dims) out << ' ' << d;
  out << '\n';
  for (int ai = 0; ai < q.arrowCount(); ++ai) {
    const Matrix<S>& mat = m.arrows[static_cast<std::size_t>(ai)];
    if (mat.size() == 0) continue;
    out << "arrow " << q.arrows[static_cast<std::size_t>(ai)].name << " :";
    for (Index i = 0; i < mat.rows(); ++i) {
      if (i) out << " ;";
      for (Index j = 0; j < mat.cols(); ++j) out << ' ' << FieldTraits<S>::format(mat(i, j));
    }
    out << '\n';
  }
  return out.str();
}

bool isModuleDescriptor(const std::string& descriptor) {
  static const std::regex shape(R"(A|[SPI][A-Za-z0-9_']+|(rad|soc)\(P[A-Za-z0-9_']+\))");
  return std::regex_match(descriptor, shape);
}

template <class S>
Rep<S> namedModule(const AlgebraPtr<S>& a, const std::string& d) {
  const Quiver& q = a->quiver();
  if (!isModuleDescriptor(d)) throw InvalidRepresentation("unknown module descriptor '" + d + "'");
  if (d == "A") return regularRep(a);
  if (d.rfind("rad(", 0) == 0) return radicalRep(projective(a, vertexOf(q, d.substr(5, d.size() - 6), d))).rep;
  if (d.rfind("soc(", 0) == 0) return socleRep(projective(a, vertexOf(q, d.substr(5, d.size() - 6), d))).rep;
  const int v = vertexOf(q, d.substr(1), d);
  switch (d[0]) {
    case 'S':
      return simple(a, v);
    case 'P':
      return projective(a, v);
    default:
      return injectiveEnvelope(simple(a, v)).injective;
  }
}

#define QB_INSTANTIATE_MODULE_IO(S)                                          \
  template Rep<S> parseModule<S>(const AlgebraPtr<S>&, std::string_view);    \
  template std::string printModule<S>(const Rep<S>&);                        \
  template Rep<S> namedModule<S>(const AlgebraPtr<S>&, const std::string&);
QB_FOR_EACH_FIELD(QB_INSTANTIATE_MODULE_IO)

}  // namespace qb

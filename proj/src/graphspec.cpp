#include "pegsol/graphspec.hpp"

#include <cctype>
#include <stdexcept>

#include "pegsol/graph6.hpp"

namespace pegsol {

namespace {

struct Parser {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
  }

  bool eat(const std::string& token) {
    skip_ws();
    if (text.compare(pos, token.size(), token) == 0) {
      pos += token.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c)
      throw std::invalid_argument("graph spec: expected '" + std::string(1, c) +
                                  "' at position " + std::to_string(pos));
    ++pos;
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum((unsigned char)text[pos]) || text[pos] == '_'))
      ++pos;
    if (start == pos)
      throw std::invalid_argument("graph spec: expected a family name at position " +
                                  std::to_string(start));
    return text.substr(start, pos - start);
  }

  int number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
    if (start == pos)
      throw std::invalid_argument("graph spec: expected a number at position " +
                                  std::to_string(start));
    return std::stoi(text.substr(start, pos - start));
  }

  Graph parse() {
    skip_ws();
    if (eat("join(")) {
      Graph a = parse();
      expect(',');
      Graph b = parse();
      expect(')');
      return join(a, b);
    }
    if (eat("cartesian(")) {
      Graph a = parse();
      expect(',');
      Graph b = parse();
      expect(')');
      return cartesian(a, b).first;
    }
    if (eat("g6:")) {
      // graph6 bytes are 63..126, so ',' and ')' safely delimit literals
      std::size_t start = pos;
      while (pos < text.size() && (unsigned char)text[pos] >= 63 &&
             (unsigned char)text[pos] <= 126 && text[pos] != ',' && text[pos] != ')')
        ++pos;
      return parse_graph6(text.substr(start, pos - start));
    }
    std::string family = ident();
    std::vector<int> params;
    skip_ws();
    if (pos < text.size() && text[pos] == ':') {
      ++pos;
      params.push_back(number());
      skip_ws();
      while (pos < text.size() && text[pos] == ',') {
        // a comma only continues the parameter list when a digit follows;
        // otherwise it belongs to an enclosing join(...)/cartesian(...)
        std::size_t save = pos;
        ++pos;
        skip_ws();
        if (pos < text.size() && std::isdigit((unsigned char)text[pos])) {
          params.push_back(number());
          skip_ws();
        } else {
          pos = save;
          break;
        }
      }
    }
    return make_named(family, params);
  }
};

}  // namespace

Graph parse_graph_spec(const std::string& spec) {
  Parser p{spec};
  Graph g = p.parse();
  p.skip_ws();
  if (p.pos != spec.size())
    throw std::invalid_argument("graph spec: trailing characters after position " +
                                std::to_string(p.pos));
  return g;
}

}  // namespace pegsol

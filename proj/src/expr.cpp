#include "pebble/expr.hpp"

#include <algorithm>
#include <cctype>

#include "pebble/families.hpp"

namespace pebble {

namespace {

const char* kFamilies[] = {"path",      "cycle",      "complete", "star",
                           "edgeless",  "hypercube",  "friendship", "book"};
const char* kOperators[] = {"cartesian", "corona", "ncorona"};

bool is_family(const std::string& head) {
  return std::find(std::begin(kFamilies), std::end(kFamilies), head) !=
         std::end(kFamilies);
}

bool is_operator(const std::string& head) {
  return std::find(std::begin(kOperators), std::end(kOperators), head) !=
         std::end(kOperators);
}

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  GraphExpr parse() {
    skip_ws();
    GraphExpr e = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("trailing input", pos_);
    return e;
  }

private:
  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  GraphExpr parse_expr() {
    skip_ws();
    if (at_end() || !std::isalpha(static_cast<unsigned char>(peek())))
      throw ParseError("expected a constructor name", pos_);
    GraphExpr e;
    e.offset = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                         peek() == '_'))
      e.head.push_back(static_cast<char>(
          std::tolower(static_cast<unsigned char>(text_[pos_++]))));
    const bool family = is_family(e.head);
    if (!family && !is_operator(e.head))
      throw ParseError("unknown constructor '" + e.head + "'", e.offset);
    skip_ws();
    if (at_end() || peek() != '(') throw ParseError("expected '('", pos_);
    ++pos_;
    skip_ws();
    if (at_end()) throw ParseError("unterminated argument list", pos_);
    if (peek() == ')')
      throw ParseError("wrong arity: '" + e.head + "' takes " +
                           (family ? "one integer argument"
                                   : "two graph arguments"),
                       pos_);
    if (family) {
      e.int_args.push_back(parse_int());
      skip_ws();
      if (!at_end() && peek() == ',')
        throw ParseError("wrong arity: '" + e.head +
                             "' takes one integer argument",
                         pos_);
    } else {
      e.children.push_back(parse_expr());
      skip_ws();
      if (at_end() || peek() != ',')
        throw ParseError("wrong arity: '" + e.head +
                             "' takes two graph arguments",
                         pos_);
      ++pos_;
      e.children.push_back(parse_expr());
      skip_ws();
      if (!at_end() && peek() == ',')
        throw ParseError("wrong arity: '" + e.head +
                             "' takes two graph arguments",
                         pos_);
    }
    skip_ws();
    if (at_end() || peek() != ')') throw ParseError("expected ')'", pos_);
    ++pos_;
    return e;
  }

  long long parse_int() {
    skip_ws();
    const std::size_t start = pos_;
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError("expected an integer", pos_);
    long long value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (text_[pos_++] - '0');
      if (value > 1'000'000'000)
        throw ParseError("integer parameter too large", start);
    }
    return value;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GraphExpr parse_graph_expr(std::string_view text) {
  return Parser(text).parse();
}

std::string to_string(const GraphExpr& e) {
  std::string out = e.head + "(";
  bool first = true;
  for (long long v : e.int_args) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  for (const GraphExpr& c : e.children) {
    if (!first) out += ",";
    out += to_string(c);
    first = false;
  }
  return out + ")";
}

Graph evaluate(const GraphExpr& e) {
  try {
    if (is_family(e.head)) {
      const long long k = e.int_args.at(0);
      if (k < 1 || k > 1'000'000)
        throw Error("parameter out of range: " + e.head + "(" +
                    std::to_string(k) + ")");
      return build_family(e.head, static_cast<int>(k));
    }
    Graph a = evaluate(e.children.at(0));
    Graph b = evaluate(e.children.at(1));
    if (e.head == "cartesian") return cartesian_product(a, b);
    if (e.head == "corona") return corona(a, b);
    return neighbourhood_corona(a, b);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& err) {
    throw ParseError(err.what(), e.offset);
  }
}

Graph graph_from_expr_text(std::string_view text) {
  return evaluate(parse_graph_expr(text));
}

}  // namespace pebble

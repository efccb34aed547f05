#include "paracon/formula.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace paracon {

struct Formula::Node {
  Connective kind;
  std::string name;
  std::optional<Formula> left;
  std::optional<Formula> right;
  std::size_t hash = 0;
  std::size_t size = 1;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Formula Formula::var(std::string name) {
  const auto ident_char = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
  if (name.empty() || std::isdigit(static_cast<unsigned char>(name[0])) ||
      !std::all_of(name.begin(), name.end(), ident_char) || is_reserved_identifier(name)) {
    throw std::invalid_argument("invalid variable name '" + name + "'");
  }
  auto node = std::make_shared<Node>();
  node->kind = Connective::Var;
  node->hash = mix(0, std::hash<std::string>{}(name));
  node->name = std::move(name);
  return Formula(std::move(node));
}

Formula Formula::negation(Formula child) {
  auto node = std::make_shared<Node>();
  node->kind = Connective::Not;
  node->hash = mix(static_cast<std::size_t>(Connective::Not), child.hash());
  node->size = 1 + child.size();
  node->left = std::move(child);
  return Formula(std::move(node));
}

namespace {

template <class NodeT, class F>
std::shared_ptr<NodeT> make_binary(Connective kind, F left, F right) {
  auto node = std::make_shared<NodeT>();
  node->kind = kind;
  node->hash = mix(mix(static_cast<std::size_t>(kind), left.hash()), right.hash());
  node->size = 1 + left.size() + right.size();
  node->left = std::move(left);
  node->right = std::move(right);
  return node;
}

}  // namespace

Formula Formula::conjunction(Formula left, Formula right) {
  return Formula(make_binary<Node>(Connective::And, std::move(left), std::move(right)));
}

Formula Formula::disjunction(Formula left, Formula right) {
  return Formula(make_binary<Node>(Connective::Or, std::move(left), std::move(right)));
}

Formula Formula::implication(Formula left, Formula right) {
  return Formula(make_binary<Node>(Connective::Implies, std::move(left), std::move(right)));
}

Connective Formula::kind() const noexcept { return node_->kind; }

const std::string& Formula::name() const {
  if (node_->kind != Connective::Var) throw std::logic_error("Formula::name on a non-variable");
  return node_->name;
}

const Formula& Formula::child() const {
  if (node_->kind != Connective::Not) throw std::logic_error("Formula::child on a non-negation");
  return *node_->left;
}

const Formula& Formula::left() const {
  if (!node_->right) throw std::logic_error("Formula::left on a non-binary formula");
  return *node_->left;
}

const Formula& Formula::right() const {
  if (!node_->right) throw std::logic_error("Formula::right on a non-binary formula");
  return *node_->right;
}

std::size_t Formula::hash() const noexcept { return node_->hash; }
std::size_t Formula::size() const noexcept { return node_->size; }

bool operator==(const Formula& a, const Formula& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash || a.node_->size != b.node_->size) return false;
  return (a <=> b) == 0;
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) noexcept {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (auto c = x.kind <=> y.kind; c != 0) return c;
  if (x.kind == Connective::Var) return x.name.compare(y.name) <=> 0;
  if (auto c = *x.left <=> *y.left; c != 0) return c;
  if (x.right) return *x.right <=> *y.right;
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Parsing

ParseError::ParseError(const std::string& message, std::size_t offset)
    : std::runtime_error("parse error at column " + std::to_string(offset + 1) + ": " + message),
      offset_(offset),
      detail_(message) {}

bool is_reserved_identifier(std::string_view name) {
  static constexpr std::array<std::string_view, 2> kReserved = {"true", "false"};
  return std::find(kReserved.begin(), kReserved.end(), name) != kReserved.end();
}

namespace {

enum class Tok { Ident, Not, And, Or, Implies, LParen, RParen, End };

struct Token {
  Tok kind;
  std::size_t offset;
  std::string_view text;
};

constexpr std::size_t kMaxNesting = 2000;

bool ident_start(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}

bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9'); }

std::string_view describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Not: return "'~'";
    case Tok::And: return "'&'";
    case Tok::Or: return "'|'";
    case Tok::Implies: return "'->'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::End: return "end of input";
  }
  return "token";
}

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto starts = [&](std::string_view lit) { return s.substr(i, lit.size()) == lit; };
  while (i < s.size()) {
    char c = s[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      ++i;
      continue;
    }
    const std::size_t at = i;
    if (ident_start(c)) {
      while (i < s.size() && ident_char(s[i])) ++i;
      out.push_back({Tok::Ident, at, s.substr(at, i - at)});
      continue;
    }
    switch (c) {
      case '~':
      case '!': out.push_back({Tok::Not, at, s.substr(at, 1)}); ++i; continue;
      case '&': out.push_back({Tok::And, at, s.substr(at, 1)}); ++i; continue;
      case '|': out.push_back({Tok::Or, at, s.substr(at, 1)}); ++i; continue;
      case '(': out.push_back({Tok::LParen, at, s.substr(at, 1)}); ++i; continue;
      case ')': out.push_back({Tok::RParen, at, s.substr(at, 1)}); ++i; continue;
      default: break;
    }
    if (starts("->")) {
      out.push_back({Tok::Implies, at, s.substr(at, 2)});
      i += 2;
    } else if (starts("\xC2\xAC")) {  // ¬
      out.push_back({Tok::Not, at, s.substr(at, 2)});
      i += 2;
    } else if (starts("\xE2\x88\xA7")) {  // ∧
      out.push_back({Tok::And, at, s.substr(at, 3)});
      i += 3;
    } else if (starts("\xE2\x88\xA8")) {  // ∨
      out.push_back({Tok::Or, at, s.substr(at, 3)});
      i += 3;
    } else if (starts("\xE2\x86\x92")) {  // →
      out.push_back({Tok::Implies, at, s.substr(at, 3)});
      i += 3;
    } else {
      std::string shown = (static_cast<unsigned char>(c) >= 0x20 && static_cast<unsigned char>(c) < 0x7f)
                              ? std::string(1, c)
                              : "\\x" + [&] {
                                  std::ostringstream hex;
                                  hex << std::hex << static_cast<int>(static_cast<unsigned char>(c));
                                  return hex.str();
                                }();
      throw ParseError("unexpected character '" + shown + "'", at);
    }
  }
  out.push_back({Tok::End, s.size(), {}});
  return out;
}

class Parser {
public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Formula parse_all() {
    Formula f = implication();
    if (peek().kind != Tok::End) {
      throw ParseError("unexpected " + std::string(describe(peek().kind)) + " after formula",
                       peek().offset);
    }
    return f;
  }

private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }

  void enter() {
    if (++depth_ > kMaxNesting) throw ParseError("nesting too deep", peek().offset);
  }

  Formula implication() {
    enter();
    Formula lhs = disjunction();
    if (peek().kind == Tok::Implies) {
      advance();
      lhs = Formula::implication(std::move(lhs), implication());
    }
    --depth_;
    return lhs;
  }

  Formula disjunction() {
    Formula lhs = conjunction();
    while (peek().kind == Tok::Or) {
      advance();
      lhs = Formula::disjunction(std::move(lhs), conjunction());
    }
    return lhs;
  }

  Formula conjunction() {
    Formula lhs = unary();
    while (peek().kind == Tok::And) {
      advance();
      lhs = Formula::conjunction(std::move(lhs), unary());
    }
    return lhs;
  }

  Formula unary() {
    if (peek().kind == Tok::Not) {
      advance();
      enter();
      Formula f = Formula::negation(unary());
      --depth_;
      return f;
    }
    return atom();
  }

  Formula atom() {
    const Token& t = advance();
    switch (t.kind) {
      case Tok::Ident:
        if (is_reserved_identifier(t.text)) {
          throw ParseError("reserved identifier '" + std::string(t.text) + "'", t.offset);
        }
        return Formula::var(std::string(t.text));
      case Tok::LParen: {
        Formula inner = implication();
        if (peek().kind != Tok::RParen) {
          throw ParseError("expected ')' but found " + std::string(describe(peek().kind)),
                           peek().offset);
        }
        advance();
        return inner;
      }
      default:
        throw ParseError("expected a variable, '~' or '(' but found " + std::string(describe(t.kind)),
                         t.offset);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t depth_ = 0;
};

int precedence(Connective k) {
  switch (k) {
    case Connective::Implies: return 1;
    case Connective::Or: return 2;
    case Connective::And: return 3;
    case Connective::Not: return 4;
    case Connective::Var: return 5;
  }
  return 0;
}

void render_into(const Formula& f, int context, std::string& out) {
  const int prec = precedence(f.kind());
  const bool parens = prec < context;
  if (parens) out += '(';
  switch (f.kind()) {
    case Connective::Var: out += f.name(); break;
    case Connective::Not:
      out += '~';
      render_into(f.child(), precedence(Connective::Not), out);
      break;
    case Connective::And:
    case Connective::Or:
      render_into(f.left(), prec, out);
      out += f.kind() == Connective::And ? " & " : " | ";
      render_into(f.right(), prec + 1, out);
      break;
    case Connective::Implies:
      render_into(f.left(), prec + 1, out);
      out += " -> ";
      render_into(f.right(), prec, out);
      break;
  }
  if (parens) out += ')';
}

void collect_variables(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Connective::Var: out.insert(f.name()); return;
    case Connective::Not: collect_variables(f.child(), out); return;
    default:
      collect_variables(f.left(), out);
      collect_variables(f.right(), out);
  }
}

}  // namespace

Formula parse(std::string_view text) {
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) {
    throw ParseError("empty formula", 0);
  }
  return Parser(tokenize(text)).parse_all();
}

std::string render(const Formula& f) {
  std::string out;
  render_into(f, 0, out);
  return out;
}

std::set<std::string> variables(const Formula& f) {
  std::set<std::string> out;
  collect_variables(f, out);
  return out;
}

// ---------------------------------------------------------------------------
// FormulaSet

FormulaSet::FormulaSet(std::initializer_list<Formula> items) {
  for (const auto& f : items) insert(f);
}

FormulaSet::FormulaSet(const std::vector<Formula>& items) {
  for (const auto& f : items) insert(f);
}

bool FormulaSet::insert(Formula f) {
  if (contains(f)) return false;
  items_.push_back(std::move(f));
  return true;
}

bool FormulaSet::contains(const Formula& f) const {
  return std::find(items_.begin(), items_.end(), f) != items_.end();
}

FormulaSet FormulaSet::subset(std::uint64_t mask) const {
  FormulaSet out;
  for (std::size_t i = 0; i < items_.size() && i < 64; ++i) {
    if ((mask >> i) & 1U) out.items_.push_back(items_[i]);
  }
  return out;
}

bool FormulaSet::is_subset_of(const FormulaSet& other) const {
  return std::all_of(items_.begin(), items_.end(), [&](const Formula& f) { return other.contains(f); });
}

std::set<std::string> FormulaSet::variables() const {
  std::set<std::string> out;
  for (const auto& f : items_) collect_variables(f, out);
  return out;
}

std::string render(const FormulaSet& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out += ", ";
    out += render(set[i]);
  }
  out += '}';
  return out;
}

FormulaFileError::FormulaFileError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                         message),
      line_(line),
      column_(column) {}

FormulaSet parse_formula_set(std::string_view text) {
  FormulaSet out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos && line[first] != '#') {
      try {
        out.insert(parse(line));
      } catch (const ParseError& e) {
        throw FormulaFileError(e.detail(), line_no, e.offset() + 1);
      }
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

FormulaSet load_formula_set(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_formula_set(buffer.str());
}

}  // namespace paracon

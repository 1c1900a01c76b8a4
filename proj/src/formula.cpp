#include "posslog/formula.hpp"

#include <cctype>
#include <memory>
#include <mutex>
#include <sstream>
#include <unordered_set>
#include <utility>

namespace posslog {

struct Formula::Node {
  Kind kind;
  std::string name;       // Atom
  const Node* lhs = nullptr;
  const Node* rhs = nullptr;  // null for Not
  std::size_t size = 1;
  std::size_t hash = 0;
};

namespace {

constexpr std::uint64_t kFnvOffset = 1469598103934665603ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

std::uint64_t fnv_mix(std::uint64_t h, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) {
    h ^= (v >> (i * 8)) & 0xffu;
    h *= kFnvPrime;
  }
  return h;
}

std::uint64_t fnv_string(std::uint64_t h, std::string_view s) {
  for (unsigned char c : s) {
    h ^= c;
    h *= kFnvPrime;
  }
  return h;
}

struct NodeKey {
  Kind kind;
  std::string_view name;
  const Formula::Node* lhs;
  const Formula::Node* rhs;
};

}  // namespace

// Hash-consing table. Nodes live for the whole process; a mutex keeps
// concurrent construction safe, matching the "formulas are shareable values"
// contract.
class FormulaInterner {
 public:
  static FormulaInterner& instance() {
    static FormulaInterner interner;
    return interner;
  }

  const Formula::Node* intern(const NodeKey& key) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = table_.find(key);
    if (it != table_.end()) return *it;
    auto node = std::make_unique<Formula::Node>();
    node->kind = key.kind;
    node->name = std::string(key.name);
    node->lhs = key.lhs;
    node->rhs = key.rhs;
    std::uint64_t h = fnv_mix(kFnvOffset, static_cast<std::uint64_t>(key.kind));
    switch (key.kind) {
      case Kind::Atom:
        h = fnv_string(h, key.name);
        break;
      case Kind::Not:
        h = fnv_mix(h, key.lhs->hash);
        node->size = 1 + key.lhs->size;
        break;
      default:
        h = fnv_mix(h, key.lhs->hash);
        h = fnv_mix(h, key.rhs->hash);
        node->size = 1 + key.lhs->size + key.rhs->size;
        break;
    }
    node->hash = static_cast<std::size_t>(h);
    const Formula::Node* raw = node.get();
    nodes_.push_back(std::move(node));
    table_.insert(raw);
    return raw;
  }

 private:
  struct TableHash {
    using is_transparent = void;
    std::size_t operator()(const NodeKey& k) const { return mix(k.kind, k.name, k.lhs, k.rhs); }
    std::size_t operator()(const Formula::Node* n) const {
      return mix(n->kind, n->name, n->lhs, n->rhs);
    }
    static std::size_t mix(Kind kind, std::string_view name, const Formula::Node* lhs,
                           const Formula::Node* rhs) {
      std::uint64_t h = fnv_mix(kFnvOffset, static_cast<std::uint64_t>(kind));
      h = fnv_string(h, name);
      h = fnv_mix(h, reinterpret_cast<std::uintptr_t>(lhs));
      h = fnv_mix(h, reinterpret_cast<std::uintptr_t>(rhs));
      return static_cast<std::size_t>(h);
    }
  };
  struct TableEq {
    using is_transparent = void;
    static bool eq(Kind kind, std::string_view name, const Formula::Node* lhs,
                   const Formula::Node* rhs, const Formula::Node* n) {
      return n->kind == kind && n->name == name && n->lhs == lhs && n->rhs == rhs;
    }
    bool operator()(const Formula::Node* a, const Formula::Node* b) const {
      return eq(a->kind, a->name, a->lhs, a->rhs, b);
    }
    bool operator()(const NodeKey& k, const Formula::Node* n) const {
      return eq(k.kind, k.name, k.lhs, k.rhs, n);
    }
    bool operator()(const Formula::Node* n, const NodeKey& k) const {
      return eq(k.kind, k.name, k.lhs, k.rhs, n);
    }
  };

  std::mutex mutex_;
  std::unordered_set<const Formula::Node*, TableHash, TableEq> table_;
  std::vector<std::unique_ptr<Formula::Node>> nodes_;
};

namespace {

bool valid_atom_name(std::string_view name) {
  if (name.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
  for (char c : name.substr(1))
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-')) return false;
  return true;
}

}  // namespace

Formula Formula::atom(std::string_view name) {
  if (!valid_atom_name(name))
    throw std::invalid_argument("atom name '" + std::string(name) +
                                "' violates the identifier grammar");
  return Formula(FormulaInterner::instance().intern({Kind::Atom, name, nullptr, nullptr}));
}

Formula Formula::negation(Formula f) {
  return Formula(FormulaInterner::instance().intern({Kind::Not, {}, f.node_, nullptr}));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return Formula(FormulaInterner::instance().intern({Kind::And, {}, lhs.node_, rhs.node_}));
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return Formula(FormulaInterner::instance().intern({Kind::Or, {}, lhs.node_, rhs.node_}));
}

Formula Formula::implication(Formula lhs, Formula rhs) {
  return Formula(FormulaInterner::instance().intern({Kind::Implies, {}, lhs.node_, rhs.node_}));
}

Kind Formula::kind() const { return node_->kind; }

const std::string& Formula::atom_name() const {
  if (node_->kind != Kind::Atom) throw std::logic_error("atom_name on non-atom");
  return node_->name;
}

Formula Formula::child() const {
  if (node_->kind != Kind::Not) throw std::logic_error("child on non-negation");
  return Formula(node_->lhs);
}

Formula Formula::left() const {
  if (node_->kind == Kind::Atom || node_->kind == Kind::Not)
    throw std::logic_error("left on non-binary formula");
  return Formula(node_->lhs);
}

Formula Formula::right() const {
  if (node_->kind == Kind::Atom || node_->kind == Kind::Not)
    throw std::logic_error("right on non-binary formula");
  return Formula(node_->rhs);
}

std::size_t Formula::size() const { return node_->size; }
std::size_t Formula::hash() const { return node_->hash; }

Formula expand_circ(Formula f) {
  return Formula::negation(Formula::conjunction(f, Formula::negation(f)));
}

void collect_atoms(Formula f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Kind::Atom:
      out.insert(f.atom_name());
      return;
    case Kind::Not:
      collect_atoms(f.child(), out);
      return;
    default:
      collect_atoms(f.left(), out);
      collect_atoms(f.right(), out);
      return;
  }
}

std::set<std::string> atoms(Formula f) {
  std::set<std::string> out;
  collect_atoms(f, out);
  return out;
}

namespace {

void render_into(Formula f, std::string& out) {
  switch (f.kind()) {
    case Kind::Atom:
      out += f.atom_name();
      return;
    case Kind::Not:
      out += '!';
      render_into(f.child(), out);
      return;
    case Kind::And:
    case Kind::Or:
    case Kind::Implies: {
      out += '(';
      render_into(f.left(), out);
      out += f.kind() == Kind::And ? " & " : f.kind() == Kind::Or ? " | " : " -> ";
      render_into(f.right(), out);
      out += ')';
      return;
    }
  }
}

}  // namespace

std::string render(Formula f) {
  std::string out;
  out.reserve(f.size() * 4);
  render_into(f, out);
  return out;
}

bool structural_less(Formula a, Formula b) {
  if (a == b) return false;
  if (a.size() != b.size()) return a.size() < b.size();
  return render(a) < render(b);
}

ParseError::ParseError(const std::string& message_, std::size_t line_, std::size_t column_)
    : std::runtime_error("line " + std::to_string(line_) + ", column " + std::to_string(column_) +
                         ": " + message_),
      message(message_),
      line(line_),
      column(column_) {}

ParseError::ParseError(const std::string& file, const std::string& message_, std::size_t line_,
                       std::size_t column_)
    : std::runtime_error(file + ":" + std::to_string(line_) + ":" + std::to_string(column_) +
                         ": " + message_),
      message(message_),
      line(line_),
      column(column_) {}

namespace {

enum class Tok { Ident, Bang, Caret, Amp, Pipe, Arrow, DoubleArrow, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string_view text;
  std::size_t line;
  std::size_t column;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

class Lexer {
 public:
  Lexer(std::string_view text, std::size_t first_line) : text_(text), line_(first_line) {
    advance();
  }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, current_.line, current_.column);
  }

 private:
  void advance() {
    skip_trivia();
    current_.line = line_;
    current_.column = pos_ - line_start_ + 1;
    if (pos_ >= text_.size()) {
      current_.kind = Tok::End;
      current_.text = {};
      return;
    }
    char c = text_[pos_];
    switch (c) {
      case '(': take_simple(Tok::LParen); return;
      case ')': take_simple(Tok::RParen); return;
      case '!': take_simple(Tok::Bang); return;
      case '^': take_simple(Tok::Caret); return;
      case '&': take_simple(Tok::Amp); return;
      case '|': take_simple(Tok::Pipe); return;
      case '-':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
          current_.kind = Tok::Arrow;
          current_.text = text_.substr(pos_, 2);
          pos_ += 2;
          return;
        }
        throw ParseError("unexpected '-'", line_, pos_ - line_start_ + 1);
      case '<':
        if (text_.substr(pos_, 3) == "<->") {
          current_.kind = Tok::DoubleArrow;
          current_.text = text_.substr(pos_, 3);
          pos_ += 3;
          return;
        }
        throw ParseError("unexpected '<'", line_, pos_ - line_start_ + 1);
      default:
        break;
    }
    if (ident_start(c)) {
      std::size_t start = pos_;
      ++pos_;
      // '-' continues an identifier unless it opens '->'.
      while (pos_ < text_.size() && ident_char(text_[pos_])) {
        if (text_[pos_] == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') break;
        ++pos_;
      }
      current_.kind = Tok::Ident;
      current_.text = text_.substr(start, pos_ - start);
      return;
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", line_,
                     pos_ - line_start_ + 1);
  }

  void take_simple(Tok kind) {
    current_.kind = kind;
    current_.text = text_.substr(pos_, 1);
    ++pos_;
  }

  void skip_trivia() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '\n') {
        ++pos_;
        ++line_;
        line_start_ = pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t line_start_ = 0;
  Token current_{};
};

// formula  := imp ('<->' formula)?        right-associative, desugars to both implications
// imp      := or ('->' imp)?              right-associative
// or       := and ('|' and)*
// and      := unary ('&' unary)*
// unary    := '!' unary | postfix
// postfix  := primary '^'*                postfix '^' binds tighter than '!'
// primary  := ident | '(' formula ')'
class Parser {
 public:
  Parser(std::string_view text, std::size_t first_line) : lex_(text, first_line) {}

  Formula parse_full() {
    Formula f = parse_iff();
    if (lex_.peek().kind != Tok::End) lex_.fail("trailing input after formula");
    return f;
  }

 private:
  Formula parse_iff() {
    Formula lhs = parse_imp();
    if (lex_.peek().kind == Tok::DoubleArrow) {
      lex_.take();
      Formula rhs = parse_iff();
      return Formula::conjunction(Formula::implication(lhs, rhs),
                                  Formula::implication(rhs, lhs));
    }
    return lhs;
  }

  Formula parse_imp() {
    Formula lhs = parse_or();
    if (lex_.peek().kind == Tok::Arrow) {
      lex_.take();
      return Formula::implication(lhs, parse_imp());
    }
    return lhs;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (lex_.peek().kind == Tok::Pipe) {
      lex_.take();
      f = Formula::disjunction(f, parse_and());
    }
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (lex_.peek().kind == Tok::Amp) {
      lex_.take();
      f = Formula::conjunction(f, parse_unary());
    }
    return f;
  }

  Formula parse_unary() {
    if (lex_.peek().kind == Tok::Bang) {
      lex_.take();
      return Formula::negation(parse_unary());
    }
    return parse_postfix();
  }

  Formula parse_postfix() {
    Formula f = parse_primary();
    while (lex_.peek().kind == Tok::Caret) {
      lex_.take();
      f = expand_circ(f);
    }
    return f;
  }

  Formula parse_primary() {
    const Token& t = lex_.peek();
    switch (t.kind) {
      case Tok::Ident: {
        Token id = lex_.take();
        Formula f = Formula::atom(id.text);
        return f;
      }
      case Tok::LParen: {
        lex_.take();
        Formula f = parse_iff();
        if (lex_.peek().kind != Tok::RParen) lex_.fail("expected ')'");
        lex_.take();
        return f;
      }
      case Tok::End:
        lex_.fail("unexpected end of input");
      default:
        lex_.fail("expected a formula");
    }
  }

  Lexer lex_;
};

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text, 1).parse_full(); }

std::vector<Formula> parse_formula_lines(std::string_view text, std::size_t first_line) {
  std::vector<Formula> out;
  std::size_t line_no = first_line;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    std::string_view body = line.substr(0, line.find('#'));
    bool blank = true;
    for (char c : body)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (!blank) out.push_back(Parser(body, line_no).parse_full());
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
    ++line_no;
  }
  return out;
}

}  // namespace posslog

#include "glal/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "glal/errors.hpp"

namespace glal {

// ---------------------------------------------------------------------------
// Coalition

Coalition::Coalition(std::initializer_list<std::string> members)
    : Coalition(std::vector<std::string>(members)) {}

Coalition::Coalition(std::vector<std::string> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

Coalition Coalition::all() {
  Coalition c;
  c.all_ = true;
  return c;
}

Coalition Coalition::single(std::string agent) { return Coalition({std::move(agent)}); }

bool Coalition::contains(const std::string& agent) const {
  return all_ || std::binary_search(members_.begin(), members_.end(), agent);
}

std::vector<std::string> Coalition::resolve(const std::vector<std::string>& universe) const {
  if (!all_) return members_;
  std::vector<std::string> out = universe;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Nodes

struct Formula::Node {
  Kind kind;
  std::string name;
  Coalition coalition;
  std::vector<Formula> children;
  std::size_t hash;
  std::size_t size;
  std::size_t depth;
};

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::Atom: return "Atom";
    case Kind::Top: return "Top";
    case Kind::Bot: return "Bot";
    case Kind::Not: return "Not";
    case Kind::And: return "And";
    case Kind::Or: return "Or";
    case Kind::Implies: return "Implies";
    case Kind::Iff: return "Iff";
    case Kind::Common: return "Common";
    case Kind::Know: return "Know";
    case Kind::Everybody: return "Everybody";
    case Kind::KnowWhether: return "KnowWhether";
    case Kind::Dual: return "Dual";
    case Kind::Distributed: return "Distributed";
    case Kind::AnnLocal: return "AnnLocal";
    case Kind::AnnGlobal: return "AnnGlobal";
    case Kind::DiaLocal: return "DiaLocal";
    case Kind::DiaGlobal: return "DiaGlobal";
    case Kind::PalAnn: return "PalAnn";
  }
  return "?";
}

namespace {

void hash_mix(std::size_t& seed, std::size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace

Formula make_node(Kind kind, std::string name, Coalition coalition, std::vector<Formula> children) {
  std::size_t h = static_cast<std::size_t>(kind) * 0x100000001b3ULL;
  hash_mix(h, std::hash<std::string>{}(name));
  hash_mix(h, coalition.is_all() ? 0xa11ULL : 0x5e7ULL);
  for (const auto& m : coalition.members()) hash_mix(h, std::hash<std::string>{}(m));
  std::size_t size = 1;
  std::size_t depth = 0;
  for (const auto& c : children) {
    hash_mix(h, c.hash());
    size += c.size();
    depth = std::max(depth, c.depth());
  }
  auto node = std::make_shared<const Formula::Node>(Formula::Node{
      kind, std::move(name), std::move(coalition), std::move(children), h, size, depth + 1});
  return Formula(std::move(node));
}

Kind Formula::kind() const { return node_->kind; }
const std::string& Formula::name() const { return node_->name; }
const Coalition& Formula::coalition() const { return node_->coalition; }
const std::string& Formula::agent() const { return node_->coalition.members().front(); }
std::size_t Formula::arity() const { return node_->children.size(); }
const Formula& Formula::child(std::size_t i) const { return node_->children.at(i); }
const Formula& Formula::operand() const { return node_->children.back(); }
std::size_t Formula::size() const { return node_->size; }
std::size_t Formula::depth() const { return node_->depth; }
std::size_t Formula::hash() const { return node_->hash; }

bool Formula::is_announcement() const {
  switch (kind()) {
    case Kind::AnnLocal:
    case Kind::AnnGlobal:
    case Kind::DiaLocal:
    case Kind::DiaGlobal:
    case Kind::PalAnn: return true;
    default: return false;
  }
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.hash == y.hash && x.kind == y.kind && x.size == y.size && x.name == y.name &&
         x.coalition == y.coalition && x.children == y.children;
}

Formula atom(std::string name) { return make_node(Kind::Atom, std::move(name), {}, {}); }
Formula top() { return make_node(Kind::Top, {}, {}, {}); }
Formula bot() { return make_node(Kind::Bot, {}, {}, {}); }
Formula neg(Formula f) { return make_node(Kind::Not, {}, {}, {std::move(f)}); }
Formula conj(Formula a, Formula b) { return make_node(Kind::And, {}, {}, {std::move(a), std::move(b)}); }
Formula disj(Formula a, Formula b) { return make_node(Kind::Or, {}, {}, {std::move(a), std::move(b)}); }
Formula implies(Formula a, Formula b) {
  return make_node(Kind::Implies, {}, {}, {std::move(a), std::move(b)});
}
Formula iff(Formula a, Formula b) { return make_node(Kind::Iff, {}, {}, {std::move(a), std::move(b)}); }
Formula common(Coalition group, Formula f) {
  return make_node(Kind::Common, {}, std::move(group), {std::move(f)});
}
Formula know(std::string agent, Formula f) {
  return make_node(Kind::Know, {}, Coalition::single(std::move(agent)), {std::move(f)});
}
Formula everybody(Coalition group, Formula f) {
  return make_node(Kind::Everybody, {}, std::move(group), {std::move(f)});
}
Formula know_whether(std::string agent, Formula f) {
  return make_node(Kind::KnowWhether, {}, Coalition::single(std::move(agent)), {std::move(f)});
}
Formula dual(std::string agent, Formula f) {
  return make_node(Kind::Dual, {}, Coalition::single(std::move(agent)), {std::move(f)});
}
Formula distributed(Coalition group, Formula f) {
  return make_node(Kind::Distributed, {}, std::move(group), {std::move(f)});
}
Formula ann_local(Formula announced, Coalition group, Formula body) {
  return make_node(Kind::AnnLocal, {}, std::move(group), {std::move(announced), std::move(body)});
}
Formula ann_global(Formula announced, Coalition group, Formula body) {
  return make_node(Kind::AnnGlobal, {}, std::move(group), {std::move(announced), std::move(body)});
}
Formula dia_local(Formula announced, Coalition group, Formula body) {
  return make_node(Kind::DiaLocal, {}, std::move(group), {std::move(announced), std::move(body)});
}
Formula dia_global(Formula announced, Coalition group, Formula body) {
  return make_node(Kind::DiaGlobal, {}, std::move(group), {std::move(announced), std::move(body)});
}
Formula pal(Formula announced, Formula body) {
  return make_node(Kind::PalAnn, {}, {}, {std::move(announced), std::move(body)});
}

Formula conj_all(const std::vector<Formula>& fs) {
  if (fs.empty()) return top();
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = conj(acc, fs[i]);
  return acc;
}

Formula disj_all(const std::vector<Formula>& fs) {
  if (fs.empty()) return bot();
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = disj(acc, fs[i]);
  return acc;
}

// ---------------------------------------------------------------------------
// Printer

namespace {

std::string print_coalition(const Coalition& c) {
  if (c.is_all()) return "{*}";
  std::string out = "{";
  for (std::size_t i = 0; i < c.members().size(); ++i) {
    if (i > 0) out += ',';
    out += c.members()[i];
  }
  return out + "}";
}

void print_into(const Formula& f, std::string& out) {
  auto paren = [&out](const Formula& g) {
    out += '(';
    print_into(g, out);
    out += ')';
  };
  auto binary = [&](const char* op) {
    paren(f.lhs());
    out += ' ';
    out += op;
    out += ' ';
    paren(f.rhs());
  };
  auto box = [&](const char* op) {
    out += op;
    out += print_coalition(f.coalition());
    out += ' ';
    paren(f.operand());
  };
  auto announcement = [&](char open, char close, const char* sign) {
    out += open;
    print_into(f.announced(), out);
    out += close;
    out += sign;
    if (f.kind() != Kind::PalAnn) out += print_coalition(f.coalition());
    out += ' ';
    paren(f.body());
  };
  switch (f.kind()) {
    case Kind::Atom: out += f.name(); break;
    case Kind::Top: out += "true"; break;
    case Kind::Bot: out += "false"; break;
    case Kind::Not:
      out += '!';
      paren(f.operand());
      break;
    case Kind::And: binary("&"); break;
    case Kind::Or: binary("|"); break;
    case Kind::Implies: binary("->"); break;
    case Kind::Iff: binary("<->"); break;
    case Kind::Common: box("C"); break;
    case Kind::Know: box("K"); break;
    case Kind::Everybody: box("E"); break;
    case Kind::KnowWhether: box("Kw"); break;
    case Kind::Dual: box("M"); break;
    case Kind::Distributed: box("D"); break;
    case Kind::AnnLocal: announcement('[', ']', "-"); break;
    case Kind::AnnGlobal: announcement('[', ']', "+"); break;
    case Kind::DiaLocal: announcement('<', '>', "-"); break;
    case Kind::DiaGlobal: announcement('<', '>', "+"); break;
    case Kind::PalAnn: announcement('[', ']', ""); break;
  }
}

}  // namespace

std::string print(const Formula& f) {
  std::string out;
  print_into(f, out);
  return out;
}

// ---------------------------------------------------------------------------
// Lexer and parser

namespace {

enum class Tok {
  Ident,
  True,
  False,
  LParen,
  RParen,
  LBrack,
  RBrack,
  LAngle,
  RAngle,
  Bang,
  Amp,
  Bar,
  Arrow,
  DArrow,
  Minus,
  Plus,
  LBrace,
  RBrace,
  Comma,
  Star,
  Box,  // K{ C{ E{ Kw{ M{ D{  (brace included)
  End,
};

struct Token {
  Tok type;
  std::string text;
  std::size_t line;
  std::size_t column;
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::True: return "'true'";
    case Tok::False: return "'false'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrack: return "'['";
    case Tok::RBrack: return "']'";
    case Tok::LAngle: return "'<'";
    case Tok::RAngle: return "'>'";
    case Tok::Bang: return "'!'";
    case Tok::Amp: return "'&'";
    case Tok::Bar: return "'|'";
    case Tok::Arrow: return "'->'";
    case Tok::DArrow: return "'<->'";
    case Tok::Minus: return "'-'";
    case Tok::Plus: return "'+'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Comma: return "','";
    case Tok::Star: return "'*'";
    case Tok::Box: return "modal operator";
    case Tok::End: return "end of input";
  }
  return "?";
}

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const std::size_t l = line, co = col;
    auto push = [&](Tok t, std::size_t n) {
      out.push_back({t, std::string(text.substr(i, n)), l, co});
      advance(n);
    };
    if (ident_char(c)) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      std::string word(text.substr(i, j - i));
      if (j < text.size() && text[j] == '{') {
        static const std::set<std::string> boxes = {"K", "C", "E", "Kw", "M", "D"};
        if (!boxes.count(word)) throw UnknownOperator(l, co, word);
        out.push_back({Tok::Box, word, l, co});
        advance(j + 1 - i);
        continue;
      }
      Tok t = word == "true" ? Tok::True : word == "false" ? Tok::False : Tok::Ident;
      push(t, j - i);
      continue;
    }
    switch (c) {
      case '(': push(Tok::LParen, 1); break;
      case ')': push(Tok::RParen, 1); break;
      case '[': push(Tok::LBrack, 1); break;
      case ']': push(Tok::RBrack, 1); break;
      case '>': push(Tok::RAngle, 1); break;
      case '!': push(Tok::Bang, 1); break;
      case '&': push(Tok::Amp, 1); break;
      case '|': push(Tok::Bar, 1); break;
      case '+': push(Tok::Plus, 1); break;
      case '{': push(Tok::LBrace, 1); break;
      case '}': push(Tok::RBrace, 1); break;
      case ',': push(Tok::Comma, 1); break;
      case '*': push(Tok::Star, 1); break;
      case '<':
        if (text.substr(i, 3) == "<->") {
          push(Tok::DArrow, 3);
        } else {
          push(Tok::LAngle, 1);
        }
        break;
      case '-':
        if (text.substr(i, 2) == "->") {
          push(Tok::Arrow, 2);
        } else {
          push(Tok::Minus, 1);
        }
        break;
      default:
        throw SyntaxError(l, co, {"formula"}, std::string("'") + c + "'");
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Formula parse_all() {
    Formula f = formula();
    expect(Tok::End, {"end of input", "binary operator"});
    return f;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool at(Tok t) const { return peek().type == t; }
  Token take() { return toks_[pos_++]; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    std::string found = t.type == Tok::End ? "end of input" : "'" + t.text + "'";
    throw SyntaxError(t.line, t.column, std::move(expected), found);
  }

  Token expect(Tok t, std::vector<std::string> expected = {}) {
    if (!at(t)) {
      if (expected.empty()) expected.push_back(describe(t));
      fail(std::move(expected));
    }
    return take();
  }

  Formula formula() { return iff_level(); }

  Formula iff_level() {
    Formula f = impl_level();
    while (at(Tok::DArrow)) {
      take();
      f = iff(f, impl_level());
    }
    return f;
  }

  Formula impl_level() {
    Formula f = or_level();
    if (at(Tok::Arrow)) {
      take();
      return implies(f, impl_level());
    }
    return f;
  }

  Formula or_level() {
    Formula f = and_level();
    while (at(Tok::Bar)) {
      take();
      f = disj(f, and_level());
    }
    return f;
  }

  Formula and_level() {
    Formula f = unary();
    while (at(Tok::Amp)) {
      take();
      f = conj(f, unary());
    }
    return f;
  }

  // Agent list after an opening brace, consuming the closing brace.
  Coalition agents() {
    if (at(Tok::Star)) {
      take();
      expect(Tok::RBrace);
      return Coalition::all();
    }
    std::vector<std::string> names;
    if (at(Tok::Ident)) {
      names.push_back(take().text);
      while (at(Tok::Comma)) {
        take();
        names.push_back(expect(Tok::Ident).text);
      }
    }
    if (!at(Tok::RBrace)) fail(names.empty() ? std::vector<std::string>{"agent", "'*'", "'}'"}
                                             : std::vector<std::string>{"','", "'}'"});
    take();
    return Coalition(std::move(names));
  }

  void require_singleton(const Coalition& c, const Token& where) {
    if (!c.singleton()) {
      throw SyntaxError(where.line, where.column, {"exactly one agent"},
                        "'" + print_coalition(c) + "'");
    }
  }

  Formula unary() {
    const Token& t = peek();
    switch (t.type) {
      case Tok::Bang:
        take();
        return neg(unary());
      case Tok::Box: {
        Token op = take();
        Coalition group = agents();
        Formula body = unary();
        if (op.text == "C") return common(group, body);
        if (op.text == "E") return everybody(group, body);
        if (op.text == "D") return distributed(group, body);
        require_singleton(group, op);
        if (op.text == "K") return know(group.members().front(), body);
        if (op.text == "Kw") return know_whether(group.members().front(), body);
        return dual(group.members().front(), body);
      }
      case Tok::LBrack:
      case Tok::LAngle: {
        Token open = take();
        const bool diamond = open.type == Tok::LAngle;
        Formula announced = formula();
        expect(diamond ? Tok::RAngle : Tok::RBrack, {diamond ? "'>'" : "']'"});
        int sign = 0;
        if (at(Tok::Minus)) {
          take();
          sign = -1;
        } else if (at(Tok::Plus)) {
          take();
          sign = +1;
        }
        if (!diamond && sign == 0 && !at(Tok::LBrace)) {
          return pal(announced, unary());
        }
        const Token brace = peek();
        expect(Tok::LBrace, sign == 0 ? std::vector<std::string>{"'-'", "'+'", "'{'"}
                                      : std::vector<std::string>{"'{'"});
        Coalition group = agents();
        if (sign == 0) require_singleton(group, brace);
        Formula body = unary();
        if (diamond) {
          return sign > 0 ? dia_global(announced, group, body) : dia_local(announced, group, body);
        }
        return sign > 0 ? ann_global(announced, group, body) : ann_local(announced, group, body);
      }
      case Tok::LParen: {
        take();
        Formula f = formula();
        expect(Tok::RParen);
        return f;
      }
      case Tok::True: take(); return top();
      case Tok::False: take(); return bot();
      case Tok::Ident: return atom(take().text);
      default:
        fail({"'!'", "'('", "'['", "'<'", "modal operator", "'true'", "'false'", "identifier"});
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse(std::string_view text) { return Parser(lex(text)).parse_all(); }

// ---------------------------------------------------------------------------
// Derived forms

namespace {

Coalition resolve_group(const Coalition& c, const std::vector<std::string>* universe) {
  if (c.is_all() && universe) return Coalition(c.resolve(*universe));
  return c;
}

}  // namespace

Formula expand_derived(const Formula& f, const std::vector<std::string>* universe) {
  auto e = [universe](const Formula& g) { return expand_derived(g, universe); };
  auto core_or = [](Formula a, Formula b) { return neg(conj(neg(std::move(a)), neg(std::move(b)))); };
  auto core_implies = [](Formula a, Formula b) { return neg(conj(std::move(a), neg(std::move(b)))); };
  switch (f.kind()) {
    case Kind::Atom:
    case Kind::Top:
    case Kind::Bot: return f;
    case Kind::Not: return neg(e(f.operand()));
    case Kind::And: return conj(e(f.lhs()), e(f.rhs()));
    case Kind::Or: return core_or(e(f.lhs()), e(f.rhs()));
    case Kind::Implies: return core_implies(e(f.lhs()), e(f.rhs()));
    case Kind::Iff: {
      Formula a = e(f.lhs());
      Formula b = e(f.rhs());
      return conj(core_implies(a, b), core_implies(b, a));
    }
    case Kind::Common: return common(resolve_group(f.coalition(), universe), e(f.operand()));
    case Kind::Know: return common(f.coalition(), e(f.operand()));
    case Kind::Everybody: {
      if (f.coalition().is_all() && !universe) throw UnresolvedCoalition();
      Formula body = e(f.operand());
      std::vector<Formula> parts;
      for (const auto& a : f.coalition().resolve(universe ? *universe : std::vector<std::string>{})) {
        parts.push_back(common(Coalition::single(a), body));
      }
      return conj_all(parts);
    }
    case Kind::KnowWhether: {
      Formula body = e(f.operand());
      return core_or(common(f.coalition(), body), common(f.coalition(), neg(body)));
    }
    case Kind::Dual: return neg(common(f.coalition(), neg(e(f.operand()))));
    case Kind::Distributed:
      return distributed(resolve_group(f.coalition(), universe), e(f.operand()));
    case Kind::AnnLocal:
      return ann_local(e(f.announced()), resolve_group(f.coalition(), universe), e(f.body()));
    case Kind::AnnGlobal:
      return ann_global(e(f.announced()), resolve_group(f.coalition(), universe), e(f.body()));
    case Kind::DiaLocal:
      return neg(ann_local(e(f.announced()), resolve_group(f.coalition(), universe), neg(e(f.body()))));
    case Kind::DiaGlobal:
      return neg(ann_global(e(f.announced()), resolve_group(f.coalition(), universe), neg(e(f.body()))));
    case Kind::PalAnn:
      return ann_global(e(f.announced()), resolve_group(Coalition::all(), universe), e(f.body()));
  }
  return f;
}

namespace {

Formula rebuild(const Formula& f, std::vector<Formula> children) {
  return make_node(f.kind(), f.name(), f.coalition(), std::move(children));
}

Formula translate_rec(const Formula& f) {
  if (f.kind() == Kind::PalAnn) {
    return ann_global(translate_rec(f.announced()), Coalition::all(), translate_rec(f.body()));
  }
  if (f.arity() == 0) return f;
  std::vector<Formula> kids;
  kids.reserve(f.arity());
  for (std::size_t i = 0; i < f.arity(); ++i) kids.push_back(translate_rec(f.child(i)));
  return rebuild(f, std::move(kids));
}

}  // namespace

Formula translate_pal(const Formula& f) {
  if (contains_kind(f, {Kind::AnnLocal, Kind::AnnGlobal, Kind::DiaLocal, Kind::DiaGlobal})) {
    throw NotPalFragment();
  }
  return translate_rec(f);
}

bool contains_kind(const Formula& f, std::initializer_list<Kind> kinds) {
  if (std::find(kinds.begin(), kinds.end(), f.kind()) != kinds.end()) return true;
  for (std::size_t i = 0; i < f.arity(); ++i) {
    if (contains_kind(f.child(i), kinds)) return true;
  }
  return false;
}

bool is_propositional(const Formula& f) {
  switch (f.kind()) {
    case Kind::Atom:
    case Kind::Top:
    case Kind::Bot: return true;
    case Kind::Not:
    case Kind::And:
    case Kind::Or:
    case Kind::Implies:
    case Kind::Iff:
      for (std::size_t i = 0; i < f.arity(); ++i) {
        if (!is_propositional(f.child(i))) return false;
      }
      return true;
    default: return false;
  }
}

namespace {

void collect(const Formula& f, std::set<std::string>* atoms, std::set<std::string>* agents) {
  if (atoms && f.kind() == Kind::Atom) atoms->insert(f.name());
  if (agents) agents->insert(f.coalition().members().begin(), f.coalition().members().end());
  for (std::size_t i = 0; i < f.arity(); ++i) collect(f.child(i), atoms, agents);
}

}  // namespace

std::set<std::string> atoms_of(const Formula& f) {
  std::set<std::string> out;
  collect(f, &out, nullptr);
  return out;
}

std::set<std::string> agents_of(const Formula& f) {
  std::set<std::string> out;
  collect(f, nullptr, &out);
  return out;
}

}  // namespace glal

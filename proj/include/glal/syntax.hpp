#pragma once

// Formula AST, concrete grammar, printer and derived-operator expansion.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace glal {

/// Finite set of agent names. The `all` coalition is a placeholder for the
/// full agent set of whatever model the formula is evaluated in.
class Coalition {
 public:
  Coalition() = default;
  Coalition(std::initializer_list<std::string> members);
  explicit Coalition(std::vector<std::string> members);

  static Coalition all();
  static Coalition single(std::string agent);

  bool is_all() const { return all_; }
  bool empty() const { return !all_ && members_.empty(); }
  bool singleton() const { return !all_ && members_.size() == 1; }
  const std::vector<std::string>& members() const { return members_; }
  bool contains(const std::string& agent) const;

  /// Members, with `all` replaced by `universe`.
  std::vector<std::string> resolve(const std::vector<std::string>& universe) const;

  friend bool operator==(const Coalition&, const Coalition&) = default;
  friend auto operator<=>(const Coalition&, const Coalition&) = default;

 private:
  bool all_ = false;
  std::vector<std::string> members_;  // sorted, unique
};

enum class Kind : std::uint8_t {
  Atom,
  Top,
  Bot,
  Not,
  And,
  Or,
  Implies,
  Iff,
  Common,
  Know,
  Everybody,
  KnowWhether,
  Dual,
  Distributed,
  AnnLocal,
  AnnGlobal,
  DiaLocal,
  DiaGlobal,
  PalAnn,
};

const char* kind_name(Kind k);

/// Immutable, structurally shared formula tree. Copying a Formula copies a
/// handle; equality and hashing are structural.
class Formula {
 public:
  Kind kind() const;
  /// Atom name; empty for other kinds.
  const std::string& name() const;
  /// Coalition of an epistemic or announcement operator. Know/KnowWhether/Dual
  /// carry a singleton.
  const Coalition& coalition() const;
  /// Agent of Know/KnowWhether/Dual.
  const std::string& agent() const;

  std::size_t arity() const;
  const Formula& child(std::size_t i) const;
  /// Sole operand of unary nodes; body (second slot) of announcements.
  const Formula& operand() const;
  const Formula& lhs() const { return child(0); }
  const Formula& rhs() const { return child(1); }
  /// Announced formula of announcement and diamond nodes.
  const Formula& announced() const { return child(0); }
  const Formula& body() const { return child(1); }

  std::size_t size() const;
  std::size_t depth() const;
  std::size_t hash() const;

  bool is_announcement() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

  struct Node;

 private:
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  friend Formula make_node(Kind, std::string, Coalition, std::vector<Formula>);
  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

Formula make_node(Kind kind, std::string name, Coalition coalition, std::vector<Formula> children);

Formula atom(std::string name);
Formula top();
Formula bot();
Formula neg(Formula f);
Formula conj(Formula a, Formula b);
Formula disj(Formula a, Formula b);
Formula implies(Formula a, Formula b);
Formula iff(Formula a, Formula b);
Formula common(Coalition group, Formula f);
Formula know(std::string agent, Formula f);
Formula everybody(Coalition group, Formula f);
Formula know_whether(std::string agent, Formula f);
Formula dual(std::string agent, Formula f);
Formula distributed(Coalition group, Formula f);
Formula ann_local(Formula announced, Coalition group, Formula body);
Formula ann_global(Formula announced, Coalition group, Formula body);
Formula dia_local(Formula announced, Coalition group, Formula body);
Formula dia_global(Formula announced, Coalition group, Formula body);
Formula pal(Formula announced, Formula body);

/// Left-folded conjunction / disjunction; empty input gives top / bot.
Formula conj_all(const std::vector<Formula>& fs);
Formula disj_all(const std::vector<Formula>& fs);

/// Parse the ASCII grammar. Throws SyntaxError or UnknownOperator.
Formula parse(std::string_view text);

/// Fully parenthesized canonical text; parse(print(f)) == f.
std::string print(const Formula& f);

/// Rewrite into the core kinds Atom/Top/Bot/Not/And/Common/AnnLocal/AnnGlobal/
/// Distributed. Everybody expands over members sorted by name. When `universe`
/// is given every `*` coalition is replaced by it; without it, `E{*}` throws
/// UnresolvedCoalition and other `*` coalitions are kept.
Formula expand_derived(const Formula& f, const std::vector<std::string>* universe = nullptr);

/// Embed a public-announcement formula: every PalAnn(a, b) becomes
/// AnnGlobal(a', *, b'). Throws NotPalFragment on GLAL announcement nodes.
Formula translate_pal(const Formula& f);

bool contains_kind(const Formula& f, std::initializer_list<Kind> kinds);
bool is_propositional(const Formula& f);
std::set<std::string> atoms_of(const Formula& f);
/// Named agents occurring in coalitions (the `*` placeholder contributes none).
std::set<std::string> agents_of(const Formula& f);

}  // namespace glal

#include "filtra/formula.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace filtra {

struct Formula::Node {
  Connective kind;
  std::string name;
  Formula left;
  Formula right;
};

Formula Formula::atom(std::string name) {
  return Formula(std::make_shared<const Node>(
      Node{Connective::kAtom, std::move(name), Formula(nullptr), Formula(nullptr)}));
}

Formula Formula::negation(Formula f) {
  return Formula(std::make_shared<const Node>(
      Node{Connective::kNot, {}, std::move(f), Formula(nullptr)}));
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(
      Node{Connective::kOr, {}, std::move(lhs), std::move(rhs)}));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return negation(disjunction(negation(std::move(lhs)), negation(std::move(rhs))));
}

Formula Formula::implication(Formula lhs, Formula rhs) {
  return disjunction(negation(std::move(lhs)), std::move(rhs));
}

Formula Formula::biconditional(Formula lhs, Formula rhs) {
  return conjunction(implication(lhs, rhs), implication(rhs, lhs));
}

Connective Formula::kind() const { return node_->kind; }

const std::string& Formula::atom_name() const {
  if (node_->kind != Connective::kAtom) throw InvariantError("not an atom");
  return node_->name;
}

const Formula& Formula::operand() const {
  if (node_->kind != Connective::kNot) throw InvariantError("not a negation");
  return node_->left;
}

const Formula& Formula::lhs() const {
  if (node_->kind != Connective::kOr) throw InvariantError("not a disjunction");
  return node_->left;
}

const Formula& Formula::rhs() const {
  if (node_->kind != Connective::kOr) throw InvariantError("not a disjunction");
  return node_->right;
}

std::size_t Formula::depth() const {
  switch (kind()) {
    case Connective::kAtom: return 0;
    case Connective::kNot: return 1 + operand().depth();
    case Connective::kOr: return 1 + std::max(lhs().depth(), rhs().depth());
  }
  return 0;
}

std::size_t Formula::size() const {
  switch (kind()) {
    case Connective::kAtom: return 1;
    case Connective::kNot: return 1 + operand().size();
    case Connective::kOr: return 1 + lhs().size() + rhs().size();
  }
  return 0;
}

void Formula::collect_atoms(std::set<std::string>& out) const {
  switch (kind()) {
    case Connective::kAtom: out.insert(atom_name()); break;
    case Connective::kNot: operand().collect_atoms(out); break;
    case Connective::kOr:
      lhs().collect_atoms(out);
      rhs().collect_atoms(out);
      break;
  }
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Connective::kAtom: return a.atom_name() == b.atom_name();
    case Connective::kNot: return a.operand() == b.operand();
    case Connective::kOr: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
  return false;
}

namespace {

enum class Token { kIdent, kNot, kAnd, kOr, kImplies, kIff, kLParen, kRParen, kEnd };

const char* describe(Token t) {
  switch (t) {
    case Token::kIdent: return "atom";
    case Token::kNot: return "'~'";
    case Token::kAnd: return "'&'";
    case Token::kOr: return "'|'";
    case Token::kImplies: return "'->'";
    case Token::kIff: return "'<->'";
    case Token::kLParen: return "'('";
    case Token::kRParen: return "')'";
    case Token::kEnd: return "end of input";
  }
  return "?";
}

class Parser {
 public:
  Parser(std::string_view text, const AtomSet& atoms) : text_(text), atoms_(atoms) { advance(); }

  Formula parse() {
    Formula f = parse_iff();
    if (token_ != Token::kEnd) fail(std::string("unexpected ") + describe(token_));
    return f;
  }

 private:
  Formula parse_iff() {
    Formula f = parse_implies();
    while (token_ == Token::kIff) {
      advance();
      f = Formula::biconditional(f, parse_implies());
    }
    return f;
  }

  Formula parse_implies() {
    Formula f = parse_or();
    if (token_ == Token::kImplies) {
      advance();
      return Formula::implication(f, parse_implies());
    }
    return f;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (token_ == Token::kOr) {
      advance();
      f = Formula::disjunction(f, parse_and());
    }
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (token_ == Token::kAnd) {
      advance();
      f = Formula::conjunction(f, parse_unary());
    }
    return f;
  }

  Formula parse_unary() {
    if (token_ == Token::kNot) {
      advance();
      return Formula::negation(parse_unary());
    }
    if (token_ == Token::kLParen) {
      advance();
      Formula f = parse_iff();
      if (token_ != Token::kRParen) fail(std::string("expected ')' but found ") + describe(token_));
      advance();
      return f;
    }
    if (token_ == Token::kIdent) {
      std::string name = ident_;
      if (!atoms_.contains(name)) throw UnknownAtomError(name);
      advance();
      return Formula::atom(std::move(name));
    }
    fail(std::string("expected formula but found ") + describe(token_));
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, start_); }

  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    start_ = pos_;
    if (pos_ >= text_.size()) {
      token_ = Token::kEnd;
      return;
    }
    const char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      while (end < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) {
        ++end;
      }
      ident_ = std::string(text_.substr(pos_, end - pos_));
      pos_ = end;
      token_ = Token::kIdent;
      return;
    }
    auto starts = [&](std::string_view s) { return text_.substr(pos_, s.size()) == s; };
    if (starts("<->")) {
      pos_ += 3;
      token_ = Token::kIff;
    } else if (starts("->")) {
      pos_ += 2;
      token_ = Token::kImplies;
    } else {
      switch (c) {
        case '~': token_ = Token::kNot; break;
        case '&': token_ = Token::kAnd; break;
        case '|': token_ = Token::kOr; break;
        case '(': token_ = Token::kLParen; break;
        case ')': token_ = Token::kRParen; break;
        default: fail(std::string("unexpected character '") + c + "'");
      }
      ++pos_;
    }
  }

  std::string_view text_;
  const AtomSet& atoms_;
  std::size_t pos_ = 0;
  std::size_t start_ = 0;
  Token token_ = Token::kEnd;
  std::string ident_;
};

PointSet evaluate(const Formula& f, const Universe& u) {
  switch (f.kind()) {
    case Connective::kAtom: {
      auto idx = u.atoms().index_of(f.atom_name());
      if (!idx) throw UnknownAtomError(f.atom_name());
      return u.extension(*idx);
    }
    case Connective::kNot: return evaluate(f.operand(), u).complement();
    case Connective::kOr: return evaluate(f.lhs(), u) | evaluate(f.rhs(), u);
  }
  return u.none();
}

}  // namespace

Formula parse_formula(std::string_view text, const AtomSet& atoms) {
  return Parser(text, atoms).parse();
}

std::string print_formula(const Formula& f) {
  switch (f.kind()) {
    case Connective::kAtom: return f.atom_name();
    case Connective::kNot: return "(~" + print_formula(f.operand()) + ")";
    case Connective::kOr: return "(" + print_formula(f.lhs()) + " | " + print_formula(f.rhs()) + ")";
  }
  return {};
}

PointSet truth_set(const Formula& f, const Universe& u) { return evaluate(f, u); }

Classification classify(const Formula& f, const Universe& u) {
  const auto canonical = canonical_universe(u.atoms(), kMaxAtoms);
  const PointSet s = truth_set(f, *canonical);
  if (s.full()) return Classification::kTautology;
  if (s.empty()) return Classification::kContradiction;
  return Classification::kContingent;
}

bool are_equivalent(const Formula& f, const Formula& g, const Universe& u) {
  const auto canonical = canonical_universe(u.atoms(), kMaxAtoms);
  return truth_set(f, *canonical) == truth_set(g, *canonical);
}

const char* to_string(Classification c) {
  switch (c) {
    case Classification::kTautology: return "tautology";
    case Classification::kContradiction: return "contradiction";
    case Classification::kContingent: return "contingent";
  }
  return "?";
}

std::optional<std::string> representative_formula(const PointSet& s, const Universe& u) {
  const AtomSet& atoms = u.atoms();
  if (atoms.empty()) return std::nullopt;
  if (s.empty()) return atoms.name(0) + " & ~" + atoms.name(0);

  // A cube fixes the atoms in `care` to the values in `value`.
  auto cube_points = [&](std::uint64_t care, std::uint64_t value) {
    PointSet out = u.none();
    for (std::size_t i = 0; i < u.size(); ++i) {
      if ((u.point(i).assignment & care) == value) out.insert(i);
    }
    return out;
  };

  const std::uint64_t all_atoms = PointSet::full_mask(atoms.size());
  std::vector<std::string> cubes;
  PointSet covered = u.none();
  for (std::size_t i : s.members()) {
    if (covered.contains(i)) continue;
    std::uint64_t care = all_atoms;
    const std::uint64_t value = u.point(i).assignment;
    if (!cube_points(care, value).subset_of(s)) return std::nullopt;
    for (std::size_t a = 0; a < atoms.size(); ++a) {
      const std::uint64_t trial = care & ~(std::uint64_t{1} << a);
      if (cube_points(trial, value & trial).subset_of(s)) care = trial;
    }
    covered = covered | cube_points(care, value & care);
    if (care == 0) return atoms.name(0) + " | ~" + atoms.name(0);
    std::string cube;
    std::size_t literals = 0;
    for (std::size_t a = 0; a < atoms.size(); ++a) {
      if (((care >> a) & 1U) == 0) continue;
      if (literals++ > 0) cube += " & ";
      if (((value >> a) & 1U) == 0) cube += "~";
      cube += atoms.name(a);
    }
    cubes.push_back(literals > 1 ? "(" + cube + ")" : cube);
  }
  if (cubes.size() == 1 && cubes[0].front() == '(') {
    return cubes[0].substr(1, cubes[0].size() - 2);
  }
  std::string out;
  for (std::size_t k = 0; k < cubes.size(); ++k) {
    if (k > 0) out += " | ";
    out += cubes[k];
  }
  return out;
}

}  // namespace filtra

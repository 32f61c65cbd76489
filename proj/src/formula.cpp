#include "gste/formula.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <stdexcept>

#include "gste/diagnostics.hpp"

namespace gste {

// ---------------------------------------------------------------------------
// Constants and valuations

Constants::Constants(std::initializer_list<std::string> names) {
  for (const auto& n : names) add(n);
}

bool Constants::add(std::string name) {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it != names_.end() && *it == name) return false;
  names_.insert(it, std::move(name));
  return true;
}

std::size_t Constants::index_of(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return npos;
  return static_cast<std::size_t>(it - names_.begin());
}

std::vector<Valuation> all_valuations(const Constants& constants) {
  const std::size_t n = constants.size();
  if (n >= 63) throw std::length_error("too many symbolic constants to enumerate");
  std::vector<Valuation> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << n); ++k) {
    Valuation phi;
    for (std::size_t i = 0; i < n; ++i) phi.set(i, (k >> (n - 1 - i)) & 1U);
    out.push_back(phi);
  }
  return out;
}

std::string to_string(const Valuation& phi, const Constants& constants) {
  std::string out = "{";
  for (std::size_t i = 0; i < constants.size(); ++i) {
    if (i) out += ", ";
    out += constants.names()[i] + '=' + (phi[i] ? '1' : '0');
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// Constructors

Prop Prop::constant(bool v) {
  Prop p;
  p.kind = Kind::Const;
  p.value = v;
  return p;
}

Prop Prop::variable(std::string name, std::size_t index) {
  Prop p;
  p.kind = Kind::Var;
  p.name = std::move(name);
  p.var = index;
  return p;
}

Prop Prop::negation(Prop a) {
  Prop p;
  p.kind = Kind::Not;
  p.args.push_back(std::move(a));
  return p;
}

Prop Prop::conj(Prop a, Prop b) {
  Prop p;
  p.kind = Kind::And;
  p.args.push_back(std::move(a));
  p.args.push_back(std::move(b));
  return p;
}

Prop Prop::disj(Prop a, Prop b) {
  Prop p = conj(std::move(a), std::move(b));
  p.kind = Kind::Or;
  return p;
}

bool eval_prop(const Prop& p, const Valuation& phi) {
  switch (p.kind) {
    case Prop::Kind::Const: return p.value;
    case Prop::Kind::Var: return phi[p.var];
    case Prop::Kind::Not: return !eval_prop(p.args[0], phi);
    case Prop::Kind::And: return eval_prop(p.args[0], phi) && eval_prop(p.args[1], phi);
    case Prop::Kind::Or: return eval_prop(p.args[0], phi) || eval_prop(p.args[1], phi);
  }
  return false;
}

Formula Formula::is(std::string node, Prop value) {
  Formula f;
  f.kind = Kind::Is;
  f.node = std::move(node);
  f.prop = std::move(value);
  return f;
}

Formula Formula::conj(std::vector<Formula> parts) {
  Formula f;
  f.kind = Kind::And;
  for (auto& p : parts) {
    if (p.kind == Kind::And) {
      for (auto& q : p.args) f.args.push_back(std::move(q));
    } else {
      f.args.push_back(std::move(p));
    }
  }
  if (f.args.size() == 1) return std::move(f.args.front());
  return f;
}

Formula Formula::guard(Prop p, Formula body) {
  Formula f;
  f.kind = Kind::Guard;
  f.prop = std::move(p);
  f.args.push_back(std::move(body));
  return f;
}

Formula Formula::next(Formula body, std::size_t times) {
  for (std::size_t i = 0; i < times; ++i) {
    Formula f;
    f.kind = Kind::Next;
    f.args.push_back(std::move(body));
    body = std::move(f);
  }
  return body;
}

std::size_t depth(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::Is: return 0;
    case Formula::Kind::Next: return 1 + depth(f.body());
    case Formula::Kind::Guard: return depth(f.body());
    case Formula::Kind::And: {
      std::size_t d = 0;
      for (const auto& a : f.args) d = std::max(d, depth(a));
      return d;
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Lexer and recursive-descent parser

namespace {

enum class Tok { Ident, Number, Eq, Amp, Bar, Bang, Arrow, LParen, RParen, End };

struct Lexeme {
  Tok kind;
  std::string text;
  int offset;  // 0-based within the formula text
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Number: return "0 or 1";
    case Tok::Eq: return "'='";
    case Tok::Amp: return "'&'";
    case Tok::Bar: return "'|'";
    case Tok::Bang: return "'!'";
    case Tok::Arrow: return "'->'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::End: return "end of formula";
  }
  return "?";
}

class Parser {
 public:
  Parser(std::string_view text, const Constants& constants, TextPos at, bool gtel)
      : constants_(constants), at_(at), gtel_(gtel) {
    lex(text);
  }

  Formula formula() {
    Formula f = conjunction();
    expect(Tok::End);
    return f;
  }

  Prop prop_only() {
    Prop p = prop_or();
    expect(Tok::End);
    validate(p);
    return p;
  }

 private:
  void lex(std::string_view s) {
    std::size_t i = 0;
    while (i < s.size()) {
      const char c = s[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      const int off = static_cast<int>(i);
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t j = i + 1;
        while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
        while (j < s.size() && s[j] == '\'') ++j;
        toks_.push_back({Tok::Ident, std::string(s.substr(i, j - i)), off});
        i = j;
        continue;
      }
      switch (c) {
        case '0':
        case '1': toks_.push_back({Tok::Number, std::string(1, c), off}); break;
        case '=': toks_.push_back({Tok::Eq, "=", off}); break;
        case '&': toks_.push_back({Tok::Amp, "&", off}); break;
        case '|': toks_.push_back({Tok::Bar, "|", off}); break;
        case '!': toks_.push_back({Tok::Bang, "!", off}); break;
        case '(': toks_.push_back({Tok::LParen, "(", off}); break;
        case ')': toks_.push_back({Tok::RParen, ")", off}); break;
        case '-':
          if (i + 1 < s.size() && s[i + 1] == '>') {
            toks_.push_back({Tok::Arrow, "->", off});
            ++i;
            break;
          }
          [[fallthrough]];
        default: fail(DiagCode::Syntax, at_.line, col(off), std::string("unexpected character '") + c + "'");
      }
      ++i;
    }
    toks_.push_back({Tok::End, "", static_cast<int>(s.size())});
  }

  int col(int offset) const { return at_.column + offset; }
  const Lexeme& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  bool at(Tok t) const { return peek().kind == t; }
  bool at_ident(std::string_view word) const { return at(Tok::Ident) && peek().text == word; }

  [[noreturn]] void error_here(const std::string& what) const {
    const Lexeme& l = peek();
    fail(DiagCode::Syntax, at_.line, col(l.offset),
         what + ", found " + (l.kind == Tok::End ? std::string(describe(l.kind)) : "'" + l.text + "'"));
  }

  const Lexeme& expect(Tok t) {
    if (!at(t)) error_here(std::string("expected ") + describe(t));
    return toks_[pos_++];
  }

  // conjunction := item ('&' item)*
  Formula conjunction() {
    std::vector<Formula> parts;
    parts.push_back(item());
    while (at(Tok::Amp)) {
      ++pos_;
      parts.push_back(item());
    }
    return Formula::conj(std::move(parts));
  }

  bool at_next() const {
    return at_ident("N") && (peek(1).kind == Tok::LParen || (peek(1).kind == Tok::Ident && peek(1).text == "N"));
  }

  // item := 'N' item | prop '->' item | '(' conjunction ')' | 'true' | node '=' value
  Formula item() {
    if (at_next()) {
      if (gtel_) fail(DiagCode::NextInGtel, at_.line, col(peek().offset), "next-time operator N is not allowed here");
      ++pos_;
      return Formula::next(item());
    }
    if (auto guard = try_guard()) {
      validate(*guard);
      return Formula::guard(std::move(*guard), item());
    }
    if (at(Tok::LParen)) {
      ++pos_;
      Formula f = conjunction();
      expect(Tok::RParen);
      return f;
    }
    if (at(Tok::Ident) && peek(1).kind == Tok::Eq) {
      const Lexeme node = toks_[pos_];
      pos_ += 2;
      Prop value;
      if (at(Tok::Number)) {
        value = Prop::constant(toks_[pos_++].text == "1");
      } else {
        value = prop_unary();
        validate(value);
      }
      Formula f = Formula::is(node.text, std::move(value));
      f.line = at_.line;
      f.column = col(node.offset);
      return f;
    }
    if (at_ident("true")) {
      ++pos_;
      return Formula::truth();
    }
    error_here("expected a formula");
  }

  // A guard is a propositional formula followed by '->'. Anything else
  // rewinds and is parsed as a formula item.
  std::optional<Prop> try_guard() {
    const std::size_t saved = pos_;
    try {
      Prop p = prop_or();
      if (at(Tok::Arrow)) {
        ++pos_;
        return p;
      }
    } catch (const ParseError&) {
    }
    pos_ = saved;
    return std::nullopt;
  }

  Prop prop_or() {
    Prop p = prop_and();
    while (at(Tok::Bar)) {
      ++pos_;
      p = Prop::disj(std::move(p), prop_and());
    }
    return p;
  }

  Prop prop_and() {
    Prop p = prop_unary();
    while (at(Tok::Amp)) {
      ++pos_;
      p = Prop::conj(std::move(p), prop_unary());
    }
    return p;
  }

  Prop prop_unary() {
    if (at(Tok::Bang)) {
      ++pos_;
      return Prop::negation(prop_unary());
    }
    if (at(Tok::LParen)) {
      ++pos_;
      Prop p = prop_or();
      expect(Tok::RParen);
      return p;
    }
    if (at(Tok::Number)) return Prop::constant(toks_[pos_++].text == "1");
    if (at_ident("true") || at_ident("false")) return Prop::constant(toks_[pos_++].text == "true");
    if (at(Tok::Ident)) {
      const Lexeme& l = toks_[pos_++];
      Prop p = Prop::variable(l.text, Constants::npos);
      p.column = col(l.offset);
      return p;
    }
    error_here("expected a propositional formula");
  }

  void validate(Prop& p) const {
    if (p.kind == Prop::Kind::Var) {
      p.var = constants_.index_of(p.name);
      if (p.var == Constants::npos)
        fail(DiagCode::UnknownConstant, at_.line, p.column, "unknown symbolic constant '" + p.name + "'");
    }
    for (auto& a : p.args) validate(a);
  }

  const Constants& constants_;
  TextPos at_;
  bool gtel_;
  std::vector<Lexeme> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Prop parse_prop(std::string_view text, const Constants& constants, TextPos at) {
  return Parser(text, constants, at, false).prop_only();
}

Formula parse_tel(std::string_view text, const Constants& constants, TextPos at) {
  return Parser(text, constants, at, false).formula();
}

Formula parse_gtel(std::string_view text, const Constants& constants, TextPos at) {
  return Parser(text, constants, at, true).formula();
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

// Precedence: 0 = or, 1 = and, 2 = unary/atom.
std::string render_prop(const Prop& p, int context) {
  switch (p.kind) {
    case Prop::Kind::Const: return p.value ? "true" : "false";
    case Prop::Kind::Var: return p.name;
    case Prop::Kind::Not: return "!" + render_prop(p.args[0], 2);
    case Prop::Kind::And: {
      std::string s = render_prop(p.args[0], 1) + " & " + render_prop(p.args[1], 2);
      return context > 1 ? "(" + s + ")" : s;
    }
    case Prop::Kind::Or: {
      std::string s = render_prop(p.args[0], 0) + " | " + render_prop(p.args[1], 1);
      return context > 0 ? "(" + s + ")" : s;
    }
  }
  return "";
}

std::string render_item(const Formula& f);

std::string render_formula(const Formula& f) {
  if (f.kind != Formula::Kind::And) return render_item(f);
  if (f.args.empty()) return "true";
  std::string out;
  for (std::size_t i = 0; i < f.args.size(); ++i) {
    if (i) out += " & ";
    const Formula& a = f.args[i];
    const bool wrap = a.kind == Formula::Kind::Guard || (a.kind == Formula::Kind::And && !a.args.empty());
    out += wrap ? "(" + render_formula(a) + ")" : render_item(a);
  }
  return out;
}

std::string render_item(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::Is:
      if (f.prop.is_const()) return f.node + (f.prop.value ? " = 1" : " = 0");
      return f.node + " = " + render_prop(f.prop, 2);
    case Formula::Kind::And:
      if (f.args.empty()) return "true";
      return "(" + render_formula(f) + ")";
    case Formula::Kind::Guard: return render_prop(f.prop, 0) + " -> " + render_item(f.body());
    case Formula::Kind::Next:
      if (f.body().kind == Formula::Kind::Next) return "N " + render_item(f.body());
      return "N(" + render_formula(f.body()) + ")";
  }
  return "";
}

}  // namespace

std::string render(const Prop& p) { return render_prop(p, 0); }
std::string render(const Formula& f) { return render_formula(f); }

// ---------------------------------------------------------------------------
// Semantics

Formula bind(const Formula& f, const Netlist& net) {
  Formula out = f;
  if (out.kind == Formula::Kind::Is) {
    auto id = net.find(out.node);
    if (!id) fail(DiagCode::UndeclaredNode, out.line, out.column, "formula mentions undeclared node '" + out.node + "'");
    out.id = *id;
    out.bound = true;
  }
  for (auto& a : out.args) a = bind(a, net);
  return out;
}

Formula expand_sugar(const Formula& f) {
  if (f.kind == Formula::Kind::Is) {
    if (f.prop.is_const()) return f;
    Formula zero = f;
    zero.prop = Prop::constant(false);
    Formula one = f;
    one.prop = Prop::constant(true);
    std::vector<Formula> parts;
    parts.push_back(Formula::guard(Prop::negation(f.prop), std::move(zero)));
    parts.push_back(Formula::guard(f.prop, std::move(one)));
    return Formula::conj(std::move(parts));
  }
  Formula out = f;
  for (auto& a : out.args) a = expand_sugar(a);
  if (out.kind == Formula::Kind::And) return Formula::conj(std::move(out.args));
  return out;
}

namespace {

bool sat_at(const Valuation& phi, const Sequence& seq, const Formula& f, std::size_t t) {
  switch (f.kind) {
    case Formula::Kind::Is: {
      const Quad required = from_bool(eval_prop(f.prop, phi));
      return leq(required, seq[t][f.id]);
    }
    case Formula::Kind::And:
      return std::all_of(f.args.begin(), f.args.end(), [&](const Formula& a) { return sat_at(phi, seq, a, t); });
    case Formula::Kind::Guard: return !eval_prop(f.prop, phi) || sat_at(phi, seq, f.body(), t);
    case Formula::Kind::Next: return sat_at(phi, seq, f.body(), t + 1);
  }
  return false;
}

bool sat_state_impl(const Valuation& phi, const State& s, const Formula& g) {
  switch (g.kind) {
    case Formula::Kind::Is: return leq(from_bool(eval_prop(g.prop, phi)), s[g.id]);
    case Formula::Kind::And:
      return std::all_of(g.args.begin(), g.args.end(), [&](const Formula& a) { return sat_state_impl(phi, s, a); });
    case Formula::Kind::Guard: return !eval_prop(g.prop, phi) || sat_state_impl(phi, s, g.body());
    case Formula::Kind::Next: throw std::invalid_argument("state satisfaction of a formula containing N");
  }
  return false;
}

void accumulate_defining(const Valuation& phi, const Formula& g, State& acc) {
  switch (g.kind) {
    case Formula::Kind::Is: acc[g.id] = lub(acc[g.id], from_bool(eval_prop(g.prop, phi))); break;
    case Formula::Kind::And:
      for (const auto& a : g.args) accumulate_defining(phi, a, acc);
      break;
    case Formula::Kind::Guard:
      if (eval_prop(g.prop, phi)) accumulate_defining(phi, g.body(), acc);
      break;
    case Formula::Kind::Next: throw std::invalid_argument("defining state of a formula containing N");
  }
}

void collect_strata(const Formula& f, std::size_t t, const std::vector<Prop>& guards,
                    std::vector<std::vector<Formula>>& out) {
  switch (f.kind) {
    case Formula::Kind::Is: {
      Formula g = f;
      for (auto it = guards.rbegin(); it != guards.rend(); ++it) g = Formula::guard(*it, std::move(g));
      out[t].push_back(std::move(g));
      break;
    }
    case Formula::Kind::And:
      for (const auto& a : f.args) collect_strata(a, t, guards, out);
      break;
    case Formula::Kind::Guard: {
      auto inner = guards;
      inner.push_back(f.prop);
      collect_strata(f.body(), t, inner, out);
      break;
    }
    case Formula::Kind::Next: collect_strata(f.body(), t + 1, guards, out); break;
  }
}

}  // namespace

bool sat_state(const Valuation& phi, const State& s, const Formula& g) { return sat_state_impl(phi, s, g); }

bool sat_seq(const Valuation& phi, const Sequence& seq, const Formula& f) {
  if (seq.length() == 0 || depth(f) > seq.depth())
    throw std::invalid_argument("formula depth exceeds sequence depth");
  return sat_at(phi, seq, f, 0);
}

State defining_state(const Valuation& phi, const Formula& g, std::size_t nodes) {
  State acc(nodes, Quad::X);
  accumulate_defining(phi, g, acc);
  return acc;
}

std::vector<Formula> strata(const Formula& f, std::size_t min_depth) {
  std::vector<std::vector<Formula>> parts(std::max(depth(f), min_depth) + 1);
  collect_strata(f, 0, {}, parts);
  std::vector<Formula> out;
  out.reserve(parts.size());
  for (auto& p : parts) out.push_back(Formula::conj(std::move(p)));
  return out;
}

}  // namespace gste

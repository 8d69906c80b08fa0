#pragma once

#include <cctype>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chern.hpp"
#include "grassmann.hpp"

namespace poscones {

// Parsed class expression. Parsing is model-free: every node carries a
// static weight (std::nullopt once a sum mixes weights), so expressions can
// be weight-checked before any ring exists. Evaluation binds monomial names
// and bundle symbols against a concrete ring and registry.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind {
    number,    // value
    monomial,  // name (a ring basis monomial, e.g. "xi", "s[2,1]⊗1")
    chern,     // c_{index}(bundle)
    segre,     // s_{index}(bundle) or s_{index}(bundle^v) when dual
    schur,     // schur[partition](bundle)
    neg,       // -lhs
    add,       // lhs + rhs
    sub,       // lhs - rhs
    mul,       // lhs * rhs
    pow        // lhs ^ index
  };

  Kind kind = Kind::number;
  Rational value;
  std::string name;                    // monomial name or bundle symbol
  std::vector<int> partition;          // schur
  int index = 0;                       // chern/segre index, pow exponent
  bool dual = false;                   // segre of the dual bundle
  ExprPtr lhs, rhs;
  std::optional<int> weight;           // nullopt: inhomogeneous

  // the static weight of name units; product monomials add these up
  static int unit_weight(const std::string& n);
};

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  ExprPtr parse() {
    ExprPtr e = expression();
    skip_ws();
    if (pos_ != text_.size())
      fail("unexpected input at '" + rest_snippet() + "'");
    return e;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("expression: " + msg);
  }

  std::string rest_snippet() const {
    return std::string(text_.substr(pos_, std::min<std::size_t>(
                                              12, text_.size() - pos_)));
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c, const char* where) {
    if (!eat(c))
      fail(std::string("expected '") + c + "' " + where + " near '" +
           rest_snippet() + "'");
  }

  bool eat_tensor() {
    skip_ws();
    static const std::string_view tensor = "\xE2\x8A\x97";  // ⊗
    if (text_.substr(pos_, tensor.size()) == tensor) {
      pos_ += tensor.size();
      return true;
    }
    return false;
  }

  bool peek_digit() {
    skip_ws();
    return pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  std::string read_digits() {
    std::string out;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      out += text_[pos_++];
    return out;
  }

  long long read_int(const char* what) {
    skip_ws();
    std::string d = read_digits();
    if (d.empty()) fail(std::string("expected ") + what + " near '" +
                        rest_snippet() + "'");
    if (d.size() > 9) fail(std::string("absurdly large ") + what);
    return std::stoll(d);
  }

  std::string read_word() {
    skip_ws();
    std::string out;
    if (pos_ < text_.size() &&
        std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_'))
        out += text_[pos_++];
    }
    return out;
  }

  std::vector<int> read_partition() {
    expect('[', "to open a partition");
    std::vector<int> parts;
    skip_ws();
    if (!eat(']')) {
      for (;;) {
        parts.push_back(static_cast<int>(read_int("partition part")));
        if (eat(']')) break;
        expect(',', "between partition parts");
      }
    }
    for (std::size_t i = 0; i < parts.size(); ++i)
      if (parts[i] <= 0 || (i > 0 && parts[i] > parts[i - 1]))
        fail("partition parts must be positive and weakly decreasing");
    return parts;
  }

  std::string read_bundle_ref(bool* dual) {
    expect('(', "before a bundle name");
    std::string name = read_word();
    if (name.empty())
      fail("expected a bundle name near '" + rest_snippet() + "'");
    if (dual) {
      *dual = false;
      skip_ws();
      if (pos_ + 1 < text_.size() && text_[pos_] == '^' &&
          text_[pos_ + 1] == 'v') {
        pos_ += 2;
        *dual = true;
      }
    }
    expect(')', "after a bundle name");
    return name;
  }

  static ExprPtr make(Expr e) { return std::make_shared<Expr>(std::move(e)); }

  static std::optional<int> merge_add(const std::optional<int>& a,
                                      const std::optional<int>& b) {
    if (a && b && *a == *b) return a;
    return std::nullopt;
  }

  static std::optional<int> merge_mul(const std::optional<int>& a,
                                      const std::optional<int>& b) {
    if (a && b) return *a + *b;
    return std::nullopt;
  }

  ExprPtr expression() {
    bool negate = false;
    skip_ws();
    if (eat('-'))
      negate = true;
    else
      eat('+');
    ExprPtr acc = term();
    if (negate) {
      Expr e;
      e.kind = Expr::Kind::neg;
      e.lhs = acc;
      e.weight = acc->weight;
      acc = make(std::move(e));
    }
    for (;;) {
      skip_ws();
      if (eat('+')) {
        ExprPtr rhs = term();
        Expr e;
        e.kind = Expr::Kind::add;
        e.lhs = acc;
        e.rhs = rhs;
        e.weight = merge_add(acc->weight, rhs->weight);
        acc = make(std::move(e));
      } else if (eat('-')) {
        ExprPtr rhs = term();
        Expr e;
        e.kind = Expr::Kind::sub;
        e.lhs = acc;
        e.rhs = rhs;
        e.weight = merge_add(acc->weight, rhs->weight);
        acc = make(std::move(e));
      } else {
        return acc;
      }
    }
  }

  ExprPtr term() {
    ExprPtr acc = factor();
    while (eat('*')) {
      ExprPtr rhs = factor();
      Expr e;
      e.kind = Expr::Kind::mul;
      e.lhs = acc;
      e.rhs = rhs;
      e.weight = merge_mul(acc->weight, rhs->weight);
      acc = make(std::move(e));
    }
    return acc;
  }

  ExprPtr factor() {
    ExprPtr base = primary();
    skip_ws();
    // '^' binds a literal exponent; '^v' belongs to segre tokens only and
    // cannot reach here (it is consumed inside read_bundle_ref).
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      int k = static_cast<int>(read_int("exponent"));
      Expr e;
      e.kind = Expr::Kind::pow;
      e.lhs = base;
      e.index = k;
      if (base->weight) e.weight = *base->weight * k;
      return make(std::move(e));
    }
    return base;
  }

  ExprPtr primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];

    if (c == '(') {
      ++pos_;
      ExprPtr inner = expression();
      expect(')', "to close the group");
      return maybe_tensor_chain(inner, std::nullopt);
    }

    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = read_digits();
      Rational v{Integer(num)};
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        std::string den = read_digits();
        if (den.empty()) fail("expected a denominator after '/'");
        Integer d(den);
        if (d == 0) fail("zero denominator");
        v = Rational(Integer(num)) / Rational(d);
      }
      Expr e;
      e.kind = Expr::Kind::number;
      e.value = v;
      e.weight = 0;
      ExprPtr node = make(std::move(e));
      // "1" may open a tensor monomial: 1⊗s[1] names a product-ring class
      if (v == 1) return maybe_tensor_chain(node, std::string("1"));
      return node;
    }

    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string word = read_word();

      if (word == "schur" && pos_ < text_.size() && text_[pos_] == '[') {
        std::vector<int> la = read_partition();
        std::string bundle = read_bundle_ref(nullptr);
        Expr e;
        e.kind = Expr::Kind::schur;
        e.partition = la;
        e.name = bundle;
        int w = 0;
        for (int p : la) w += p;
        e.weight = w;
        return make(std::move(e));
      }

      if (word == "s" && pos_ < text_.size() && text_[pos_] == '[') {
        std::vector<int> la = read_partition();
        std::string name = "s[";
        for (std::size_t i = 0; i < la.size(); ++i) {
          if (i) name += ",";
          name += std::to_string(la[i]);
        }
        name += "]";
        if (la.empty()) name = "1";
        return monomial_unit(name);
      }

      if (word.size() > 1 && (word[0] == 'c' || word[0] == 's')) {
        bool all_digits = true;
        for (std::size_t i = 1; i < word.size(); ++i)
          if (!std::isdigit(static_cast<unsigned char>(word[i]))) {
            all_digits = false;
            break;
          }
        if (all_digits) {
          skip_ws();
          if (pos_ < text_.size() && text_[pos_] == '(') {
            if (word.size() > 4) fail("absurdly large class index in " + word);
            int idx = std::stoi(word.substr(1));
            Expr e;
            if (word[0] == 'c') {
              e.kind = Expr::Kind::chern;
              e.name = read_bundle_ref(nullptr);
            } else {
              e.kind = Expr::Kind::segre;
              e.name = read_bundle_ref(&e.dual);
            }
            e.index = idx;
            e.weight = idx;
            return make(std::move(e));
          }
        }
      }

      if (word == "xi" || word == "f") return monomial_unit(word);

      fail("unknown token '" + word + "'");
    }

    fail("unexpected character '" + std::string(1, c) + "'");
  }

  ExprPtr monomial_unit(const std::string& name) {
    Expr e;
    e.kind = Expr::Kind::monomial;
    e.name = name;
    e.weight = Expr::unit_weight(name);
    return maybe_tensor_chain(make(std::move(e)), name);
  }

  // After a unit that has a monomial name, '⊗' extends it into a named
  // product-ring monomial: the names join, the weights add.
  ExprPtr maybe_tensor_chain(ExprPtr node, std::optional<std::string> name) {
    skip_ws();
    if (text_.substr(pos_, 3) != "\xE2\x8A\x97") return node;
    if (!name)
      fail("'⊗' joins basis monomial names, not general subexpressions");
    std::vector<std::string> parts{*name};
    while (eat_tensor()) {
      parts.push_back(tensor_unit_name());
    }
    Expr e;
    e.kind = Expr::Kind::monomial;
    e.name = join_product_name(parts);
    int w = 0;
    for (const auto& p : parts) w += Expr::unit_weight(p);
    e.weight = w;
    return make(std::move(e));
  }

  std::string tensor_unit_name() {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '1') {
      ++pos_;
      return "1";
    }
    std::string word = read_word();
    if (word == "s" && pos_ < text_.size() && text_[pos_] == '[') {
      std::vector<int> la = read_partition();
      if (la.empty()) return "1";
      std::string name = "s[";
      for (std::size_t i = 0; i < la.size(); ++i) {
        if (i) name += ",";
        name += std::to_string(la[i]);
      }
      return name + "]";
    }
    if (word == "xi" || word == "f") return word;
    fail("expected a basis monomial after '⊗', near '" + rest_snippet() + "'");
  }
};

}  // namespace detail

inline int Expr::unit_weight(const std::string& n) {
  if (n == "1") return 0;
  if (n == "xi" || n == "f") return 1;
  if (n.size() >= 3 && n[0] == 's' && n[1] == '[') {
    int w = 0, cur = 0;
    for (std::size_t i = 2; i < n.size(); ++i) {
      char c = n[i];
      if (std::isdigit(static_cast<unsigned char>(c)))
        cur = cur * 10 + (c - '0');
      else {
        w += cur;
        cur = 0;
      }
    }
    return w;
  }
  // joined product names: sum over the ⊗-separated pieces
  std::size_t at = n.find("\xE2\x8A\x97");
  if (at != std::string::npos) {
    return unit_weight(n.substr(0, at)) + unit_weight(n.substr(at + 3));
  }
  throw ParseError("expression: no such class unit '" + n + "'");
}

inline ExprPtr parse_expression(std::string_view text) {
  return detail::ExprParser(text).parse();
}

// Weight of a homogeneous expression; nullopt when a sum mixes weights.
inline std::optional<int> static_weight(const ExprPtr& e) { return e->weight; }

namespace detail {

inline MixedClass eval_node(const Expr& e, const RingPtr& ring,
                            const BundleEnv& env) {
  switch (e.kind) {
    case Expr::Kind::number:
      return MixedClass::from_class(RingClass::scalar(ring, e.value));
    case Expr::Kind::monomial: {
      if (e.name == "1") return MixedClass::one(ring);
      auto pos = ring->find_monomial(e.name);
      if (!pos)
        throw UnboundSymbol("no class named '" + e.name + "' on this model");
      return MixedClass::from_class(
          RingClass::monomial(ring, pos->first, pos->second));
    }
    case Expr::Kind::chern:
      return MixedClass::from_class(
          evaluate(FormalChernPoly::var(e.name, e.index, false), ring, env));
    case Expr::Kind::segre: {
      RingClass v =
          evaluate(FormalChernPoly::var(e.name, e.index, true), ring, env);
      if (e.dual && e.index % 2 == 1) v = -v;  // s_i(E^v) = (-1)^i s_i(E)
      return MixedClass::from_class(v);
    }
    case Expr::Kind::schur: {
      auto it = env.find(e.name);
      if (it == env.end())
        throw UnboundSymbol("unbound bundle symbol: " + e.name);
      return MixedClass::from_class(evaluate(
          jacobi_trudi(Partition(e.partition), it->second.rank, e.name), ring,
          env));
    }
    case Expr::Kind::neg:
      return Rational(-1) * eval_node(*e.lhs, ring, env);
    case Expr::Kind::add:
      return eval_node(*e.lhs, ring, env) + eval_node(*e.rhs, ring, env);
    case Expr::Kind::sub:
      return eval_node(*e.lhs, ring, env) - eval_node(*e.rhs, ring, env);
    case Expr::Kind::mul:
      return eval_node(*e.lhs, ring, env) * eval_node(*e.rhs, ring, env);
    case Expr::Kind::pow: {
      MixedClass base = eval_node(*e.lhs, ring, env);
      MixedClass acc = MixedClass::one(ring);
      for (int i = 0; i < e.index; ++i) acc = acc * base;
      return acc;
    }
  }
  throw ParseError("corrupt expression tree");
}

}  // namespace detail

inline MixedClass eval_expression(const ExprPtr& e, const RingPtr& ring,
                                  const BundleEnv& env) {
  if (!ring) throw RingMismatch("eval_expression: null ring");
  return detail::eval_node(*e, ring, env);
}

// Homogeneous evaluation: the expression must live in a single codimension
// (the zero class counts as any codimension and comes back as codim 0).
inline RingClass eval_homogeneous(const ExprPtr& e, const RingPtr& ring,
                                  const BundleEnv& env) {
  MixedClass m = eval_expression(e, ring, env);
  int found = -1;
  for (int k = 0; k <= m.dimension(); ++k) {
    if (m.component(k).is_zero()) continue;
    if (found >= 0)
      throw CodimMismatch("expression is not homogeneous: codim " +
                          std::to_string(found) + " and " + std::to_string(k) +
                          " parts are both present");
    found = k;
  }
  if (found < 0) {
    if (static_weight(e) && *static_weight(e) <= ring->dimension())
      return RingClass(ring, *static_weight(e));
    return RingClass(ring, 0);
  }
  return m.component(found);
}

}  // namespace poscones

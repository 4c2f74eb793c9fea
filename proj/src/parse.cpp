#include "qsym/parse.hpp"

#include <cctype>
#include <cstring>

namespace qsym {

namespace {

class Parser {
public:
  Parser(const std::string& text, ContextPtr ctx) : s_(text), ctx_(std::move(ctx)) {}

  Value run() {
    Value v = expr();
    skip_ws();
    if (pos_ != s_.size()) throw SyntaxError("unexpected trailing input", pos_);
    return v;
  }

private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) ++pos_;
  }
  bool peek_char(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool accept(char c) {
    if (!peek_char(c)) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) throw SyntaxError(std::string("expected '") + c + "'", pos_);
  }

  long integer() {
    skip_ws();
    size_t start = pos_;
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    if (pos_ >= s_.size() || !std::isdigit((unsigned char)s_[pos_]))
      throw SyntaxError("expected integer", start);
    long v = 0;
    while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_]))
      v = v * 10 + (s_[pos_++] - '0');
    return neg ? -v : v;
  }

  IntVector int_list() {
    expect('[');
    IntVector out;
    if (!peek_char(']')) {
      out.push_back(integer());
      while (accept(',')) out.push_back(integer());
    }
    expect(']');
    return out;
  }

  Perm perm_literal() {
    // accepts [2,1,3] or bare 2,1,3 inside an enclosing bracket
    IntVector ol = peek_char('[') ? int_list() : IntVector{};
    if (ol.empty()) {
      ol.push_back(integer());
      while (accept(',')) ol.push_back(integer());
    }
    std::vector<int> v(ol.begin(), ol.end());
    if ((int)v.size() != ctx_->n()) throw SyntaxError("permutation has wrong degree", pos_);
    try {
      return Perm::from_one_line(v);
    } catch (const std::invalid_argument& e) {
      throw SyntaxError(e.what(), pos_);
    }
  }

  bool word(const char* w) {
    skip_ws();
    size_t len = std::strlen(w);
    if (s_.compare(pos_, len, w) != 0) return false;
    pos_ += len;
    return true;
  }

  /// Postfix '*' counts as star only when glued to the atom (no whitespace).
  bool glued_star() {
    if (pos_ < s_.size() && s_[pos_] == '*') {
      ++pos_;
      return true;
    }
    return false;
  }

  Value atom() {
    skip_ws();
    size_t start = pos_;
    if (pos_ >= s_.size()) throw SyntaxError("unexpected end of input", pos_);

    if (accept('(')) {
      Value v = expr();
      expect(')');
      return v;
    }

    if (std::isdigit((unsigned char)s_[pos_])) {
      long num = integer();
      Rational q(num);
      if (accept('/')) q = Rational(Int(num), Int(integer()));
      return ctx_->scalar(q);
    }

    if (word("zeta")) {
      expect('(');
      long base = integer();
      expect(')');
      long k = 1;
      if (accept('^')) k = integer();
      long cond = ctx_->conductor();
      if (base <= 0 || cond % base != 0) throw ConductorMismatch();
      return Cyclo::zeta_pow(ctx_->field(), (cond / base) * k);
    }

    if (word("u[")) {
      long i = integer();
      expect(',');
      long k = integer();
      expect(']');
      if (i < 1 || i > ctx_->n() || k < 1 || k > ctx_->n())
        throw SyntaxError("generator index out of range", start);
      MultiElement e = MultiElement::u_gen(ctx_, (int)i, (int)k);
      return glued_star() ? e.star() : e;
    }

    if (word("p[")) {
      Perm p = perm_literal();
      expect(']');
      return MultiElement::p_sigma(ctx_, p);
    }

    if (word("m[")) {
      if (!word("sigma=")) throw SyntaxError("expected sigma=", pos_);
      Perm p = perm_literal();
      expect(',');
      if (!word("r=")) throw SyntaxError("expected r=", pos_);
      IntVector r = int_list();
      expect(']');
      if ((int)r.size() != ctx_->n()) throw SyntaxError("degree vector has wrong length", start);
      return MultiElement::monomial(ctx_, p, r);
    }

    if (s_[pos_] == 'x') {
      ++pos_;
      if (pos_ < s_.size() && s_[pos_] == '^') {
        ++pos_;
        IntVector r = int_list();
        if ((int)r.size() != ctx_->n())
          throw SyntaxError("degree vector has wrong length", start);
        return TorusElement::monomial(ctx_, r);
      }
      if (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) {
        long i = integer();
        if (i < 1 || i > ctx_->n()) throw SyntaxError("generator index out of range", start);
        TorusElement e = TorusElement::generator(ctx_, (int)i);
        return glued_star() ? e.star() : e;
      }
      throw SyntaxError("expected generator index or ^[", pos_);
    }

    throw SyntaxError("unrecognized token", pos_);
  }

  Value mul_values(const Value& a, const Value& b) {
    if (auto* ca = std::get_if<Cyclo>(&a)) {
      if (auto* cb = std::get_if<Cyclo>(&b)) return *ca * *cb;
      if (auto* tb = std::get_if<TorusElement>(&b)) return *tb * *ca;
      return std::get<MultiElement>(b) * *ca;
    }
    if (auto* ta = std::get_if<TorusElement>(&a)) {
      if (auto* cb = std::get_if<Cyclo>(&b)) return *ta * *cb;
      if (auto* tb = std::get_if<TorusElement>(&b)) return *ta * *tb;
      throw SyntaxError("cannot multiply torus and multitorus elements", pos_);
    }
    const auto& ma = std::get<MultiElement>(a);
    if (auto* cb = std::get_if<Cyclo>(&b)) return ma * *cb;
    if (auto* mb = std::get_if<MultiElement>(&b)) return ma * *mb;
    throw SyntaxError("cannot multiply multitorus and torus elements", pos_);
  }

  Value add_values(const Value& a, const Value& b, bool subtract) {
    Value bb = b;
    if (subtract) {
      if (auto* c = std::get_if<Cyclo>(&bb))
        bb = -*c;
      else if (auto* t = std::get_if<TorusElement>(&bb))
        bb = -*t;
      else
        bb = -std::get<MultiElement>(bb);
    }
    // promote scalars to multiples of the unit of the other side
    if (std::holds_alternative<Cyclo>(a) && !std::holds_alternative<Cyclo>(bb)) {
      if (auto* t = std::get_if<TorusElement>(&bb))
        return TorusElement::unit(ctx_) * std::get<Cyclo>(a) + *t;
      return MultiElement::unit(ctx_) * std::get<Cyclo>(a) + std::get<MultiElement>(bb);
    }
    if (!std::holds_alternative<Cyclo>(a) && std::holds_alternative<Cyclo>(bb)) {
      if (auto* t = std::get_if<TorusElement>(&a))
        return *t + TorusElement::unit(ctx_) * std::get<Cyclo>(bb);
      return std::get<MultiElement>(a) + MultiElement::unit(ctx_) * std::get<Cyclo>(bb);
    }
    if (auto* ca = std::get_if<Cyclo>(&a)) return *ca + std::get<Cyclo>(bb);
    if (auto* ta = std::get_if<TorusElement>(&a)) {
      if (!std::holds_alternative<TorusElement>(bb))
        throw SyntaxError("cannot add torus and multitorus elements", pos_);
      return *ta + std::get<TorusElement>(bb);
    }
    if (!std::holds_alternative<MultiElement>(bb))
      throw SyntaxError("cannot add multitorus and torus elements", pos_);
    return std::get<MultiElement>(a) + std::get<MultiElement>(bb);
  }

  Value term() {
    bool neg = false;
    while (true) {
      if (accept('-'))
        neg = !neg;
      else if (accept('+'))
        ;
      else
        break;
    }
    Value v = atom();
    while (true) {
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        v = mul_values(v, atom());
      } else {
        break;
      }
    }
    if (neg) v = mul_values(ctx_->scalar(Rational(-1)), v);
    return v;
  }

  Value expr() {
    Value v = term();
    while (true) {
      skip_ws();
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
        bool sub = s_[pos_] == '-';
        ++pos_;
        v = add_values(v, term(), sub);
      } else {
        break;
      }
    }
    return v;
  }

  const std::string& s_;
  ContextPtr ctx_;
  size_t pos_ = 0;
};

}  // namespace

Value parse_element(const std::string& text, ContextPtr ctx) {
  return Parser(text, std::move(ctx)).run();
}

std::string value_str(const Value& v) {
  if (auto* c = std::get_if<Cyclo>(&v)) return c->str();
  if (auto* t = std::get_if<TorusElement>(&v)) return t->str();
  return std::get<MultiElement>(v).str();
}

}  // namespace qsym

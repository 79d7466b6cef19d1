#include "gwa/parse.hpp"

#include <cctype>
#include <cstring>

namespace gwa {

namespace {

enum class Mode { ScalarOnly, ZOnly, A, B, Spin, Omega };

struct Token {
  enum Kind { Number, QSym, AGen, BGenTok, SpinMark, OmegaMark, Op, End } kind;
  size_t pos = 0;
  BigInt number;
  Gen agen = Gen::Xp;
  BGen bgen = BGen::X;
  bool spin_plus = false;
  OmegaIndex omega = OmegaIndex::Zero;
  char op = 0;
};

class Lexer {
public:
  Lexer(const std::string& text, Mode mode) : text_(text), mode_(mode) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

private:
  void advance() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
    tok_ = Token{};
    tok_.pos = i_;
    if (i_ >= text_.size()) {
      tok_.kind = Token::End;
      return;
    }
    char ch = text_[i_];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      size_t j = i_;
      while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
      tok_.kind = Token::Number;
      tok_.number = BigInt(text_.substr(i_, j - i_));
      i_ = j;
      return;
    }
    if (std::strchr("+-*/^()", ch)) {
      tok_.kind = Token::Op;
      tok_.op = ch;
      ++i_;
      return;
    }
    char sign = i_ + 1 < text_.size() ? text_[i_ + 1] : 0;
    switch (ch) {
      case 'q':
        tok_.kind = Token::QSym;
        ++i_;
        return;
      case 'x':
        if ((mode_ == Mode::A || mode_ == Mode::Spin || mode_ == Mode::Omega) &&
            (sign == '+' || sign == '-')) {
          tok_.kind = Token::AGen;
          tok_.agen = sign == '+' ? Gen::Xp : Gen::Xm;
          i_ += 2;
        } else {
          tok_.kind = Token::BGenTok;
          tok_.bgen = BGen::X;
          ++i_;
        }
        return;
      case 'y':
        tok_.kind = Token::BGenTok;
        tok_.bgen = BGen::Y;
        ++i_;
        return;
      case 'z':
        if ((mode_ == Mode::A || mode_ == Mode::Spin || mode_ == Mode::Omega) &&
            (sign == '+' || sign == '-')) {
          tok_.kind = Token::AGen;
          tok_.agen = sign == '+' ? Gen::Zp : Gen::Zm;
          i_ += 2;
        } else {
          tok_.kind = Token::BGenTok;
          tok_.bgen = BGen::Z;
          ++i_;
        }
        return;
      case 's':
        if (sign == '+' || sign == '-') {
          tok_.kind = Token::SpinMark;
          tok_.spin_plus = sign == '+';
          i_ += 2;
          return;
        }
        break;
      case 'w':
        if (sign == '+' || sign == '-' || sign == '0') {
          tok_.kind = Token::OmegaMark;
          tok_.omega = sign == '+' ? OmegaIndex::Plus
                       : sign == '-' ? OmegaIndex::Minus
                                     : OmegaIndex::Zero;
          i_ += 2;
          return;
        }
        break;
      default:
        break;
    }
    throw ParseError(std::string("unexpected character '") + ch + "'", i_);
  }

  const std::string& text_;
  Mode mode_;
  size_t i_ = 0;
  Token tok_;
};

// A partially evaluated expression: the plain part lives in whichever
// carrier the mode uses; marked parts carry spinor or one-form slots.
struct Value {
  Scalar s;
  ZPoly z;
  AlgElem a;
  BElem b;
  AlgElem sp, sm;  // spinor slots
  OmegaElem w;     // one-form slots
  bool marked = false;

  explicit Value(const CtxPtr& ctx)
      : a(AlgElem::zero(ctx)), b(BElem::zero(ctx)), sp(AlgElem::zero(ctx)),
        sm(AlgElem::zero(ctx)), w(OmegaElem(ctx)) {}
  Value() : w(OmegaElem(nullptr)) {}
};

class Parser {
public:
  Parser(const std::string& text, Mode mode, CtxPtr ctx)
      : lex_(text, mode), mode_(mode), ctx_(std::move(ctx)) {}

  Value parse() {
    Value v = expr();
    if (lex_.peek().kind != Token::End)
      throw ParseError("trailing input", lex_.peek().pos);
    return v;
  }

private:
  Value make() const {
    if (mode_ == Mode::ScalarOnly || mode_ == Mode::ZOnly) return Value();
    return Value(ctx_);
  }

  Value from_scalar(const Scalar& s) const {
    Value v = make();
    switch (mode_) {
      case Mode::ScalarOnly: v.s = s; break;
      case Mode::ZOnly: v.z = ZPoly(s); break;
      default: v.a = AlgElem::scalar(ctx_, s); break;
    }
    if (mode_ == Mode::B) v.b = BElem::scalar(ctx_, s);
    return v;
  }

  std::optional<Scalar> as_scalar(const Value& v) const {
    if (v.marked) return std::nullopt;
    switch (mode_) {
      case Mode::ScalarOnly: return v.s;
      case Mode::ZOnly:
        if (v.z.degree() > 0) return std::nullopt;
        return v.z.coeff(0);
      case Mode::B: {
        if (v.b.is_zero()) return Scalar();
        if (v.b.terms().size() == 1 && v.b.terms().begin()->first.is_unit())
          return v.b.terms().begin()->second;
        return std::nullopt;
      }
      default: {
        if (v.a.is_zero()) return Scalar();
        if (v.a.terms().size() == 1 && v.a.terms().begin()->first.is_unit())
          return v.a.terms().begin()->second;
        return std::nullopt;
      }
    }
  }

  Value add(Value lhs, const Value& rhs, bool subtract) const {
    auto comb = [&](auto& x, const auto& y) { subtract ? (x -= y) : (x += y); };
    switch (mode_) {
      case Mode::ScalarOnly: comb(lhs.s, rhs.s); break;
      case Mode::ZOnly: lhs.z = subtract ? lhs.z - rhs.z : lhs.z + rhs.z; break;
      case Mode::B: comb(lhs.b, rhs.b); break;
      case Mode::A: comb(lhs.a, rhs.a); break;
      case Mode::Spin:
        comb(lhs.a, rhs.a);
        comb(lhs.sp, rhs.sp);
        comb(lhs.sm, rhs.sm);
        lhs.marked = lhs.marked || rhs.marked;
        break;
      case Mode::Omega:
        comb(lhs.a, rhs.a);
        lhs.w = subtract ? lhs.w - rhs.w : lhs.w + rhs.w;
        lhs.marked = lhs.marked || rhs.marked;
        break;
    }
    return lhs;
  }

  Value negate(Value v) const { return add(from_scalar(Scalar()), v, true); }

  Value mul(const Value& lhs, const Value& rhs, size_t pos) const {
    Value r = make();
    switch (mode_) {
      case Mode::ScalarOnly: r.s = lhs.s * rhs.s; return r;
      case Mode::ZOnly: r.z = lhs.z * rhs.z; return r;
      case Mode::B: r.b = lhs.b * rhs.b; return r;
      case Mode::A: r.a = lhs.a * rhs.a; return r;
      case Mode::Spin:
        if (lhs.marked && rhs.marked)
          throw ParseError("spinor markers cannot be multiplied together", pos);
        if (!lhs.marked) {
          r.a = lhs.a * rhs.a;
          r.sp = lhs.a * rhs.sp;
          r.sm = lhs.a * rhs.sm;
          r.marked = rhs.marked;
        } else {
          // only scalar right factors act on a marked spinor expression
          auto sc = as_scalar(rhs);
          if (!sc) throw ParseError("spinor marker must stand rightmost in a product", pos);
          r.a = lhs.a * *sc;
          r.sp = lhs.sp * *sc;
          r.sm = lhs.sm * *sc;
          r.marked = true;
        }
        return r;
      case Mode::Omega:
        if (lhs.marked && rhs.marked)
          throw ParseError("one-form markers cannot be multiplied together", pos);
        if (!lhs.marked) {
          r.a = lhs.a * rhs.a;
          r.w = left_mul(lhs.a, rhs.w);
          r.marked = rhs.marked;
        } else {
          // twisted right action of the algebra on one-forms
          r.a = lhs.a * rhs.a;
          r.w = right_act(lhs.w, rhs.a);
          r.marked = true;
        }
        return r;
    }
    return r;
  }

  Value div(const Value& lhs, const Value& rhs, size_t pos) const {
    auto sc = as_scalar(rhs);
    if (!sc) throw ParseError("division requires a scalar divisor", pos);
    if (sc->is_zero()) throw ParseError("division by zero", pos);
    return mul(lhs, from_scalar(sc->inverse()), pos);
  }

  Value power(const Value& base, unsigned e, size_t pos) const {
    if (base.marked) throw ParseError("markers cannot be raised to a power", pos);
    Value r = make();
    switch (mode_) {
      case Mode::ScalarOnly: r.s = base.s.pow(e); return r;
      case Mode::ZOnly: r.z = base.z.pow(e); return r;
      case Mode::B: r.b = base.b.pow(e); return r;
      default: r.a = base.a.pow(e); return r;
    }
  }

  Value expr() {
    bool lead_minus = false;
    if (lex_.peek().kind == Token::Op &&
        (lex_.peek().op == '-' || lex_.peek().op == '+')) {
      lead_minus = lex_.take().op == '-';
    }
    Value v = term();
    if (lead_minus) v = negate(v);
    while (lex_.peek().kind == Token::Op &&
           (lex_.peek().op == '+' || lex_.peek().op == '-')) {
      bool sub = lex_.take().op == '-';
      v = add(std::move(v), term(), sub);
    }
    return v;
  }

  Value term() {
    Value v = factor();
    while (lex_.peek().kind == Token::Op &&
           (lex_.peek().op == '*' || lex_.peek().op == '/')) {
      Token t = lex_.take();
      Value rhs = factor();
      v = t.op == '*' ? mul(v, rhs, t.pos) : div(v, rhs, t.pos);
    }
    return v;
  }

  Value factor() {
    if (lex_.peek().kind == Token::Op && lex_.peek().op == '-') {
      Token t = lex_.take();
      (void)t;
      return negate(factor());
    }
    Value v = primary();
    if (lex_.peek().kind == Token::Op && lex_.peek().op == '^') {
      Token t = lex_.take();
      if (lex_.peek().kind != Token::Number)
        throw ParseError("exponent must be a natural number", lex_.peek().pos);
      BigInt e = lex_.take().number;
      if (e > 4096) throw ParseError("exponent too large", t.pos);
      v = power(v, static_cast<unsigned>(e), t.pos);
    }
    return v;
  }

  Value primary() {
    Token t = lex_.take();
    switch (t.kind) {
      case Token::Number: return from_scalar(Scalar(t.number));
      case Token::QSym: return from_scalar(Scalar::q());
      case Token::AGen: {
        if (mode_ != Mode::A && mode_ != Mode::Spin && mode_ != Mode::Omega)
          throw ParseError("generator not available in this algebra", t.pos);
        Value v = make();
        v.a = AlgElem::generator(ctx_, t.agen);
        return v;
      }
      case Token::BGenTok: {
        if (mode_ == Mode::ZOnly) {
          if (t.bgen != BGen::Z) throw ParseError("only z may appear here", t.pos);
          Value v = make();
          v.z = ZPoly::variable();
          return v;
        }
        if (mode_ != Mode::B)
          throw ParseError("generator not available in this algebra", t.pos);
        Value v = make();
        v.b = BElem::generator(ctx_, t.bgen);
        return v;
      }
      case Token::SpinMark: {
        if (mode_ != Mode::Spin) throw ParseError("spinor marker not allowed here", t.pos);
        Value v = make();
        (t.spin_plus ? v.sp : v.sm) = AlgElem::unit(ctx_);
        v.marked = true;
        return v;
      }
      case Token::OmegaMark: {
        if (mode_ != Mode::Omega) throw ParseError("one-form marker not allowed here", t.pos);
        Value v = make();
        v.w = OmegaElem::basis(ctx_, t.omega);
        v.marked = true;
        return v;
      }
      case Token::Op:
        if (t.op == '(') {
          Value v = expr();
          if (!(lex_.peek().kind == Token::Op && lex_.peek().op == ')'))
            throw ParseError("expected ')'", lex_.peek().pos);
          lex_.take();
          return v;
        }
        break;
      default:
        break;
    }
    throw ParseError("expected a value", t.pos);
  }

  Lexer lex_;
  Mode mode_;
  CtxPtr ctx_;
};

}  // namespace

Scalar parse_scalar(const std::string& text) {
  return Parser(text, Mode::ScalarOnly, nullptr).parse().s;
}

ZPoly parse_zpoly(const std::string& text) {
  return Parser(text, Mode::ZOnly, nullptr).parse().z;
}

AlgElem parse_a_expr(const std::string& text, const CtxPtr& ctx) {
  return Parser(text, Mode::A, ctx).parse().a;
}

BElem parse_b_expr(const std::string& text, const CtxPtr& ctx) {
  return Parser(text, Mode::B, ctx).parse().b;
}

Spinor parse_spinor(const std::string& text, const CtxPtr& ctx) {
  Value v = Parser(text, Mode::Spin, ctx).parse();
  if (!v.a.is_zero())
    throw ParseError("spinor expression has a term without an s+ or s- marker", 0);
  return Spinor(v.sp, v.sm);
}

OmegaElem parse_omega(const std::string& text, const CtxPtr& ctx) {
  Value v = Parser(text, Mode::Omega, ctx).parse();
  if (!v.a.is_zero())
    throw ParseError("one-form expression has a term without a w marker", 0);
  return v.w;
}

}  // namespace gwa

#include "milnor/expr.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace milnor {

namespace {

constexpr std::size_t kMaxNesting = 1000;

enum class Tok { Int, GenX, GenY, Tau, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text; // digits for Int / GenX / GenY
  std::size_t line;
  std::size_t column;
};

std::string describe(const Token& t) {
  switch (t.kind) {
  case Tok::Int:
    return "integer '" + t.text + "'";
  case Tok::GenX:
    return "generator 'x" + t.text + "'";
  case Tok::GenY:
    return "generator 'y" + t.text + "'";
  case Tok::Tau:
    return "'tau'";
  case Tok::Plus:
    return "'+'";
  case Tok::Minus:
    return "'-'";
  case Tok::Star:
    return "'*'";
  case Tok::Caret:
    return "'^'";
  case Tok::LParen:
    return "'('";
  case Tok::RParen:
    return "')'";
  case Tok::End:
    return "end of input";
  }
  return "token";
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

class Lexer {
public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      const auto line = line_;
      const auto col = col_;
      if (pos_ >= src_.size()) {
        out.push_back({Tok::End, "", line, col});
        return out;
      }
      const char c = src_[pos_];
      if (is_digit(c)) {
        out.push_back({Tok::Int, digits(), line, col});
        continue;
      }
      if (static_cast<unsigned char>(c) == 0xCF && pos_ + 1 < src_.size() &&
          static_cast<unsigned char>(src_[pos_ + 1]) == 0x84) {
        advance(2);
        out.push_back({Tok::Tau, "", line, col});
        continue;
      }
      if (is_alpha(c)) {
        std::string word;
        while (pos_ < src_.size() && is_alpha(src_[pos_])) {
          word += src_[pos_];
          advance(1);
        }
        if (word == "tau") {
          out.push_back({Tok::Tau, "", line, col});
        } else if (word == "x" || word == "y") {
          if (pos_ >= src_.size() || !is_digit(src_[pos_]))
            throw ParseError("expected an index after '" + word + "'", line_, col_);
          out.push_back({word == "x" ? Tok::GenX : Tok::GenY, digits(), line, col});
        } else {
          throw ParseError("unknown generator '" + word + "'", line, col);
        }
        continue;
      }
      Tok kind;
      switch (c) {
      case '+':
        kind = Tok::Plus;
        break;
      case '-':
        kind = Tok::Minus;
        break;
      case '*':
        kind = Tok::Star;
        break;
      case '^':
        kind = Tok::Caret;
        break;
      case '(':
        kind = Tok::LParen;
        break;
      case ')':
        kind = Tok::RParen;
        break;
      default: {
        const auto uc = static_cast<unsigned char>(c);
        std::string shown = std::isprint(uc) ? std::string(1, c) : "\\x" + hex(uc);
        throw ParseError("unexpected character '" + shown + "'", line, col);
      }
      }
      advance(1);
      out.push_back({kind, "", line, col});
    }
  }

private:
  static std::string hex(unsigned char c) {
    const char* d = "0123456789abcdef";
    return {d[c >> 4], d[c & 15]};
  }

  void advance(std::size_t k) {
    for (std::size_t i = 0; i < k && pos_ < src_.size(); ++i) {
      if (src_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
  }

  void skip_space() {
    while (pos_ < src_.size() &&
           (src_[pos_] == ' ' || src_[pos_] == '\t' || src_[pos_] == '\n' || src_[pos_] == '\r'))
      advance(1);
  }

  std::string digits() {
    std::string d;
    while (pos_ < src_.size() && is_digit(src_[pos_])) {
      d += src_[pos_];
      advance(1);
    }
    return d;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

// Saturating decimal conversion.
std::uint64_t to_u64(const std::string& digits) {
  std::uint64_t v = 0;
  for (char c : digits) {
    const std::uint64_t d = static_cast<std::uint64_t>(c - '0');
    if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10)
      return std::numeric_limits<std::uint64_t>::max();
    v = v * 10 + d;
  }
  return v;
}

class Parser {
public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  ExprPtr parse() {
    auto e = expr();
    if (peek().kind != Tok::End)
      fail("expected an operator or end of input, found " + describe(peek()));
    return e;
  }

private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, peek().line, peek().column);
  }

  struct DepthGuard {
    explicit DepthGuard(Parser& p) : p(p) {
      if (++p.depth_ > kMaxNesting)
        p.fail("expression nested too deeply");
    }
    ~DepthGuard() { --p.depth_; }
    Parser& p;
  };

  static ExprPtr node(const Token& at, auto&& value) {
    auto n = std::make_unique<ExprNode>();
    n->node = std::forward<decltype(value)>(value);
    n->line = at.line;
    n->column = at.column;
    return n;
  }

  ExprPtr expr() {
    const Token start = peek();
    auto first = term();
    if (peek().kind != Tok::Plus && peek().kind != Tok::Minus)
      return first;
    ast::Sum sum;
    sum.operands.emplace_back(false, std::move(first));
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const bool neg = next().kind == Tok::Minus;
      sum.operands.emplace_back(neg, term());
    }
    return node(start, std::move(sum));
  }

  ExprPtr term() {
    const Token start = peek();
    auto first = factor();
    if (peek().kind != Tok::Star)
      return first;
    ast::Product prod;
    prod.factors.push_back(std::move(first));
    while (peek().kind == Tok::Star) {
      next();
      prod.factors.push_back(factor());
    }
    return node(start, std::move(prod));
  }

  ExprPtr factor() {
    DepthGuard guard(*this);
    const Token& t = peek();
    switch (t.kind) {
    case Tok::Int: {
      const Token tok = next();
      return node(tok, ast::Integer{tok.text});
    }
    case Tok::GenX:
    case Tok::GenY:
    case Tok::Tau: {
      const Token tok = next();
      ast::Generator g;
      g.kind = tok.kind == Tok::GenX ? GeneratorKind::X : tok.kind == Tok::GenY ? GeneratorKind::Y
                                                                                 : GeneratorKind::Tau;
      if (tok.kind != Tok::Tau)
        g.index = to_u64(tok.text);
      if (peek().kind == Tok::Caret) {
        next();
        if (peek().kind != Tok::Int)
          fail("expected a nonnegative integer exponent after '^', found " + describe(peek()));
        g.exponent = to_u64(next().text);
      }
      return node(tok, g);
    }
    case Tok::LParen: {
      next();
      auto inner = expr();
      if (peek().kind != Tok::RParen)
        fail("expected ')', found " + describe(peek()));
      next();
      return inner;
    }
    case Tok::Minus: {
      const Token tok = next();
      return node(tok, ast::Negate{factor()});
    }
    default:
      fail("expected a number, generator or '(', found " + describe(t));
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t depth_ = 0;
};

std::string where(const ExprNode& n) {
  return std::to_string(n.line) + ":" + std::to_string(n.column) + ": ";
}

} // namespace

ExprPtr parse_expr(std::string_view src) {
  return Parser(Lexer(src).run()).parse();
}

Element elaborate(const ExprNode& expr, const RingContext& ctx) {
  struct Visitor {
    const RingContext& ctx;
    const ExprNode& at;

    Element operator()(const ast::Integer& v) const {
      std::uint64_t r = 0;
      for (char c : v.digits)
        r = (r * 10 + static_cast<std::uint64_t>(c - '0')) % ctx.prime();
      return scalar_mul(static_cast<std::int64_t>(r), one(ctx));
    }

    Element operator()(const ast::Generator& g) const {
      Monomial mono(ctx.rank());
      if (g.exponent > kMaxExponent)
        throw ElaborationError(where(at) + "exponent " + std::to_string(g.exponent) + " too large");
      const auto e = static_cast<Exponent>(g.exponent);
      if (g.kind == GeneratorKind::Tau)
        return Element(ctx, mono.set_tau(e));
      const char* name = g.kind == GeneratorKind::X ? "x" : "y";
      if (g.index < 1 || g.index > ctx.rank())
        throw ElaborationError(where(at) + "generator index " + std::string(name) +
                               std::to_string(g.index) + " out of range 1.." + std::to_string(ctx.rank()));
      const auto i = static_cast<std::uint32_t>(g.index - 1);
      if (g.kind == GeneratorKind::Y)
        return Element(ctx, mono.set_y(i, e));
      if (e >= 2)
        throw ElaborationError(where(at) + "exterior generator x" + std::to_string(g.index) +
                               " raised to power " + std::to_string(e) + "; only 0 and 1 are allowed");
      if (e == 1)
        mono.set_ext(std::uint64_t{1} << i);
      return Element(ctx, mono);
    }

    Element operator()(const ast::Sum& s) const {
      Element out(ctx);
      for (const auto& [neg, operand] : s.operands) {
        if (neg)
          out -= elaborate(*operand, ctx);
        else
          out += elaborate(*operand, ctx);
      }
      return out;
    }

    Element operator()(const ast::Product& p) const {
      Element out = one(ctx);
      for (const auto& f : p.factors) {
        out = out * elaborate(*f, ctx);
        if (out.is_zero())
          break;
      }
      return out;
    }

    Element operator()(const ast::Negate& n) const { return -elaborate(*n.operand, ctx); }
  };
  return std::visit(Visitor{ctx, expr}, expr.node);
}

Element parse_element(std::string_view src, const RingContext& ctx) {
  return elaborate(*parse_expr(src), ctx);
}

std::string print_monomial(const Monomial& mono) {
  std::string out;
  auto push = [&](const std::string& s) {
    if (!out.empty())
      out += '*';
    out += s;
  };
  if (mono.tau() == 1)
    push("tau");
  else if (mono.tau() > 1)
    push("tau^" + std::to_string(mono.tau()));
  for (std::uint32_t i = 0; i < mono.rank(); ++i) {
    const auto d = mono.y(i);
    if (d == 1)
      push("y" + std::to_string(i + 1));
    else if (d > 1)
      push("y" + std::to_string(i + 1) + "^" + std::to_string(d));
  }
  for (auto i : mono.ext_indices())
    push("x" + std::to_string(i + 1));
  return out.empty() ? "1" : out;
}

std::string print_element(const Element& a) {
  if (a.is_zero())
    return "0";
  std::string out;
  for (const auto& [mono, c] : a.terms()) {
    if (!out.empty())
      out += " + ";
    if (c == 1)
      out += print_monomial(mono);
    else if (mono.is_one())
      out += std::to_string(c);
    else
      out += std::to_string(c) + "*" + print_monomial(mono);
  }
  return out;
}

OperationWord parse_word(std::string_view src) {
  std::vector<PrimitiveOp> ops;
  std::size_t start = 0;
  for (;;) {
    const auto comma = src.find(',', start);
    const auto end = comma == std::string_view::npos ? src.size() : comma;
    auto b = start;
    auto e = end;
    while (b < e && std::isspace(static_cast<unsigned char>(src[b])))
      ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(src[e - 1])))
      --e;
    const auto tok = src.substr(b, e - b);
    const auto column = b + 1;
    if (tok.empty())
      throw ParseError("empty operation token", 1, column);
    if (tok == "beta") {
      ops.push_back(PrimitiveOp::bockstein());
    } else if (tok[0] == 'Q' || tok[0] == 'P') {
      const auto digits = tok.substr(1);
      if (digits.empty() || !std::all_of(digits.begin(), digits.end(), is_digit))
        throw ParseError("invalid index in operation '" + std::string(tok) +
                             "'; expected a nonnegative integer",
                         1, column);
      const auto v = to_u64(std::string(digits));
      if (v > std::numeric_limits<std::uint32_t>::max())
        throw ParseError("operation index too large in '" + std::string(tok) + "'", 1, column);
      const auto idx = static_cast<std::uint32_t>(v);
      ops.push_back(tok[0] == 'Q' ? PrimitiveOp::milnor(idx) : PrimitiveOp::power(idx));
    } else {
      throw ParseError("unknown operation '" + std::string(tok) + "'; expected Q<i>, P<i> or beta", 1,
                       column);
    }
    if (comma == std::string_view::npos)
      break;
    start = comma + 1;
  }
  return OperationWord(std::move(ops));
}

std::string print_word(const OperationWord& word) {
  std::string out;
  for (const auto& op : word.ops()) {
    if (!out.empty())
      out += ',';
    switch (op.kind()) {
    case OpKind::Bockstein:
      out += "Q0";
      break;
    case OpKind::Milnor:
      out += "Q" + std::to_string(op.index());
      break;
    case OpKind::Power:
      out += "P" + std::to_string(op.index());
      break;
    }
  }
  return out;
}

} // namespace milnor

#include "acg/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <map>
#include <sstream>

namespace acg {
namespace {

struct Parser {
  const std::string& s;
  const std::vector<std::string>& vars;
  size_t pos = 0;
  bool has_div = false;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) { ++pos; return true; }
    return false;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

  ExprPtr make(ExprOp op, ExprPtr a = nullptr, ExprPtr b = nullptr) {
    auto n = std::make_shared<ExprNode>();
    n->op = op;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
  }

  ExprPtr number() {
    size_t start = pos;
    char* end = nullptr;
    double v = std::strtod(s.c_str() + start, &end);
    if (end == s.c_str() + start) fail("expected number");
    pos = end - s.c_str();
    auto n = std::make_shared<ExprNode>();
    n->op = ExprOp::kConst;
    n->value = v;
    return n;
  }

  ExprPtr identifier() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
    std::string name = s.substr(start, pos - start);

    static const std::map<std::string, ExprOp> kFns = {
        {"sin", ExprOp::kSin}, {"cos", ExprOp::kCos}, {"exp", ExprOp::kExp},
        {"ln", ExprOp::kLn},   {"abs", ExprOp::kAbs}, {"re", ExprOp::kRe},
        {"im", ExprOp::kIm}};
    auto fn = kFns.find(name);
    if (fn != kFns.end()) {
      if (!eat('(')) fail("expected '(' after function " + name);
      ExprPtr a = expr();
      ExprPtr b;
      bool binary = fn->second == ExprOp::kRe || fn->second == ExprOp::kIm;
      if (binary) {
        if (!eat(',')) fail(name + " takes two arguments (re part, im part)");
        b = expr();
      }
      if (!eat(')')) fail("expected ')'");
      return make(fn->second, std::move(a), std::move(b));
    }
    if (name == "pi") {
      auto n = std::make_shared<ExprNode>();
      n->op = ExprOp::kConst;
      n->value = M_PI;
      return n;
    }
    for (size_t i = 0; i < vars.size(); ++i) {
      if (vars[i] == name) {
        auto n = std::make_shared<ExprNode>();
        n->op = ExprOp::kVar;
        n->var = static_cast<int>(i);
        n->var_name = name;
        return n;
      }
    }
    pos = start;
    fail("unknown identifier '" + name + "'");
  }

  ExprPtr atom() {
    skip_ws();
    if (pos >= s.size()) fail("unexpected end of input");
    char c = s[pos];
    if (c == '(') {
      ++pos;
      ExprPtr e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    fail("unexpected character");
  }

  ExprPtr power() {
    ExprPtr base = atom();
    if (eat('^')) return make(ExprOp::kPow, std::move(base), factor());
    return base;
  }

  ExprPtr factor() {
    if (eat('-')) return make(ExprOp::kNeg, factor());
    return power();
  }

  ExprPtr term() {
    ExprPtr lhs = factor();
    for (;;) {
      if (eat('*')) {
        lhs = make(ExprOp::kMul, std::move(lhs), factor());
      } else if (eat('/')) {
        has_div = true;
        lhs = make(ExprOp::kDiv, std::move(lhs), factor());
      } else {
        return lhs;
      }
    }
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    for (;;) {
      if (eat('+')) {
        lhs = make(ExprOp::kAdd, std::move(lhs), term());
      } else if (eat('-')) {
        lhs = make(ExprOp::kSub, std::move(lhs), term());
      } else {
        return lhs;
      }
    }
  }
};

int precedence(ExprOp op) {
  switch (op) {
    case ExprOp::kAdd: case ExprOp::kSub: return 1;
    case ExprOp::kMul: case ExprOp::kDiv: return 2;
    case ExprOp::kNeg: return 3;
    case ExprOp::kPow: return 4;
    default: return 5;
  }
}

void print_node(const ExprNode* n, std::ostream& os, int parent_prec) {
  int prec = precedence(n->op);
  bool parens = prec < parent_prec;
  if (parens) os << '(';
  switch (n->op) {
    case ExprOp::kConst: {
      std::ostringstream tmp;
      tmp.precision(17);
      tmp << n->value;
      os << tmp.str();
      break;
    }
    case ExprOp::kVar: os << n->var_name; break;
    case ExprOp::kAdd: print_node(n->a.get(), os, prec); os << " + "; print_node(n->b.get(), os, prec + 1); break;
    case ExprOp::kSub: print_node(n->a.get(), os, prec); os << " - "; print_node(n->b.get(), os, prec + 1); break;
    case ExprOp::kMul: print_node(n->a.get(), os, prec); os << "*"; print_node(n->b.get(), os, prec + 1); break;
    case ExprOp::kDiv: print_node(n->a.get(), os, prec); os << "/"; print_node(n->b.get(), os, prec + 1); break;
    case ExprOp::kNeg: os << "-"; print_node(n->a.get(), os, prec); break;
    case ExprOp::kPow: print_node(n->a.get(), os, prec + 1); os << "^"; print_node(n->b.get(), os, prec); break;
    case ExprOp::kSin: os << "sin("; print_node(n->a.get(), os, 0); os << ")"; break;
    case ExprOp::kCos: os << "cos("; print_node(n->a.get(), os, 0); os << ")"; break;
    case ExprOp::kExp: os << "exp("; print_node(n->a.get(), os, 0); os << ")"; break;
    case ExprOp::kLn: os << "ln("; print_node(n->a.get(), os, 0); os << ")"; break;
    case ExprOp::kAbs: os << "abs("; print_node(n->a.get(), os, 0); os << ")"; break;
    case ExprOp::kRe:
      os << "re("; print_node(n->a.get(), os, 0); os << ", "; print_node(n->b.get(), os, 0); os << ")";
      break;
    case ExprOp::kIm:
      os << "im("; print_node(n->a.get(), os, 0); os << ", "; print_node(n->b.get(), os, 0); os << ")";
      break;
  }
  if (parens) os << ')';
}

bool same_node(const ExprNode* a, const ExprNode* b) {
  if (a == b) return true;
  if (!a || !b || a->op != b->op) return false;
  if (a->op == ExprOp::kConst) return a->value == b->value;
  if (a->op == ExprOp::kVar) return a->var == b->var;
  return same_node(a->a.get(), b->a.get()) && same_node(a->b.get(), b->b.get());
}

}  // namespace

ExprAST parse(const std::string& text, const std::vector<std::string>& variables) {
  Parser p{text, variables};
  ExprPtr root = p.expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return ExprAST(std::move(root), variables, p.has_div);
}

std::string ExprAST::print() const {
  std::ostringstream os;
  print_node(root_.get(), os, 0);
  return os.str();
}

bool ExprAST::same_tree(const ExprAST& o) const { return same_node(root_.get(), o.root_.get()); }

}  // namespace acg

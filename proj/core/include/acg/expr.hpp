#pragma once

// A small expression language for component functions in config files.
// Grammar (whitespace-insensitive, no implicit multiplication):
//
//   expr   := term  (('+'|'-') term)*          left associative
//   term   := factor (('*'|'/') factor)*       left associative
//   factor := '-' factor | power
//   power  := atom ('^' factor)?               right associative, binds
//                                              tighter than unary minus
//   atom   := number | name | name '(' expr (',' expr)* ')' | '(' expr ')'
//
// Functions: sin, cos, exp, ln, abs and the pair selectors re(a,b) = a,
// im(a,b) = b used when a complex quantity is written as two real parts.
// Builtin constant: pi. Evaluation is generic over the dual tower, so
// derivatives of expression-backed fields are exact.

#include <memory>
#include <string>
#include <vector>

#include "acg/dual.hpp"
#include "acg/errors.hpp"

namespace acg {

enum class ExprOp {
  kConst, kVar, kAdd, kSub, kMul, kDiv, kNeg, kPow,
  kSin, kCos, kExp, kLn, kAbs, kRe, kIm,
};

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
  ExprOp op;
  double value = 0;        // kConst
  int var = -1;            // kVar: index into the variable list
  std::string var_name;    // kVar: for printing
  ExprPtr a, b;            // operands
};

class ExprAST {
 public:
  ExprAST() = default;
  ExprAST(ExprPtr root, std::vector<std::string> vars, bool has_division)
      : root_(std::move(root)), vars_(std::move(vars)), has_division_(has_division) {}

  const std::vector<std::string>& vars() const { return vars_; }
  const ExprPtr& root() const { return root_; }

  // Division nodes are the recorded singularity guard: samplers keep a
  // margin away from chart boundaries when this is set.
  bool has_division() const { return has_division_; }

  std::string print() const;
  bool same_tree(const ExprAST& o) const;

  template <class T> T eval(const std::vector<T>& point) const { return eval_node(root_.get(), point); }

 private:
  template <class T> static T eval_node(const ExprNode* n, const std::vector<T>& p);

  ExprPtr root_;
  std::vector<std::string> vars_;
  bool has_division_ = false;
};

// Parse against a declared variable list. Throws ParseError with the byte
// offset on syntax errors and names the offender on unknown identifiers.
ExprAST parse(const std::string& text, const std::vector<std::string>& variables);

template <class T>
T ExprAST::eval_node(const ExprNode* n, const std::vector<T>& p) {
  switch (n->op) {
    case ExprOp::kConst: return T(n->value);
    case ExprOp::kVar: return p[n->var];
    case ExprOp::kAdd: return eval_node(n->a.get(), p) + eval_node(n->b.get(), p);
    case ExprOp::kSub: return eval_node(n->a.get(), p) - eval_node(n->b.get(), p);
    case ExprOp::kMul: return eval_node(n->a.get(), p) * eval_node(n->b.get(), p);
    case ExprOp::kDiv: return eval_node(n->a.get(), p) / eval_node(n->b.get(), p);
    case ExprOp::kNeg: return -eval_node(n->a.get(), p);
    case ExprOp::kPow: {
      T base = eval_node(n->a.get(), p);
      if (n->b->op == ExprOp::kConst) {
        double e = n->b->value;
        long ie = static_cast<long>(e);
        if (static_cast<double>(ie) == e) return ipow(base, ie);
        return pow(base, e);
      }
      return pow(base, eval_node(n->b.get(), p));
    }
    case ExprOp::kSin: return sin(eval_node(n->a.get(), p));
    case ExprOp::kCos: return cos(eval_node(n->a.get(), p));
    case ExprOp::kExp: return exp(eval_node(n->a.get(), p));
    case ExprOp::kLn: return log(eval_node(n->a.get(), p));
    case ExprOp::kAbs: return abs(eval_node(n->a.get(), p));
    case ExprOp::kRe: return eval_node(n->a.get(), p);
    case ExprOp::kIm: return eval_node(n->b.get(), p);
  }
  throw Error("corrupt expression node");
}

}  // namespace acg

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace grpverify {

enum class ExprKind {
  Cyclic,       // C(n)
  Dihedral,     // D(n), order 2n
  Symmetric,    // S(n)
  Alternating,  // A(n)
  ElemAbelian,  // EA(p,m)
  Heisenberg,   // H3
  Hessian,      // HESS
  HeisenbergSL, // HSL23
  GL2,          // GL(2,q)
  SL2,          // SL(2,q)
  PGL2,         // PGL(2,q)
  PSL2,         // PSL(2,q)
  PSL32,        // PSL(3,2)
  WeylD,        // WD(n)
  Product,      // prod(a,b)
  SwapSquare,   // swapsq(a)
  Semidirect,   // semi(n,h,action)
  PermGroup,    // pgroup(n,"cycles",...)
};

enum class ActionKind { Swap, NatPerm, EvenPerm, QuotPerm, SumZero, Linear, Inv, Explicit };

struct Action {
  ActionKind kind = ActionKind::Swap;
  // Explicit: one integer list per generator of H. Cyclic N: a multiplier;
  // EA(p,m): an m×m matrix, row-major.
  std::vector<std::vector<long long>> images;

  friend bool operator==(const Action&, const Action&) = default;
};

struct GroupExpr {
  ExprKind kind = ExprKind::Cyclic;
  std::vector<long long> params;
  std::vector<GroupExpr> children;
  Action action;
  std::vector<std::string> cycles;

  friend bool operator==(const GroupExpr&, const GroupExpr&) = default;
};

// Throws ParseError carrying the byte offset of the problem.
GroupExpr parse_expr(std::string_view src);

// Canonical text; parse_expr(to_string(e)) == e.
std::string to_string(const GroupExpr& e);
std::string to_string(const Action& a);

}  // namespace grpverify

#include "grpverify/expr.hpp"

#include <cctype>
#include <string>

#include "grpverify/error.hpp"
#include "grpverify/numeric.hpp"
#include "grpverify/perm.hpp"

namespace grpverify {

namespace {

constexpr long long kMaxCyclic = 50000;
constexpr long long kMaxDegree = 64;

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  GroupExpr parse_all() {
    GroupExpr e = expr();
    ws();
    if (pos_ != s_.size()) throw ParseError("unexpected trailing input", pos_);
    return e;
  }

 private:
  void ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  void expect(char c) {
    ws();
    if (pos_ >= s_.size() || s_[pos_] != c) {
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }

  std::string ident() {
    ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected identifier", pos_);
    return std::string(s_.substr(start, pos_ - start));
  }

  long long integer() {
    ws();
    const std::size_t start = pos_;
    bool neg = false;
    if (pos_ < s_.size() && s_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      throw ParseError("expected integer", start);
    }
    long long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 1'000'000'000) throw ParseError("integer too large", start);
      ++pos_;
    }
    return neg ? -v : v;
  }

  // Reads an integer argument and checks lo <= v <= hi.
  long long bounded(long long lo, long long hi, const char* what) {
    ws();
    const std::size_t at = pos_;
    const long long v = integer();
    if (v < lo || v > hi) {
      throw ParseError(std::string(what) + " " + std::to_string(v) + " out of range [" +
                           std::to_string(lo) + "," + std::to_string(hi) + "]",
                       at);
    }
    return v;
  }

  long long prime_power_arg() {
    ws();
    const std::size_t at = pos_;
    const long long q = integer();
    std::uint64_t p = 0;
    unsigned k = 0;
    if (q < 2 || !prime_power(static_cast<std::uint64_t>(q), p, k)) {
      throw ParseError(std::to_string(q) + " is not a prime power", at);
    }
    if (q > 256) throw ParseError("field size " + std::to_string(q) + " exceeds 256", at);
    return q;
  }

  long long prime_arg() {
    ws();
    const std::size_t at = pos_;
    const long long p = integer();
    if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) {
      throw ParseError(std::to_string(p) + " is not prime", at);
    }
    return p;
  }

  std::string quoted() {
    ws();
    if (pos_ >= s_.size() || s_[pos_] != '"') throw ParseError("expected quoted cycle string", pos_);
    const std::size_t start = ++pos_;
    while (pos_ < s_.size() && s_[pos_] != '"') ++pos_;
    if (pos_ >= s_.size()) throw ParseError("unterminated string", start - 1);
    std::string out(s_.substr(start, pos_ - start));
    ++pos_;
    return out;
  }

  Action action() {
    ws();
    const std::size_t at = pos_;
    const std::string name = ident();
    Action a;
    if (name == "swap") a.kind = ActionKind::Swap;
    else if (name == "natperm") a.kind = ActionKind::NatPerm;
    else if (name == "evenperm") a.kind = ActionKind::EvenPerm;
    else if (name == "quotperm") a.kind = ActionKind::QuotPerm;
    else if (name == "sumzero") a.kind = ActionKind::SumZero;
    else if (name == "linear") a.kind = ActionKind::Linear;
    else if (name == "inv") a.kind = ActionKind::Inv;
    else if (name == "explicit") {
      a.kind = ActionKind::Explicit;
      expect('[');
      a.images.emplace_back();
      for (;;) {
        ws();
        if (peek(']')) {
          ++pos_;
          break;
        }
        if (peek(';')) {
          ++pos_;
          a.images.emplace_back();
          continue;
        }
        if (peek(',')) {
          ++pos_;
          continue;
        }
        a.images.back().push_back(integer());
      }
      for (const auto& g : a.images)
        if (g.empty()) throw ParseError("empty explicit image list", at);
    } else {
      throw ParseError("unknown action '" + name + "'", at);
    }
    return a;
  }

  GroupExpr expr() {
    ws();
    const std::size_t at = pos_;
    const std::string name = ident();
    GroupExpr e;
    if (name == "H3" || name == "HESS" || name == "HSL23") {
      e.kind = name == "H3" ? ExprKind::Heisenberg
                            : (name == "HESS" ? ExprKind::Hessian : ExprKind::HeisenbergSL);
      return e;
    }
    if (!peek('(')) throw ParseError("unknown atom '" + name + "'", at);
    expect('(');
    if (name == "C") {
      e.kind = ExprKind::Cyclic;
      e.params = {bounded(1, kMaxCyclic, "cyclic order")};
    } else if (name == "D") {
      e.kind = ExprKind::Dihedral;
      e.params = {bounded(2, kMaxCyclic / 2, "dihedral parameter")};
    } else if (name == "S" || name == "A") {
      e.kind = name == "S" ? ExprKind::Symmetric : ExprKind::Alternating;
      e.params = {bounded(1, kMaxDegree, "degree")};
    } else if (name == "EA") {
      e.kind = ExprKind::ElemAbelian;
      const long long p = prime_arg();
      expect(',');
      e.params = {p, bounded(1, 64, "rank")};
    } else if (name == "GL" || name == "SL" || name == "PGL" || name == "PSL") {
      ws();
      const std::size_t dim_at = pos_;
      const long long n = integer();
      if (name == "PSL" && n == 3) {
        expect(',');
        ws();
        const std::size_t q_at = pos_;
        if (integer() != 2) throw ParseError("only PSL(3,2) is supported", q_at);
        e.kind = ExprKind::PSL32;
      } else {
        if (n != 2) throw ParseError("only dimension 2 is supported", dim_at);
        expect(',');
        e.kind = name == "GL" ? ExprKind::GL2
                 : name == "SL" ? ExprKind::SL2
                 : name == "PGL" ? ExprKind::PGL2
                                 : ExprKind::PSL2;
        e.params = {prime_power_arg()};
      }
    } else if (name == "WD") {
      e.kind = ExprKind::WeylD;
      e.params = {bounded(2, 32, "rank")};
    } else if (name == "prod") {
      e.kind = ExprKind::Product;
      e.children.push_back(expr());
      expect(',');
      e.children.push_back(expr());
    } else if (name == "swapsq") {
      e.kind = ExprKind::SwapSquare;
      e.children.push_back(expr());
    } else if (name == "semi") {
      e.kind = ExprKind::Semidirect;
      e.children.push_back(expr());
      expect(',');
      e.children.push_back(expr());
      expect(',');
      e.action = action();
    } else if (name == "pgroup") {
      e.kind = ExprKind::PermGroup;
      const long long n = bounded(1, 65535, "degree");
      e.params = {n};
      while (peek(',')) {
        ++pos_;
        ws();
        const std::size_t cyc_at = pos_;
        std::string c = quoted();
        try {
          (void)Permutation::from_cycles(c, static_cast<std::size_t>(n));
        } catch (const ParseError& err) {
          throw ParseError(std::string("bad cycle string: ") + err.what(), cyc_at);
        }
        e.cycles.push_back(std::move(c));
      }
    } else {
      throw ParseError("unknown constructor '" + name + "'", at);
    }
    if (!peek(')')) {
      ws();
      throw ParseError("arity mismatch for '" + name + "'", pos_);
    }
    expect(')');
    return e;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupExpr parse_expr(std::string_view src) { return Parser(src).parse_all(); }

std::string to_string(const Action& a) {
  switch (a.kind) {
    case ActionKind::Swap: return "swap";
    case ActionKind::NatPerm: return "natperm";
    case ActionKind::EvenPerm: return "evenperm";
    case ActionKind::QuotPerm: return "quotperm";
    case ActionKind::SumZero: return "sumzero";
    case ActionKind::Linear: return "linear";
    case ActionKind::Inv: return "inv";
    case ActionKind::Explicit: break;
  }
  std::string out = "explicit[";
  for (std::size_t i = 0; i < a.images.size(); ++i) {
    if (i > 0) out += ';';
    for (std::size_t j = 0; j < a.images[i].size(); ++j) {
      if (j > 0) out += ' ';
      out += std::to_string(a.images[i][j]);
    }
  }
  return out + "]";
}

std::string to_string(const GroupExpr& e) {
  auto p = [&](std::size_t i) { return std::to_string(e.params.at(i)); };
  switch (e.kind) {
    case ExprKind::Cyclic: return "C(" + p(0) + ")";
    case ExprKind::Dihedral: return "D(" + p(0) + ")";
    case ExprKind::Symmetric: return "S(" + p(0) + ")";
    case ExprKind::Alternating: return "A(" + p(0) + ")";
    case ExprKind::ElemAbelian: return "EA(" + p(0) + "," + p(1) + ")";
    case ExprKind::Heisenberg: return "H3";
    case ExprKind::Hessian: return "HESS";
    case ExprKind::HeisenbergSL: return "HSL23";
    case ExprKind::GL2: return "GL(2," + p(0) + ")";
    case ExprKind::SL2: return "SL(2," + p(0) + ")";
    case ExprKind::PGL2: return "PGL(2," + p(0) + ")";
    case ExprKind::PSL2: return "PSL(2," + p(0) + ")";
    case ExprKind::PSL32: return "PSL(3,2)";
    case ExprKind::WeylD: return "WD(" + p(0) + ")";
    case ExprKind::Product:
      return "prod(" + to_string(e.children[0]) + "," + to_string(e.children[1]) + ")";
    case ExprKind::SwapSquare: return "swapsq(" + to_string(e.children[0]) + ")";
    case ExprKind::Semidirect:
      return "semi(" + to_string(e.children[0]) + "," + to_string(e.children[1]) + "," +
             to_string(e.action) + ")";
    case ExprKind::PermGroup: {
      std::string out = "pgroup(" + p(0);
      for (const std::string& c : e.cycles) out += ",\"" + c + "\"";
      return out + ")";
    }
  }
  return {};
}

}  // namespace grpverify

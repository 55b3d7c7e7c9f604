#include "cohom/dsl.hpp"

#include <cctype>
#include <optional>

namespace cohom {

namespace {

using K = RepExpr::Kind;

long binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Weight fundamental(int rank, int k, int mult = 1) {
  Weight w(rank, 0);
  w[k - 1] = mult;
  return w;
}

enum class HeadKind { SO, SU, SP, Spin, U, T, Exceptional };

struct Head {
  HeadKind kind;
  int n = 0;
  std::string name;  // exceptional type name
  size_t pos = 0;
  std::string text;
};

enum class SpecKind { Default, Labels, Real, Complex, Quat, Lambda, Sym, Sym0, Adjoint, Spin };

struct Spec {
  SpecKind kind = SpecKind::Default;
  int a = 0;
  std::vector<int> labels;
  std::optional<std::pair<char, int>> space;  // trailing "C^n" after Lambda^k / S^k
  size_t pos = 0;
};

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  RepExpr parse() {
    RepExpr e = expr();
    ws();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return e;
  }

 private:
  const std::string& s_;
  size_t i_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, i_); }
  [[noreturn]] void fail_at(const std::string& msg, size_t at) const { throw ParseError(msg, at); }

  void ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool peek(char c) {
    ws();
    return i_ < s_.size() && s_[i_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++i_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::string ident() {
    ws();
    size_t b = i_;
    while (i_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[i_]))) ++i_;
    return s_.substr(b, i_ - b);
  }
  int integer() {
    ws();
    size_t b = i_;
    if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) ++i_;
    size_t d = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (i_ == d) fail_at("expected an integer", b);
    if (i_ - d > 6) fail_at("integer out of range", b);
    return std::stoi(s_.substr(b, i_ - b));
  }

  // Combinator at the cursor, or nothing (cursor unchanged).
  std::optional<K> op() {
    size_t save = i_;
    if (!accept('(')) return std::nullopt;
    ws();
    if (accept('+')) {
      expect(')');
      return K::Sum;
    }
    if (i_ < s_.size() && s_[i_] == 'x') {
      ++i_;
      expect(')');
      expect('_');
      ws();
      char f = i_ < s_.size() ? s_[i_] : '\0';
      if (f != 'R' && f != 'C' && f != 'H') fail("expected R, C or H after (x)_");
      ++i_;
      return f == 'R' ? K::TensorR : f == 'C' ? K::TensorC : K::TensorH;
    }
    i_ = save;
    return std::nullopt;
  }

  RepExpr expr() {
    RepExpr e = term();
    while (true) {
      ws();
      size_t at = i_;
      auto k = op();
      if (!k) break;
      RepExpr rhs = term();
      e = *k == K::Sum ? RepExpr::sum(std::move(e), std::move(rhs)) : RepExpr::tensor(*k, std::move(e), std::move(rhs));
      e.source = s_.substr(at);
      typecheck(e);
    }
    return e;
  }

  RepExpr term() {
    ws();
    if (accept('(')) {
      RepExpr e = expr();
      expect(')');
      return e;
    }
    size_t b = i_;
    Head h = head();
    Spec sp;
    if (accept(':')) sp = spec();
    size_t e = i_;
    RepExpr out = elaborate(h, sp);
    if (out.source.empty()) out.source = s_.substr(b, e - b);
    return out;
  }

  Head head() {
    size_t b = i_;
    std::string id = ident();
    if (id.empty()) fail("expected a group");
    Head h;
    h.pos = b;
    static const std::pair<const char*, HeadKind> kinds[] = {{"SO", HeadKind::SO}, {"SU", HeadKind::SU},
                                                               {"SP", HeadKind::SP}, {"Sp", HeadKind::SP},
                                                               {"Spin", HeadKind::Spin}, {"U", HeadKind::U},
                                                               {"T", HeadKind::T}};
    for (const auto& [name, k] : kinds) {
      if (id != name) continue;
      h.kind = k;
      expect('(');
      h.n = integer();
      expect(')');
      h.text = s_.substr(b, i_ - b);
      return h;
    }
    if (id == "G2" || id == "F4" || id == "E6" || id == "E7" || id == "E8") {
      h.kind = HeadKind::Exceptional;
      h.name = id;
      h.text = id;
      return h;
    }
    fail_at("unknown group '" + id + "'", b);
  }

  Spec spec() {
    ws();
    Spec sp;
    sp.pos = i_;
    if (accept('[')) {
      sp.kind = SpecKind::Labels;
      if (!peek(']')) {
        do sp.labels.push_back(integer());
        while (accept(','));
      }
      expect(']');
      return sp;
    }
    std::string id = ident();
    if (id == "adjoint") {
      sp.kind = SpecKind::Adjoint;
      return sp;
    }
    if (id == "spin") {
      sp.kind = SpecKind::Spin;
      return sp;
    }
    if (id == "R" || id == "C" || id == "Q" || id == "Lambda" || id == "S") {
      expect('^');
      sp.a = integer();
      if (id == "R") sp.kind = SpecKind::Real;
      if (id == "C") sp.kind = SpecKind::Complex;
      if (id == "Q") sp.kind = SpecKind::Quat;
      if (id == "Lambda" || id == "S") {
        sp.kind = id == "Lambda" ? SpecKind::Lambda : SpecKind::Sym;
        if (id == "S" && accept('_')) {
          if (integer() != 0 || sp.a != 2) fail_at("only S^2_0 is supported", sp.pos);
          sp.kind = SpecKind::Sym0;
        }
        // Optional space: "Lambda^2 C^6".
        size_t save = i_;
        std::string sid = ident();
        if ((sid == "C" || sid == "R") && accept('^')) {
          sp.space = {sid[0], integer()};
        } else {
          i_ = save;
        }
      }
      return sp;
    }
    fail_at("expected a representation after ':'", sp.pos);
  }

  [[noreturn]] void type_error(const Head& h, const std::string& what) const {
    throw TypeError(what + " in '" + h.text + "'");
  }

  // Natural module dimension and field letter of a classical head.
  std::pair<char, int> natural(const Head& h) const {
    switch (h.kind) {
      case HeadKind::SU: return {'C', h.n};
      case HeadKind::SP: return {'C', 2 * h.n};
      case HeadKind::SO:
      case HeadKind::Spin: return {'R', h.n};
      default: return {'?', 0};
    }
  }

  SimpleType simple_type(const Head& h) const {
    switch (h.kind) {
      case HeadKind::SU:
        if (h.n < 2) type_error(h, "SU(n) needs n >= 2");
        return {Family::A, h.n - 1};
      case HeadKind::SP:
        if (h.n < 1) type_error(h, "SP(n) needs n >= 1");
        return h.n == 1 ? SimpleType{Family::A, 1} : SimpleType{Family::C, h.n};
      case HeadKind::SO:
      case HeadKind::Spin:
        if (h.n == 3) return {Family::A, 1};
        if (h.n < 5) type_error(h, "unsupported orthogonal group");
        return h.n % 2 ? SimpleType{Family::B, (h.n - 1) / 2} : SimpleType{Family::D, h.n / 2};
      case HeadKind::Exceptional: return parse_simple_type(h.name);
      default: type_error(h, "not a simple group");
    }
  }

  // Highest weight with the requested dimension and type; the largest one lexicographically.
  Weight by_dimension(const Head& h, const SimpleType& t, long cdim, std::optional<FSType> want, bool real) const {
    const RootSystem& rs = root_system(t);
    std::optional<Weight> best;
    for (const Weight& w : dominant_weights_up_to_dim(rs, cdim)) {
      if (weyl_dim(rs, w) != Integer(cdim)) continue;
      IrrepSpec s = IrrepSpec::of(t, w);
      FSType ty = fs_type(s);
      if (real != (ty == FSType::Real)) continue;
      if (want && ty != *want) continue;
      if (h.kind == HeadKind::SO && !vector_type(s)) continue;
      if (!best || w > *best) best = w;
    }
    if (!best) type_error(h, "no irreducible representation of that dimension and type");
    return *best;
  }

  Weight weight_for(const Head& h, const SimpleType& t, const Spec& sp) const {
    const RootSystem& rs = root_system(t);
    const int r = t.rank;
    const bool so3 = (h.kind == HeadKind::SO || h.kind == HeadKind::Spin) && h.n == 3;
    Weight w;
    long nominal = -1;
    if (sp.space && (sp.space->first != natural(h).first || sp.space->second != natural(h).second))
      type_error(h, "space does not match the group");
    switch (sp.kind) {
      case SpecKind::Labels:
        if (static_cast<int>(sp.labels.size()) != r) type_error(h, "expected " + std::to_string(r) + " labels");
        for (int x : sp.labels)
          if (x < 0) type_error(h, "labels must be non-negative");
        return sp.labels;
      case SpecKind::Default:
        if (so3) return {2};
        switch (h.kind) {
          case HeadKind::SU:
          case HeadKind::SP: return fundamental(r, 1);
          case HeadKind::SO: return by_dimension(h, t, h.n, FSType::Real, true);
          case HeadKind::Spin: return fundamental(r, r);
          default: {
            // The smallest nontrivial irrep is fundamental.
            long best = -1;
            for (int k = 1; k <= r; ++k) {
              long d = weyl_dim_small(rs, fundamental(r, k));
              if (best < 0 || d < best) best = d, w = fundamental(r, k);
            }
            return w;
          }
        }
      case SpecKind::Real: return by_dimension(h, t, sp.a, std::nullopt, true);
      case SpecKind::Complex: return by_dimension(h, t, sp.a, std::nullopt, false);
      case SpecKind::Quat: return by_dimension(h, t, 2L * sp.a, FSType::Quaternionic, false);
      case SpecKind::Adjoint: return rs.highest_root_labels();
      case SpecKind::Spin:
        if (t.family != Family::B && t.family != Family::D) type_error(h, "spin needs an orthogonal group");
        return fundamental(r, r);
      case SpecKind::Lambda: {
        const int k = sp.a;
        if (so3) {
          if (k != 1 && k != 2) type_error(h, "Lambda^k out of range");
          return {2};
        }
        if (k < 1) type_error(h, "Lambda^k needs k >= 1");
        switch (t.family) {
          case Family::A:
            if (k > r) type_error(h, "Lambda^k out of range");
            w = fundamental(r, k);
            nominal = binom(r + 1, k);
            break;
          case Family::C:
            if (k > r) type_error(h, "Lambda^k out of range");
            w = fundamental(r, k);
            nominal = binom(2 * r, k) - binom(2 * r, k - 2);
            break;
          case Family::B:
            if (k > r) type_error(h, "Lambda^k out of range");
            w = k < r ? fundamental(r, k) : fundamental(r, r, 2);
            nominal = binom(2 * r + 1, k);
            break;
          case Family::D:
            if (k > r - 1) type_error(h, "Lambda^k out of range");
            w = fundamental(r, k);
            if (k == r - 1) w[r - 1] = 1;
            nominal = binom(2 * r, k);
            break;
          default: type_error(h, "Lambda^k needs a classical group");
        }
        break;
      }
      case SpecKind::Sym:
        if (so3 || (t.family != Family::A && t.family != Family::C))
          type_error(h, "S^k needs a unitary or symplectic group; use S^2_0 for orthogonal ones");
        if (sp.a < 1) type_error(h, "S^k needs k >= 1");
        w = fundamental(r, 1, sp.a);
        nominal = binom(natural(h).second + sp.a - 1, sp.a);
        break;
      case SpecKind::Sym0:
        if (so3) return {4};
        if (t.family != Family::B && t.family != Family::D) type_error(h, "S^2_0 needs an orthogonal group");
        w = fundamental(r, 1, 2);
        nominal = binom(h.n + 1, 2) - 1;
        break;
    }
    if (nominal >= 0 && weyl_dim(rs, w) != Integer(nominal))
      throw std::logic_error("sugar elaborated to a weight of unexpected dimension");
    return w;
  }

  RepExpr circle(const Head& h, const Spec& sp, const std::string& label) const {
    int charge = 1;
    if (sp.kind == SpecKind::Labels) {
      if (sp.labels.size() != 1) type_error(h, "a circle takes one charge");
      charge = sp.labels[0];
    } else if (!(sp.kind == SpecKind::Default || (sp.kind == SpecKind::Complex && sp.a == 1))) {
      type_error(h, "a circle acts on C^1");
    }
    return RepExpr::make_leaf(IrrepSpec::torus({charge}), label);
  }

  RepExpr elaborate(const Head& h, const Spec& sp) const {
    switch (h.kind) {
      case HeadKind::T: {
        if (h.n < 1) type_error(h, "T(k) needs k >= 1");
        if (sp.kind != SpecKind::Labels || static_cast<int>(sp.labels.size()) != h.n)
          type_error(h, "T(k) takes a character with k entries");
        return RepExpr::make_leaf(IrrepSpec::torus(sp.labels));
      }
      case HeadKind::U: {
        if (h.n < 1) type_error(h, "U(n) needs n >= 1");
        if (h.n == 1) return circle(h, sp, "U1");
        Head su = h;
        su.kind = HeadKind::SU;
        RepExpr e = RepExpr::tensor(K::TensorC, elaborate(su, sp), RepExpr::make_leaf(IrrepSpec::torus({1})));
        typecheck(e);
        return e;
      }
      case HeadKind::SO:
        if (h.n == 2) return circle(h, sp, "SO2");
        if (h.n == 4) {
          if (!(sp.kind == SpecKind::Default || (sp.kind == SpecKind::Real && sp.a == 4)))
            type_error(h, "SO(4) supports only R^4");
          RepExpr q = RepExpr::make_leaf(IrrepSpec::of({Family::A, 1}, {1}), "SP1");
          return RepExpr::tensor(K::TensorH, q, q);
        }
        break;
      default: break;
    }
    SimpleType t = simple_type(h);
    Weight w = weight_for(h, t, sp);
    IrrepSpec s = IrrepSpec::of(t, w);
    try {
      validate(s);
    } catch (const std::exception& ex) {
      type_error(h, ex.what());
    }
    std::string label;
    switch (h.kind) {
      case HeadKind::SO:
        if (!vector_type(s)) type_error(h, "weight " + weight_to_string(w) + " does not factor through SO(" + std::to_string(h.n) + ")");
        break;
      case HeadKind::Spin: label = "Spin" + std::to_string(h.n); break;
      case HeadKind::SP: if (h.n == 1) label = "SP1"; break;
      case HeadKind::SU: label = "SU" + std::to_string(h.n); break;
      default: break;
    }
    return RepExpr::make_leaf(std::move(s), label);
  }
};

std::string labels(const Weight& w) {
  std::string out = "[";
  for (size_t i = 0; i < w.size(); ++i) out += (i ? "," : "") + std::to_string(w[i]);
  return out + "]";
}

std::string print_leaf(const RepExpr& e) {
  const IrrepSpec& s = e.leaf;
  if (s.is_torus()) return (s.torus_rank == 1 ? "U(1)" : "T(" + std::to_string(s.torus_rank) + ")") + ": " + labels(s.weight);
  const SimpleType& t = *s.simple;
  const int r = t.rank;
  std::string head;
  bool so = e.group_label.rfind("SO", 0) == 0 && vector_type(s);
  switch (t.family) {
    case Family::A:
      if (r == 1 && so) head = "SO(3)";
      else if (r == 1 && e.group_label == "SP1") head = "SP(1)";
      else head = "SU(" + std::to_string(r + 1) + ")";
      break;
    case Family::B: head = (so ? "SO(" : "Spin(") + std::to_string(2 * r + 1) + ")"; break;
    case Family::C: head = "SP(" + std::to_string(r) + ")"; break;
    case Family::D: head = (so ? "SO(" : "Spin(") + std::to_string(2 * r) + ")"; break;
    default: head = t.name();
  }
  return head + ": " + labels(s.weight);
}

}  // namespace

RepExpr parse_rep(const std::string& text) { return Parser(text).parse(); }

std::string print_rep(const RepExpr& e) {
  if (e.kind == K::Leaf) return print_leaf(e);
  auto side = [](const RepExpr& c) { return c.kind == K::Leaf ? print_rep(c) : "(" + print_rep(c) + ")"; };
  const char* op = e.kind == K::TensorR ? " (x)_R " : e.kind == K::TensorC ? " (x)_C " : e.kind == K::TensorH ? " (x)_H " : " (+) ";
  return side(e.children[0]) + op + side(e.children[1]);
}

}  // namespace cohom

#include "fgc/descriptor.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "fgc/error.hpp"
#include "fgc/group_io.hpp"

namespace fgc {

namespace {

std::vector<std::uint16_t> alloc_table(i64 n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "build: order must be >= 1");
  if (n > kMaxOrder)
    fail(ErrorCode::InvalidArgument,
         "build: order " + std::to_string(n) + " exceeds cap " + std::to_string(kMaxOrder));
  return std::vector<std::uint16_t>(std::size_t(n) * n);
}

FiniteGroup build_cyclic(i64 n, const std::string& label) {
  auto table = alloc_table(n);
  for (i64 i = 0; i < n; ++i)
    for (i64 j = 0; j < n; ++j) table[std::size_t(i) * n + j] = std::uint16_t((i + j) % n);
  return FiniteGroup(int(n), std::move(table), label);
}

FiniteGroup build_direct_pair(const FiniteGroup& A, const FiniteGroup& B, const std::string& label) {
  const i64 na = A.order(), nb = B.order();
  const i64 n = na * nb;
  auto table = alloc_table(n);
  for (i64 x1 = 0; x1 < na; ++x1)
    for (i64 y1 = 0; y1 < nb; ++y1)
      for (i64 x2 = 0; x2 < na; ++x2)
        for (i64 y2 = 0; y2 < nb; ++y2)
          table[std::size_t(x1 * nb + y1) * n + (x2 * nb + y2)] =
              std::uint16_t(i64(A.op(int(x1), int(x2))) * nb + B.op(int(y1), int(y2)));
  return FiniteGroup(int(n), std::move(table), label);
}

// C_a x| C_b realized on pairs (x, y) = a^x b^y. Moving b^y past a^x twists
// by the inverse action exponent, which makes b^-1 a b = a^e hold on the nose.
FiniteGroup build_sdp(i64 a, i64 b, i64 e, const std::string& label) {
  if (a < 1 || b < 1) fail(ErrorCode::InvalidArgument, "sdp: orders must be >= 1");
  if (e < 1 || e > a) fail(ErrorCode::InvalidArgument, "sdp: action exponent out of range");
  i64 em = e % a;
  if (gcd(em == 0 ? a : em, a) != 1)
    fail(ErrorCode::InvalidArgument, "sdp(" + std::to_string(a) + "," + std::to_string(b) + "," +
                                         std::to_string(e) + "): exponent not coprime to " +
                                         std::to_string(a) + ", not an automorphism");
  if (pow_mod(e, b, a) != 1 % a)
    fail(ErrorCode::InvalidArgument, "sdp(" + std::to_string(a) + "," + std::to_string(b) + "," +
                                         std::to_string(e) + "): exponent order does not divide " +
                                         std::to_string(b) + ", not a valid action");
  const i64 ei = inv_mod(e, a);
  std::vector<i64> twist(b);  // ei^y mod a
  twist[0] = 1 % a;
  for (i64 y = 1; y < b; ++y) twist[y] = twist[y - 1] * ei % a;
  const i64 n = a * b;
  auto table = alloc_table(n);
  for (i64 x1 = 0; x1 < a; ++x1)
    for (i64 y1 = 0; y1 < b; ++y1)
      for (i64 x2 = 0; x2 < a; ++x2)
        for (i64 y2 = 0; y2 < b; ++y2)
          table[std::size_t(x1 * b + y1) * n + (x2 * b + y2)] =
              std::uint16_t((x1 + x2 * twist[y1]) % a * b + (y1 + y2) % b);
  return FiniteGroup(int(n), std::move(table), label);
}

// Dicyclic group of order 4m on pairs (i, j) = a^i b^j with i mod 2m,
// j in {0,1}; relations a^(2m) = 1, b^2 = a^m, b^-1 a b = a^-1.
FiniteGroup build_dicyclic(i64 m, const std::string& label) {
  if (m < 1) fail(ErrorCode::InvalidArgument, "dic: parameter must be >= 1");
  const i64 two_m = 2 * m;
  const i64 n = 4 * m;
  auto table = alloc_table(n);
  auto idx = [&](i64 i, i64 j) { return std::size_t(i * 2 + j); };
  for (i64 i1 = 0; i1 < two_m; ++i1)
    for (i64 j1 = 0; j1 < 2; ++j1)
      for (i64 i2 = 0; i2 < two_m; ++i2)
        for (i64 j2 = 0; j2 < 2; ++j2) {
          std::size_t r;
          if (j1 == 0)
            r = idx((i1 + i2) % two_m, j2);
          else if (j2 == 0)
            r = idx(((i1 - i2) % two_m + two_m) % two_m, 1);
          else
            r = idx(((i1 - i2 + m) % two_m + two_m) % two_m, 0);
          table[idx(i1, j1) * n + idx(i2, j2)] = std::uint16_t(r);
        }
  return FiniteGroup(int(n), std::move(table), label);
}

FiniteGroup build_sl2(i64 p, const std::string& label) {
  if (!is_prime(p)) fail(ErrorCode::InvalidArgument, "sl2: parameter must be prime");
  const i64 n = p * (p * p - 1);
  if (n > kMaxOrder)
    fail(ErrorCode::InvalidArgument, "sl2(" + std::to_string(p) + "): order " +
                                         std::to_string(n) + " exceeds cap");
  using Mat = std::array<i64, 4>;
  std::vector<Mat> mats;
  mats.push_back({1, 0, 0, 1});
  for (i64 a = 0; a < p; ++a)
    for (i64 b = 0; b < p; ++b)
      for (i64 c = 0; c < p; ++c)
        for (i64 d = 0; d < p; ++d)
          if (((a * d - b * c) % p + p) % p == 1 && !(a == 1 && b == 0 && c == 0 && d == 1))
            mats.push_back({a, b, c, d});
  std::map<Mat, int> pos;
  for (int i = 0; i < int(mats.size()); ++i) pos[mats[i]] = i;
  auto mul = [&](const Mat& x, const Mat& y) -> Mat {
    return {(x[0] * y[0] + x[1] * y[2]) % p, (x[0] * y[1] + x[1] * y[3]) % p,
            (x[2] * y[0] + x[3] * y[2]) % p, (x[2] * y[1] + x[3] * y[3]) % p};
  };
  auto table = alloc_table(n);
  for (i64 i = 0; i < n; ++i)
    for (i64 j = 0; j < n; ++j)
      table[std::size_t(i) * n + j] = std::uint16_t(pos.at(mul(mats[i], mats[j])));
  return FiniteGroup(int(n), std::move(table), label);
}

void append_transpositions(std::vector<std::vector<int>>& gens, int n) {
  if (n < 2) return;
  std::vector<int> t(n);
  for (int i = 0; i < n; ++i) t[i] = i;
  std::swap(t[0], t[1]);
  gens.push_back(t);
  std::vector<int> c(n);
  for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
  gens.push_back(c);
}

FiniteGroup build_symmetric(i64 n, const std::string& label) {
  if (n < 1 || n > 6) fail(ErrorCode::InvalidArgument, "sym: parameter must be in [1,6]");
  std::vector<std::vector<int>> gens;
  append_transpositions(gens, int(n));
  return build_from_permutations(gens, int(std::max<i64>(n, 1)), label);
}

FiniteGroup build_alternating(i64 n, const std::string& label) {
  if (n < 1 || n > 6) fail(ErrorCode::InvalidArgument, "alt: parameter must be in [1,6]");
  std::vector<std::vector<int>> gens;
  // all 3-cycles
  for (int a = 0; a + 2 < n; ++a)
    for (int b = a + 1; b + 1 < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        std::vector<int> g(n);
        for (int i = 0; i < n; ++i) g[i] = i;
        g[a] = b;
        g[b] = c;
        g[c] = a;
        gens.push_back(g);
      }
  return build_from_permutations(gens, int(std::max<i64>(n, 1)), label);
}

struct Parser {
  const std::string& s;
  std::size_t pos = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c))
      fail(ErrorCode::Parse, "descriptor: expected '" + std::string(1, c) + "' at position " +
                                 std::to_string(pos) + " in '" + s + "'");
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    if (pos == start)
      fail(ErrorCode::Parse,
           "descriptor: expected a name at position " + std::to_string(pos) + " in '" + s + "'");
    return s.substr(start, pos - start);
  }

  i64 integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start)
      fail(ErrorCode::Parse,
           "descriptor: expected an integer at position " + std::to_string(pos) + " in '" + s + "'");
    return std::stoll(s.substr(start, pos - start));
  }

  GroupDescriptor expr() {
    std::string name = ident();
    if (name == "q8") return GroupDescriptor::quaternion8();
    expect('(');
    GroupDescriptor d;
    if (name == "direct") {
      std::vector<GroupDescriptor> factors;
      factors.push_back(expr());
      while (eat(',')) factors.push_back(expr());
      expect(')');
      return GroupDescriptor::direct(std::move(factors));
    }
    if (name == "file") {
      skip_ws();
      std::size_t start = pos;
      int depth = 1;
      while (pos < s.size() && depth > 0) {
        if (s[pos] == '(') ++depth;
        if (s[pos] == ')') --depth;
        if (depth > 0) ++pos;
      }
      if (depth != 0) fail(ErrorCode::Parse, "descriptor: unterminated file path in '" + s + "'");
      std::string path = s.substr(start, pos - start);
      expect(')');
      return GroupDescriptor::from_file(path);
    }
    i64 p1 = integer();
    if (name == "cyclic") d = GroupDescriptor::cyclic(p1);
    else if (name == "mod2") d = GroupDescriptor::modular2(p1);
    else if (name == "famV") d = GroupDescriptor::family_v(p1);
    else if (name == "sl2") d = GroupDescriptor::sl2(p1);
    else if (name == "dih") d = GroupDescriptor::dihedral(p1);
    else if (name == "dic") d = GroupDescriptor::dicyclic(p1);
    else if (name == "sym") d = GroupDescriptor::symmetric(p1);
    else if (name == "alt") d = GroupDescriptor::alternating(p1);
    else if (name == "sdp") {
      expect(',');
      i64 p2 = integer();
      expect(',');
      i64 p3 = integer();
      d = GroupDescriptor::semidirect_cyclic(p1, p2, p3);
    } else {
      fail(ErrorCode::Parse, "descriptor: unknown constructor '" + name + "'");
    }
    expect(')');
    return d;
  }
};

}  // namespace

GroupDescriptor GroupDescriptor::parse(const std::string& text) {
  Parser p(text);
  GroupDescriptor d = p.expr();
  p.skip_ws();
  if (p.pos != text.size())
    fail(ErrorCode::Parse, "descriptor: trailing input after position " + std::to_string(p.pos) +
                               " in '" + text + "'");
  return d;
}

std::string GroupDescriptor::text() const {
  switch (kind) {
    case Kind::Cyclic: return "cyclic(" + std::to_string(a) + ")";
    case Kind::Quaternion8: return "q8";
    case Kind::Modular2: return "mod2(" + std::to_string(a) + ")";
    case Kind::FamilyV: return "famV(" + std::to_string(a) + ")";
    case Kind::SemidirectCyclic:
      return "sdp(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(e) + ")";
    case Kind::SL2: return "sl2(" + std::to_string(a) + ")";
    case Kind::Dihedral: return "dih(" + std::to_string(a) + ")";
    case Kind::Dicyclic: return "dic(" + std::to_string(a) + ")";
    case Kind::Symmetric: return "sym(" + std::to_string(a) + ")";
    case Kind::Alternating: return "alt(" + std::to_string(a) + ")";
    case Kind::FromFile: return "file(" + path + ")";
    case Kind::DirectProduct: {
      std::string out = "direct(";
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) out += ",";
        out += factors[i].text();
      }
      return out + ")";
    }
  }
  fail(ErrorCode::Internal, "descriptor: unhandled kind");
}

i64 GroupDescriptor::order() const {
  auto factorial = [](i64 n) {
    i64 f = 1;
    for (i64 i = 2; i <= n; ++i) f *= i;
    return f;
  };
  switch (kind) {
    case Kind::Cyclic: return a;
    case Kind::Quaternion8: return 8;
    case Kind::Modular2: return i64(1) << a;
    case Kind::FamilyV: return 3 * (i64(1) << a);
    case Kind::SemidirectCyclic: return a * b;
    case Kind::SL2: return a * (a * a - 1);
    case Kind::Dihedral: return 2 * a;
    case Kind::Dicyclic: return 4 * a;
    case Kind::Symmetric: return factorial(a);
    case Kind::Alternating: return a <= 2 ? 1 : factorial(a) / 2;
    case Kind::FromFile: return -1;
    case Kind::DirectProduct: {
      i64 n = 1;
      for (const auto& f : factors) {
        i64 fo = f.order();
        if (fo < 0) return -1;
        n *= fo;
      }
      return n;
    }
  }
  fail(ErrorCode::Internal, "descriptor: unhandled kind");
}

GroupDescriptor GroupDescriptor::cyclic(i64 n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "cyclic: order must be >= 1");
  GroupDescriptor d;
  d.kind = Kind::Cyclic;
  d.a = n;
  return d;
}

GroupDescriptor GroupDescriptor::direct(std::vector<GroupDescriptor> factors) {
  if (factors.empty()) fail(ErrorCode::InvalidArgument, "direct: needs at least one factor");
  GroupDescriptor d;
  d.kind = Kind::DirectProduct;
  d.factors = std::move(factors);
  return d;
}

GroupDescriptor GroupDescriptor::quaternion8() {
  GroupDescriptor d;
  d.kind = Kind::Quaternion8;
  return d;
}

GroupDescriptor GroupDescriptor::modular2(i64 t) {
  if (t < 4)
    fail(ErrorCode::InvalidArgument, "mod2: parameter t must be >= 4 (got " + std::to_string(t) + ")");
  if (t > 12) fail(ErrorCode::InvalidArgument, "mod2: order exceeds cap");
  GroupDescriptor d;
  d.kind = Kind::Modular2;
  d.a = t;
  return d;
}

GroupDescriptor GroupDescriptor::family_v(i64 s) {
  if (s < 1) fail(ErrorCode::InvalidArgument, "famV: parameter s must be >= 1");
  if (s > 10) fail(ErrorCode::InvalidArgument, "famV: order exceeds cap");
  GroupDescriptor d;
  d.kind = Kind::FamilyV;
  d.a = s;
  return d;
}

GroupDescriptor GroupDescriptor::semidirect_cyclic(i64 a, i64 b, i64 e) {
  if (a < 1 || b < 1) fail(ErrorCode::InvalidArgument, "sdp: orders must be >= 1");
  if (e < 1 || e > a) fail(ErrorCode::InvalidArgument, "sdp: action exponent must be in [1,a]");
  GroupDescriptor d;
  d.kind = Kind::SemidirectCyclic;
  d.a = a;
  d.b = b;
  d.e = e;
  return d;
}

GroupDescriptor GroupDescriptor::sl2(i64 p) {
  GroupDescriptor d;
  d.kind = Kind::SL2;
  d.a = p;
  return d;
}

GroupDescriptor GroupDescriptor::dihedral(i64 n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "dih: parameter must be >= 1");
  GroupDescriptor d;
  d.kind = Kind::Dihedral;
  d.a = n;
  return d;
}

GroupDescriptor GroupDescriptor::dicyclic(i64 n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "dic: parameter must be >= 1");
  GroupDescriptor d;
  d.kind = Kind::Dicyclic;
  d.a = n;
  return d;
}

GroupDescriptor GroupDescriptor::symmetric(i64 n) {
  if (n < 1 || n > 6) fail(ErrorCode::InvalidArgument, "sym: parameter must be in [1,6]");
  GroupDescriptor d;
  d.kind = Kind::Symmetric;
  d.a = n;
  return d;
}

GroupDescriptor GroupDescriptor::alternating(i64 n) {
  if (n < 1 || n > 6) fail(ErrorCode::InvalidArgument, "alt: parameter must be in [1,6]");
  GroupDescriptor d;
  d.kind = Kind::Alternating;
  d.a = n;
  return d;
}

GroupDescriptor GroupDescriptor::from_file(std::string path) {
  GroupDescriptor d;
  d.kind = Kind::FromFile;
  d.path = std::move(path);
  return d;
}

FiniteGroup build(const GroupDescriptor& d) {
  const std::string label = d.text();
  switch (d.kind) {
    case GroupDescriptor::Kind::Cyclic: return build_cyclic(d.a, label);
    case GroupDescriptor::Kind::Quaternion8: return build_dicyclic(2, label);
    case GroupDescriptor::Kind::Modular2:
      return build_sdp(i64(1) << (d.a - 1), 2, 1 + (i64(1) << (d.a - 2)), label);
    case GroupDescriptor::Kind::FamilyV: return build_sdp(3, i64(1) << d.a, 2, label);
    case GroupDescriptor::Kind::SemidirectCyclic: return build_sdp(d.a, d.b, d.e, label);
    case GroupDescriptor::Kind::SL2: return build_sl2(d.a, label);
    case GroupDescriptor::Kind::Dihedral:
      return build_sdp(d.a, 2, d.a == 1 ? 1 : d.a - 1, label);
    case GroupDescriptor::Kind::Dicyclic: return build_dicyclic(d.a, label);
    case GroupDescriptor::Kind::Symmetric: return build_symmetric(d.a, label);
    case GroupDescriptor::Kind::Alternating: return build_alternating(d.a, label);
    case GroupDescriptor::Kind::FromFile: return parse_group_file(d.path);
    case GroupDescriptor::Kind::DirectProduct: {
      FiniteGroup acc = build(d.factors[0]);
      for (std::size_t i = 1; i < d.factors.size(); ++i) {
        FiniteGroup next = build(d.factors[i]);
        acc = build_direct_pair(acc, next, label);
      }
      acc.set_label(label);
      return acc;
    }
  }
  fail(ErrorCode::Internal, "build: unhandled descriptor kind");
}

FiniteGroup build_from_permutations(const std::vector<std::vector<int>>& generators, int degree,
                                    std::string label) {
  if (degree < 1) fail(ErrorCode::InvalidArgument, "permutation group: degree must be >= 1");
  std::vector<int> ident(degree);
  for (int i = 0; i < degree; ++i) ident[i] = i;
  for (const auto& g : generators) {
    if (int(g.size()) != degree)
      fail(ErrorCode::InvalidArgument, "permutation group: generator degree mismatch");
    std::vector<char> seen(degree, 0);
    for (int v : g) {
      if (v < 0 || v >= degree || seen[v])
        fail(ErrorCode::Parse, "permutation group: generator is not a permutation");
      seen[v] = 1;
    }
  }
  std::set<std::vector<int>> elems;
  elems.insert(ident);
  std::vector<std::vector<int>> frontier{ident};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& p : frontier) {
      for (const auto& g : generators) {
        std::vector<int> q(degree);
        for (int i = 0; i < degree; ++i) q[i] = g[p[i]];  // apply p, then g
        if (elems.insert(q).second) {
          if (int(elems.size()) > kMaxOrder)
            fail(ErrorCode::Validate, "permutation group: closure exceeds order cap " +
                                          std::to_string(kMaxOrder));
          next.push_back(std::move(q));
        }
      }
    }
    frontier = std::move(next);
  }
  // Lexicographic element order puts the identity first.
  std::vector<std::vector<int>> sorted(elems.begin(), elems.end());
  const int n = int(sorted.size());
  std::map<std::vector<int>, int> pos;
  for (int i = 0; i < n; ++i) pos[sorted[i]] = i;
  std::vector<std::uint16_t> table(std::size_t(n) * n);
  std::vector<int> prod(degree);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int x = 0; x < degree; ++x) prod[x] = sorted[j][sorted[i][x]];
      table[std::size_t(i) * n + j] = std::uint16_t(pos.at(prod));
    }
  return FiniteGroup(n, std::move(table), std::move(label));
}

}  // namespace fgc

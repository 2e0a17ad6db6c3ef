#pragma once

#include <string>
#include <vector>

#include "fgc/group.hpp"

namespace fgc {

// Constructor AST for the groups this artifact can name. The text grammar is
//   cyclic(n) | q8 | mod2(t) | famV(s) | sdp(a,b,e) | sl2(p) | dih(n) |
//   dic(n) | sym(n) | alt(n) | direct(e1,e2,...)
// plus file(path) for ingesting a serialized group.
struct GroupDescriptor {
  enum class Kind {
    Cyclic,            // C_n
    DirectProduct,     // factors
    Quaternion8,       // Q8
    Modular2,          // <a,b | a^(2^(t-1)) = b^2 = 1, b^-1 a b = a^(1+2^(t-2))>, t >= 4
    FamilyV,           // <a,b | a^3 = b^(2^s) = 1, b^-1 a b = a^-1>, s >= 1
    SemidirectCyclic,  // C_a x| C_b with b^-1 a b = a^e; needs e^b = 1 mod a, gcd(e,a) = 1
    SL2,               // SL(2,p), p prime
    Dihedral,          // order 2n
    Dicyclic,          // order 4n, b^2 = a^n, b^-1 a b = a^-1
    Symmetric,         // n <= 6
    Alternating,       // n <= 6
    FromFile,
  };

  Kind kind = Kind::Cyclic;
  i64 a = 1, b = 0, e = 0;  // parameter slots; meaning depends on kind
  std::vector<GroupDescriptor> factors;
  std::string path;

  static GroupDescriptor parse(const std::string& text);

  /// Canonical grammar form.
  std::string text() const;

  /// Predicted order without building; -1 for FromFile.
  i64 order() const;

  static GroupDescriptor cyclic(i64 n);
  static GroupDescriptor direct(std::vector<GroupDescriptor> factors);
  static GroupDescriptor quaternion8();
  static GroupDescriptor modular2(i64 t);
  static GroupDescriptor family_v(i64 s);
  static GroupDescriptor semidirect_cyclic(i64 a, i64 b, i64 e);
  static GroupDescriptor sl2(i64 p);
  static GroupDescriptor dihedral(i64 n);
  static GroupDescriptor dicyclic(i64 n);
  static GroupDescriptor symmetric(i64 n);
  static GroupDescriptor alternating(i64 n);
  static GroupDescriptor from_file(std::string path);
};

/// Realize a descriptor as a validated Cayley table. Labels the result with
/// the canonical descriptor text.
FiniteGroup build(const GroupDescriptor& d);

/// Build the closure of a permutation generator list (0-based images).
FiniteGroup build_from_permutations(const std::vector<std::vector<int>>& generators,
                                    int degree, std::string label);

}  // namespace fgc

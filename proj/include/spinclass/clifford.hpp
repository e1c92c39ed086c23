#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "spinclass/exact.hpp"

namespace spinclass::clifford {

using exact::Rational;

/// Basis blade e_I encoded as a bitmask: bit (k-1) set iff k is in I.
using Blade = std::uint32_t;

inline constexpr int kMaxGenerators = 24;

int grade(Blade b);
std::string blade_name(Blade b);

/// Sign s with e_I e_J = s * e_{I xor J} under e_i^2 = -1, e_i e_j = -e_j e_i.
int blade_product_sign(Blade lhs, Blade rhs);

/// Element of Cl_n: rational combination of basis blades.
class CliffordElement {
 public:
  explicit CliffordElement(int n);
  CliffordElement(int n, Blade blade, Rational coeff = 1);

  static CliffordElement scalar(int n, const Rational& value);
  /// e_k, 1 <= k <= n.
  static CliffordElement generator(int n, int k);
  /// e_{i1} e_{i2} ... for a strictly increasing index list.
  static CliffordElement blade(int n, const std::vector<int>& indices);

  int dimension() const { return n_; }
  const std::map<Blade, Rational>& terms() const { return terms_; }
  Rational coefficient(Blade b) const;
  bool is_zero() const { return terms_.empty(); }

  CliffordElement& operator+=(const CliffordElement& o);
  CliffordElement& operator-=(const CliffordElement& o);
  CliffordElement& operator*=(const Rational& s);
  friend CliffordElement operator+(CliffordElement a, const CliffordElement& b) { return a += b; }
  friend CliffordElement operator-(CliffordElement a, const CliffordElement& b) { return a -= b; }
  friend CliffordElement operator*(CliffordElement a, const Rational& s) { return a *= s; }

  friend bool operator==(const CliffordElement& a, const CliffordElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const CliffordElement& a, const CliffordElement& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void add_term(Blade b, const Rational& c);

  int n_;
  std::map<Blade, Rational> terms_;
};

CliffordElement cl_mul(const CliffordElement& a, const CliffordElement& b);
CliffordElement operator*(const CliffordElement& a, const CliffordElement& b);

/// Keeps the even-grade terms.
CliffordElement even_part(const CliffordElement& a);

/// Algebra map Cl_{n-1} -> Cl_n^0 given by e_i -> e_i e_n.
CliffordElement even_iso(const CliffordElement& a);

enum class FieldType { Real, Complex, Quaternionic };
std::string to_string(FieldType f);
int real_dimension(FieldType f);

/// Irreducible real representations of Cl_n.
struct IrrepInfo {
  int n = 0;
  int count = 0;
  FieldType field = FieldType::Real;
  /// Dimension of each irreducible module over its field.
  long dimension_over_field = 0;
};

IrrepInfo irrep_table(int n);

/// Simple-component structure of Cl_n computed from its multiplication
/// table: the center, central idempotents, and the signature of the trace
/// form on one simple component.
struct StructureDecomposition {
  int n = 0;
  /// Real dimension of the center (1 or 2).
  int center_dimension = 1;
  /// Square of the central pseudoscalar when the center is 2-dimensional.
  int pseudoscalar_square = 0;
  int simple_components = 1;
  /// Real dimension of one simple component.
  long component_dimension = 0;
  /// Trace-form signature on one simple component.
  long positive_index = 0;
  long negative_index = 0;
  FieldType field = FieldType::Real;
  /// Component is M_m(field); m is the irreducible module dimension over field.
  long matrix_size = 0;
};

/// Brute-force structure computation, practical for n <= 8.
StructureDecomposition decompose_structure(int n);

/// Signature (positive, negative) of a symmetric rational matrix by
/// exact congruence diagonalization.
std::pair<long, long> signature(const std::vector<std::vector<Rational>>& symmetric);

}  // namespace spinclass::clifford

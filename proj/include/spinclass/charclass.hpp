#pragma once

#include <map>
#include <string>
#include <vector>

#include "spinclass/exact.hpp"
#include "spinclass/lambda2.hpp"

namespace spinclass::charclass {

using exact::ExactMatrix;
using exact::GaussianRational;
using exact::Integer;

/// Integer polynomial in named degree-2 variables, truncated above a fixed
/// cohomological degree. A monomial of total exponent d sits in degree 2d.
class GradedPoly {
 public:
  using Exponents = std::vector<int>;
  static constexpr int kVariableDegree = 2;

  GradedPoly(std::vector<std::string> variables, int truncation_degree);

  static GradedPoly constant(std::vector<std::string> variables, int truncation_degree, const Integer& c);
  static GradedPoly variable(std::vector<std::string> variables, int truncation_degree, std::size_t index);

  const std::vector<std::string>& variables() const { return vars_; }
  int truncation_degree() const { return trunc_; }
  const std::map<Exponents, Integer>& terms() const { return terms_; }

  Integer coefficient(const Exponents& e) const;
  Integer constant_term() const { return coefficient(Exponents(vars_.size(), 0)); }
  /// Terms of the given cohomological degree.
  GradedPoly homogeneous_part(int degree) const;
  GradedPoly truncated(int degree) const;
  bool is_zero() const { return terms_.empty(); }

  GradedPoly& operator+=(const GradedPoly& o);
  GradedPoly& operator-=(const GradedPoly& o);
  GradedPoly& operator*=(const GradedPoly& o);
  GradedPoly& operator*=(const Integer& c);
  friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
  friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }
  friend GradedPoly operator*(GradedPoly a, const GradedPoly& b) { return a *= b; }
  friend GradedPoly operator*(const Integer& c, GradedPoly a) { return a *= c; }
  GradedPoly operator-() const;

  /// Same variables and same terms; truncation degree is ignored.
  friend bool operator==(const GradedPoly& a, const GradedPoly& b);
  friend bool operator!=(const GradedPoly& a, const GradedPoly& b) { return !(a == b); }

  /// Ascending total degree, then lexicographic with x1 > x2 > x3.
  std::string to_string() const;

  /// Adds c * x^e, dropping it if it lies above the truncation degree.
  void add_term(const Exponents& e, const Integer& c);

 private:
  void check_compatible(const GradedPoly& o, const char* op) const;

  std::vector<std::string> vars_;
  int trunc_;
  std::map<Exponents, Integer> terms_;
};

/// "x" for rank 1, otherwise x1..xr.
std::vector<std::string> default_variables(std::size_t rank);

/// Linear form on the torus Lie algebra with integer coefficients.
struct Weight {
  std::vector<int> exponents;

  std::size_t rank() const { return exponents.size(); }
  bool is_zero() const;
  /// Sign of the first nonzero coefficient (0 for the zero weight).
  int leading_sign() const;

  Weight operator-() const;
  friend Weight operator+(const Weight& a, const Weight& b);
  friend bool operator==(const Weight& a, const Weight& b) { return a.exponents == b.exponents; }
  friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
  friend bool operator<(const Weight& a, const Weight& b) { return a.exponents < b.exponents; }

  GradedPoly to_poly(const std::vector<std::string>& variables, int truncation_degree) const;
  std::string to_string(const std::vector<std::string>& variables) const;
  std::string to_string() const { return to_string(default_variables(rank())); }
};

std::string to_string(const std::vector<Weight>& weights);

enum class SpinGroup { Spin3, Spin4, Spin5, Spin6 };

std::string to_string(SpinGroup g);
SpinGroup spin_group_for_rank(int n);

/// Diagonal maximal torus of a group in the 4x4 model. Coordinate k of the
/// universal cover enters entry a as the character z_k^{m_a[k]}.
class TorusModel {
 public:
  static TorusModel of(SpinGroup g);

  SpinGroup group() const { return group_; }
  std::size_t rank() const { return vars_.size(); }
  const std::vector<std::string>& variables() const { return vars_; }
  /// Character of each diagonal entry of the 4x4 model.
  const std::vector<Weight>& diagonal_characters() const { return diag_; }
  /// Forms fixed by the group in the omega model.
  const lambda2::FormIndexSet& fixed_set() const { return fixed_; }

  /// Diagonal element for unit complex numbers z_1..z_r; throws if some |z_k| != 1.
  ExactMatrix embed(const std::vector<GaussianRational>& z) const;

 private:
  SpinGroup group_{};
  std::vector<std::string> vars_;
  std::vector<Weight> diag_;
  lambda2::FormIndexSet fixed_;
};

enum class Representation { Pi, Rho, Rho4_1, Rho4_2, Rho6 };

Representation representation_from_name(const std::string& name);
std::string to_string(Representation r);

enum class RepresentationKind { Real, Quaternionic, Complex };
std::string to_string(RepresentationKind k);

struct WeightSystem {
  RepresentationKind kind = RepresentationKind::Real;
  /// Real and quaternionic: one weight per +-pair. Complex: every weight.
  std::vector<Weight> weights;
  std::size_t zero_count = 0;
  /// Real case: coordinates (in the omega-complement basis) of an
  /// eigenvector for each entry of weights.
  std::vector<ExactMatrix> eigenvectors;
  /// Real case without zero weights: +1 if the basis
  /// (Re a_1, -Im a_1, Re a_2, -Im a_2, ...) is positively oriented against
  /// the omega-complement basis, -1 otherwise. 0 when undefined.
  int orientation = 0;

  /// Per-pair orientation suitable for euler_top.
  std::vector<int> pair_orientation() const;
};

/// Weights of a representation of the torus's group. Pi goes through the
/// induced action on the omega complement and reads off weight spaces.
WeightSystem weights_of_action(const TorusModel& torus, Representation rep);

/// prod (1 + w^2).
GradedPoly pontrjagin_total(const std::vector<Weight>& weights, int truncation_degree,
                            std::vector<std::string> variables = {});
/// prod (1 + w).
GradedPoly chern_total(const std::vector<Weight>& weights, int truncation_degree,
                       std::vector<std::string> variables = {});
/// prod (1 + w^2) over quaternionic weights.
GradedPoly sp_total(const std::vector<Weight>& weights, int truncation_degree,
                    std::vector<std::string> variables = {});
/// prod s_i w_i. Empty orientation means all +1. Throws on a zero weight.
GradedPoly euler_top(const std::vector<Weight>& weights, const std::vector<int>& orientation = {},
                     std::vector<std::string> variables = {});

/// Cohomological degree cap used by the lemma checks.
inline constexpr int kLemmaTruncation = 8;

struct IdentityCheck {
  std::string name;
  GradedPoly lhs;
  GradedPoly rhs;
  bool holds = false;
  /// Sign s with lhs == s * rhs; 0 if neither sign works.
  int sign = 0;
  /// Whether the identity is only claimed up to sign.
  bool up_to_sign = false;
};

struct LemmaOptions {
  /// Replace the derived Spin6 pi weights by the printed list with the
  /// repeated entry.
  bool use_printed_spin6_weights = false;
};

/// The printed Spin6 pi weight list, with -x2-x3 repeated.
std::vector<Weight> printed_spin6_pi_weights();

struct LemmaReport {
  int n = 0;
  std::vector<std::string> variables;
  WeightSystem pi;
  /// Label and quaternionic or complex weights of each rho-type representation.
  std::vector<std::pair<std::string, WeightSystem>> rho;
  std::vector<IdentityCheck> checks;
  std::vector<std::string> notes;

  bool passed() const;
};

/// Characteristic-class identities between pi_n and rho-type bundles, n in 3..6.
LemmaReport verify_lemma_cohomo(int n, const LemmaOptions& options = {});

}  // namespace spinclass::charclass

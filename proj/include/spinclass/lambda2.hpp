#pragma once

#include <array>
#include <string>
#include <vector>

#include "spinclass/exact.hpp"

namespace spinclass::lambda2 {

using exact::ExactMatrix;
using exact::GaussianRational;
using exact::Rational;

/// Index pair (i, j), 1 <= i < j <= 4, of the wedge basis e_i ^ e_j.
struct WedgePair {
  int i;
  int j;
};

/// Wedge basis order used for coordinates: 12, 13, 14, 23, 24, 34.
inline constexpr std::array<WedgePair, 6> kWedgeBasis = {{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};

/// Element of Lambda^2(C^4) in the e_i ^ e_j basis (no 1/2 factors).
class TwoForm {
 public:
  TwoForm() = default;
  explicit TwoForm(std::array<GaussianRational, 6> coeffs) : coeffs_(std::move(coeffs)) {}

  /// Coefficient of e_i ^ e_j; antisymmetric in (i, j).
  GaussianRational coefficient(int i, int j) const;
  const std::array<GaussianRational, 6>& coefficients() const { return coeffs_; }

  TwoForm conj() const;
  bool is_zero() const;

  TwoForm& operator+=(const TwoForm& o);
  TwoForm& operator-=(const TwoForm& o);
  TwoForm& operator*=(const GaussianRational& s);
  friend TwoForm operator+(TwoForm a, const TwoForm& b) { return a += b; }
  friend TwoForm operator-(TwoForm a, const TwoForm& b) { return a -= b; }
  friend TwoForm operator*(const GaussianRational& s, TwoForm a) { return a *= s; }
  TwoForm operator-() const;
  friend bool operator==(const TwoForm& a, const TwoForm& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const TwoForm& a, const TwoForm& b) { return !(a == b); }

  std::string to_string() const;

 private:
  std::array<GaussianRational, 6> coeffs_{};
};

/// Wedge basis element e_i ^ e_j (any order; sign follows antisymmetry).
TwoForm wedge(int i, int j);

/// Antisymmetric 4x4 matrix M with form = sum_{i<j} M(i,j) e_i ^ e_j.
class FormMatrix {
 public:
  explicit FormMatrix(ExactMatrix m);
  explicit FormMatrix(const TwoForm& f);

  const ExactMatrix& matrix() const { return m_; }
  TwoForm form() const;

 private:
  ExactMatrix m_;
};

/// omega_1 ... omega_6, index 0 holds omega_1.
const std::vector<TwoForm>& omega_basis();
const TwoForm& omega(int index);
const FormMatrix& omega_matrix(int index);

/// Complex-linear Hodge star for the orthonormal basis e_1..e_4 with
/// e_1 ^ e_2 ^ e_3 ^ e_4 positive.
TwoForm hodge_star(const TwoForm& f);

/// f = -*(conj f).
bool antiselfdual_check(const TwoForm& f);

/// Hermitian metric on Lambda^2, normalized so that {omega_i} is orthonormal:
/// <a, b> = 1/2 * sum a_ij conj(b_ij).
GaussianRational inner_product(const TwoForm& a, const TwoForm& b);

/// Action of GL(4, C): u . (v ^ w) = uv ^ uw, i.e. M -> u M u^T.
TwoForm act(const ExactMatrix& u, const TwoForm& f);

/// Sorted subset of {1..6}; throws std::invalid_argument on bad input.
using FormIndexSet = std::vector<int>;
FormIndexSet make_index_set(std::vector<int> indices);
FormIndexSet complement(const FormIndexSet& set);
std::string to_string(const FormIndexSet& set);

/// M_i u M_i^{-1} == conj(u).
bool star_condition(const ExactMatrix& u, int index);
/// u^T M_i u == M_i.
bool bilinear_condition(const ExactMatrix& u, int index);

struct StabilizerSpec {
  FormIndexSet fixed_set;
  /// Real basis of the solution space of the star condition over all fixed indices.
  std::vector<ExactMatrix> solution_basis;

  std::size_t real_dimension() const { return solution_basis.size(); }
};

StabilizerSpec stabilizer_space(const FormIndexSet& fixed);

/// Coordinates (Re, Im per entry, row-major) of a 4x4 complex matrix in R^32.
std::vector<Rational> realify(const ExactMatrix& m);

/// Real rank of a family of complex matrices of a common shape.
std::size_t real_rank(const std::vector<ExactMatrix>& family);

enum class BlockPattern { Spin2, Spin3, Spin4, Spin5, SO2 };

BlockPattern pattern_from_name(const std::string& name);
std::string to_string(BlockPattern p);
/// Real basis of the block template (one matrix per real parameter).
std::vector<ExactMatrix> pattern_basis(BlockPattern p);
/// Fixed set whose stabilizer the template describes.
FormIndexSet pattern_fixed_set(BlockPattern p);

/// Span equality of the solution space and the template, checked by ranks
/// in both directions.
bool pattern_match(const StabilizerSpec& spec, BlockPattern pattern);

/// Quaternion-type block [[z, -conj w], [w, conj z]].
ExactMatrix quaternion_block(const GaussianRational& z, const GaussianRational& w);
/// diag(q, q) with q the quaternion-type block.
ExactMatrix spin3_element(const GaussianRational& z, const GaussianRational& w);
/// [[a, 0, -b, 0], [0, a, 0, -b], [b, 0, a, 0], [0, b, 0, a]].
ExactMatrix so2_element(const Rational& a, const Rational& b);

class SpanError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Matrix of u acting on span{omega_j : j not in fixed}, in increasing j order.
ExactMatrix induced_orthogonal_action(const ExactMatrix& u, const FormIndexSet& fixed);

bool is_special_orthogonal(const ExactMatrix& r);

/// Exact unitary element of the stabilizer via the Cayley transform of a
/// random skew-Hermitian member of the solution space.
ExactMatrix sample_stabilizer_element(const StabilizerSpec& spec, exact::ExactSampler& sampler);
/// Rational point (z, w) on |z|^2 + |w|^2 = 1 by inverse stereographic projection.
ExactMatrix sample_spin3(exact::ExactSampler& sampler);
ExactMatrix sample_so2(exact::ExactSampler& sampler);

/// Order of omega_2..omega_6 in the block decomposition (3-dim factor, 2-dim factor).
inline constexpr std::array<int, 5> kTensorBlockOrder = {3, 4, 5, 2, 6};

struct KroneckerLiftReport {
  ExactMatrix lift;
  bool lift_is_product = false;      // lift == r_so2 * u_sp1
  bool lift_unitary = false;
  bool lift_in_stabilizer = false;   // star condition for omega_1
  bool lift_matches_spin5 = false;   // lift lies in the Spin5 template span
  ExactMatrix lift_action;           // 5x5 on omega_2..omega_6
  ExactMatrix spin3_action;          // 3x3 on omega_3, omega_4, omega_5
  ExactMatrix so2_action;            // 2x2 on omega_2, omega_6
  std::array<int, 5> block_order = kTensorBlockOrder;
  bool diagram_commutes = false;

  bool passed() const {
    return lift_is_product && lift_unitary && lift_in_stabilizer && lift_matches_spin5 && diagram_commutes;
  }
};

/// Checks that the Kronecker product of the 2x2 generator data lands in the
/// omega_1 stabilizer and that its induced action is the block join of the
/// factors' actions up to kTensorBlockOrder.
KroneckerLiftReport kronecker_lift_check(const ExactMatrix& u_sp1, const ExactMatrix& r_so2);

}  // namespace spinclass::lambda2

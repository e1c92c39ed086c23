#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace spinclass::ktheory {

/// a0 + a1 x + a2 x^2 + a3 x^3 in H*(CP^3; Z) = Z[x]/(x^4), deg x = 2.
class CohCP3 {
 public:
  CohCP3() = default;
  CohCP3(long a0, long a1, long a2, long a3) : a_{a0, a1, a2, a3} {}

  static CohCP3 x_power(int k, long coeff = 1);

  long coefficient(int k) const;
  const std::array<long, 4>& coefficients() const { return a_; }
  /// Nonzero coefficients only in the given power of x.
  bool is_homogeneous_of(int k) const;

  CohCP3& operator+=(const CohCP3& o);
  CohCP3& operator-=(const CohCP3& o);
  friend CohCP3 operator+(CohCP3 a, const CohCP3& b) { return a += b; }
  friend CohCP3 operator-(CohCP3 a, const CohCP3& b) { return a -= b; }
  friend CohCP3 operator*(const CohCP3& a, const CohCP3& b);
  friend CohCP3 operator*(long c, CohCP3 a);
  CohCP3 operator-() const { return -1 * *this; }
  friend bool operator==(const CohCP3& a, const CohCP3& b) { return a.a_ == b.a_; }
  friend bool operator!=(const CohCP3& a, const CohCP3& b) { return !(a == b); }

  std::string to_string() const;

 private:
  std::array<long, 4> a_{0, 0, 0, 0};
};

/// Element (free, torsion) of KSP~(CP^3) = Z + Z/2.
class KSPClass {
 public:
  KSPClass() = default;
  KSPClass(long free_part, int torsion);

  long free_part() const { return free_; }
  int torsion() const { return torsion_; }

  KSPClass& operator+=(const KSPClass& o);
  friend KSPClass operator+(KSPClass a, const KSPClass& b) { return a += b; }
  friend KSPClass operator-(KSPClass a, const KSPClass& b) { return a += -b; }
  KSPClass operator-() const { return {-free_, torsion_}; }
  friend KSPClass operator*(long c, const KSPClass& k);
  friend bool operator==(const KSPClass& a, const KSPClass& b) {
    return a.free_ == b.free_ && a.torsion_ == b.torsion_;
  }
  friend bool operator!=(const KSPClass& a, const KSPClass& b) { return !(a == b); }

  std::string to_string() const;

 private:
  long free_ = 0;
  int torsion_ = 0;
};

struct KSPPair {
  KSPClass first;
  KSPClass second;
  friend bool operator==(const KSPPair& a, const KSPPair& b) { return a.first == b.first && a.second == b.second; }
  std::string to_string() const;
};

/// Element of KO~(CP^3) = Z, identified with p1 / x^2.
struct KOClass {
  long free_part = 0;
  friend bool operator==(const KOClass& a, const KOClass& b) { return a.free_part == b.free_part; }
  std::string to_string() const;
};

/// Element of K~(CP^3) recorded by its total Chern class 1 + c1 x + c2 x^2 + c3 x^3.
class KClass {
 public:
  /// Throws std::invalid_argument if c3 is odd.
  KClass(long c1, long c2, long c3);
  long c1() const { return c1_; }
  long c2() const { return c2_; }
  long c3() const { return c3_; }
  friend bool operator==(const KClass& a, const KClass& b) {
    return a.c1_ == b.c1_ && a.c2_ == b.c2_ && a.c3_ == b.c3_;
  }
  std::string to_string() const;

 private:
  long c1_, c2_, c3_;
};

/// Canonical projection to Z (sign fixed to +).
long sp1_of_ksp(const KSPClass& k);
/// Free part even and torsion zero.
bool divisible_by_two(const KSPClass& k);
/// Some j with j + j == k, if one exists.
std::optional<KSPClass> half(const KSPClass& k);
/// Whether 1 + c1 + c2 + c3 lies in the image of the total Chern class.
bool chern_image_member(long c1, long c2, long c3);

enum class RhoGroup { KO, K, KSP, KSPPair, KOPair };
std::string to_string(RhoGroup g);
/// Group receiving the rho-invariant of a Spin(n)-bundle, by n mod 8.
RhoGroup rho_group_for_rank(int n);

using RhoClass = std::variant<KSPClass, KSPPair, KOClass, KClass>;
std::string to_string(const RhoClass& r);

struct BundleDescriptor {
  std::string name;
  int rank = 0;
  /// Degree-4 class.
  CohCP3 p1;
  int w2 = 0;
  /// Top class for even rank, when an orientation is chosen.
  std::optional<CohCP3> euler;
  std::optional<RhoClass> rho;

  /// Throws std::invalid_argument describing the first violated invariant.
  void validate() const;
};

/// p1(a) + p1(b).
CohCP3 whitney_p1(const BundleDescriptor& a, const BundleDescriptor& b);
/// w2(a) + w2(b) mod 2.
int whitney_w2(const BundleDescriptor& a, const BundleDescriptor& b);
/// Trivial real bundle of the given rank.
BundleDescriptor trivial_bundle(int rank);
/// Rank, p1 and w2 of a direct sum; rho and Euler are left unset.
BundleDescriptor direct_sum(const BundleDescriptor& a, const BundleDescriptor& b, std::string name = "");

/// Realized sign of e against the sp1 / c3 side in the 4x4 models.
inline constexpr int kSpin4EulerSign = 1;
inline constexpr int kSpin6EulerSign = -1;

class ParityError : public std::invalid_argument {
 public:
  ParityError(std::string condition, const std::string& detail)
      : std::invalid_argument(detail), condition_(std::move(condition)) {}
  const std::string& condition() const { return condition_; }

 private:
  std::string condition_;
};

struct ClassificationCertificate {
  int rank = 0;
  std::string group;
  std::string relation;
  long p1_coeff = 0;
  std::optional<long> euler_coeff;
  /// p1 = multiplier * k (for rank 2: p1 = 4 k^2).
  long multiplier = 0;
  long k = 0;
  std::optional<long> l;
  std::vector<std::string> constraints;
  /// Group elements with the requested characteristic data.
  std::vector<std::string> fiber;
  std::size_t spin_structures = 1;
  std::size_t count = 0;
  /// Half-width of the enumerated window of group elements.
  long window = 0;
  std::vector<std::string> notes;
};

/// Spin(n)-bundles over CP^3 with p1 = p1_coeff x^2 (and Euler class
/// euler_coeff x^2 for n = 4, euler_coeff x^3 for n = 6). Throws ParityError
/// when the data violate the constraint for n, std::invalid_argument for
/// malformed input.
ClassificationCertificate classify_spin_bundles(int n, long p1_coeff, std::optional<long> euler_coeff = std::nullopt);

}  // namespace spinclass::ktheory

#include "spinclass/ktheory.hpp"

#include <cstdlib>
#include <sstream>

namespace spinclass::ktheory {

// ---------------------------------------------------------------------------
// CohCP3

CohCP3 CohCP3::x_power(int k, long coeff) {
  if (k < 0 || k > 3) throw std::invalid_argument("x^" + std::to_string(k) + " is outside H*(CP^3)");
  CohCP3 c;
  c.a_[static_cast<std::size_t>(k)] = coeff;
  return c;
}

long CohCP3::coefficient(int k) const {
  if (k < 0 || k > 3) return 0;
  return a_[static_cast<std::size_t>(k)];
}

bool CohCP3::is_homogeneous_of(int k) const {
  for (int j = 0; j < 4; ++j)
    if (j != k && a_[static_cast<std::size_t>(j)] != 0) return false;
  return true;
}

CohCP3& CohCP3::operator+=(const CohCP3& o) {
  for (std::size_t k = 0; k < 4; ++k) a_[k] += o.a_[k];
  return *this;
}

CohCP3& CohCP3::operator-=(const CohCP3& o) {
  for (std::size_t k = 0; k < 4; ++k) a_[k] -= o.a_[k];
  return *this;
}

CohCP3 operator*(const CohCP3& a, const CohCP3& b) {
  CohCP3 out;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; i + j < 4; ++j) out.a_[i + j] += a.a_[i] * b.a_[j];
  return out;
}

CohCP3 operator*(long c, CohCP3 a) {
  for (auto& v : a.a_) v *= c;
  return a;
}

std::string CohCP3::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < 4; ++k) {
    const long c = a_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const long m = std::labs(c);
    if (k == 0 || m != 1) os << m;
    if (k >= 1) os << "x";
    if (k >= 2) os << "^" << k;
  }
  return first ? "0" : os.str();
}

// ---------------------------------------------------------------------------
// K-groups

KSPClass::KSPClass(long free_part, int torsion) : free_(free_part), torsion_(((torsion % 2) + 2) % 2) {}

KSPClass& KSPClass::operator+=(const KSPClass& o) {
  free_ += o.free_;
  torsion_ = (torsion_ + o.torsion_) % 2;
  return *this;
}

KSPClass operator*(long c, const KSPClass& k) {
  return {c * k.free_, static_cast<int>(((c % 2) + 2) % 2) * k.torsion_};
}

std::string KSPClass::to_string() const { return "(" + std::to_string(free_) + "," + std::to_string(torsion_) + ")"; }

std::string KSPPair::to_string() const { return first.to_string() + " + " + second.to_string(); }

std::string KOClass::to_string() const { return std::to_string(free_part); }

KClass::KClass(long c1, long c2, long c3) : c1_(c1), c2_(c2), c3_(c3) {
  if (!chern_image_member(c1, c2, c3))
    throw std::invalid_argument("c3 = " + std::to_string(c3) + " is odd; not a total Chern class of a K-class");
}

std::string KClass::to_string() const {
  return "c = " + CohCP3(1, c1_, c2_, c3_).to_string();
}

long sp1_of_ksp(const KSPClass& k) { return k.free_part(); }

bool divisible_by_two(const KSPClass& k) { return k.free_part() % 2 == 0 && k.torsion() == 0; }

std::optional<KSPClass> half(const KSPClass& k) {
  if (!divisible_by_two(k)) return std::nullopt;
  return KSPClass(k.free_part() / 2, 0);
}

bool chern_image_member(long, long, long c3) { return c3 % 2 == 0; }

std::string to_string(RhoGroup g) {
  switch (g) {
    case RhoGroup::KO: return "KO~(CP3)";
    case RhoGroup::K: return "K~(CP3)";
    case RhoGroup::KSP: return "KSP~(CP3)";
    case RhoGroup::KSPPair: return "KSP~(CP3) + KSP~(CP3)";
    case RhoGroup::KOPair: return "KO~(CP3) + KO~(CP3)";
  }
  return "?";
}

RhoGroup rho_group_for_rank(int n) {
  if (n < 1) throw std::invalid_argument("rank must be positive, got " + std::to_string(n));
  switch (n % 8) {
    case 1: case 7: return RhoGroup::KO;
    case 2: case 6: return RhoGroup::K;
    case 3: case 5: return RhoGroup::KSP;
    case 4: return RhoGroup::KSPPair;
    default: return RhoGroup::KOPair;
  }
}

std::string to_string(const RhoClass& r) {
  return std::visit([](const auto& v) { return v.to_string(); }, r);
}

namespace {

RhoGroup group_of(const RhoClass& r) {
  if (std::holds_alternative<KSPClass>(r)) return RhoGroup::KSP;
  if (std::holds_alternative<KSPPair>(r)) return RhoGroup::KSPPair;
  if (std::holds_alternative<KOClass>(r)) return RhoGroup::KO;
  return RhoGroup::K;
}

}  // namespace

void BundleDescriptor::validate() const {
  const std::string who = "bundle '" + name + "': ";
  if (rank < 1) throw std::invalid_argument(who + "rank must be positive");
  if (w2 != 0 && w2 != 1) throw std::invalid_argument(who + "w2 must be 0 or 1");
  if (!p1.is_homogeneous_of(2)) throw std::invalid_argument(who + "p1 must be a multiple of x^2");
  if (euler) {
    if (rank % 2 != 0) throw std::invalid_argument(who + "Euler class given for odd rank");
    if (rank > 6 || !euler->is_homogeneous_of(rank / 2))
      throw std::invalid_argument(who + "Euler class must be a multiple of x^" + std::to_string(rank / 2));
  }
  if (rho) {
    const RhoGroup want = rho_group_for_rank(rank);
    const RhoGroup have = group_of(*rho);
    if (want != have && !(want == RhoGroup::KOPair && have == RhoGroup::KO))
      throw std::invalid_argument(who + "rho lies in " + to_string(have) + " but rank " + std::to_string(rank) +
                                  " needs " + to_string(want));
  }
}

CohCP3 whitney_p1(const BundleDescriptor& a, const BundleDescriptor& b) { return a.p1 + b.p1; }

int whitney_w2(const BundleDescriptor& a, const BundleDescriptor& b) { return (a.w2 + b.w2) % 2; }

BundleDescriptor trivial_bundle(int rank) {
  BundleDescriptor d;
  d.name = std::to_string(rank);
  d.rank = rank;
  if (rank % 2 == 0 && rank <= 6) d.euler = CohCP3{};
  switch (rho_group_for_rank(rank)) {
    case RhoGroup::KSP: d.rho = KSPClass(0, 0); break;
    case RhoGroup::KSPPair: d.rho = KSPPair{}; break;
    case RhoGroup::K: d.rho = KClass(0, 0, 0); break;
    case RhoGroup::KO:
    case RhoGroup::KOPair: d.rho = KOClass{0}; break;
  }
  return d;
}

BundleDescriptor direct_sum(const BundleDescriptor& a, const BundleDescriptor& b, std::string name) {
  BundleDescriptor d;
  d.name = name.empty() ? a.name + "+" + b.name : std::move(name);
  d.rank = a.rank + b.rank;
  d.p1 = whitney_p1(a, b);
  d.w2 = whitney_w2(a, b);
  return d;
}

// ---------------------------------------------------------------------------
// Classification

namespace {

void require(bool ok, const std::string& condition, const std::string& detail) {
  if (!ok) throw ParityError(condition, detail);
}

long floor_sqrt(long v) {
  long r = 0;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

}  // namespace

ClassificationCertificate classify_spin_bundles(int n, long p1, std::optional<long> euler) {
  if (n < 2) throw std::invalid_argument("rank must be at least 2, got " + std::to_string(n));
  if (euler && n != 4 && n != 6)
    throw std::invalid_argument("an Euler class input applies only to ranks 4 and 6");
  if (!euler && (n == 4 || n == 6))
    throw std::invalid_argument("rank " + std::to_string(n) + " needs an Euler class input");

  ClassificationCertificate cert;
  cert.rank = n;
  cert.p1_coeff = p1;
  cert.euler_coeff = euler;
  cert.window = std::labs(p1) + (euler ? std::labs(*euler) : 0) + 2;
  const long W = cert.window;
  const std::string p1s = std::to_string(p1);

  if (n == 2) {
    cert.group = "H^2(CP3; Z) = Z (Spin2 = U(1) bundles by c1)";
    cert.relation = "e = 2 c1, p1 = e^2";
    cert.multiplier = 4;
    require(p1 % 4 == 0 && p1 >= 0, "p1 = 4k^2", "p1 = " + p1s + " is not of the form 4k^2");
    const long sq = p1 / 4, k = floor_sqrt(sq);
    require(k * k == sq, "p1 = 4k^2", "p1 / 4 = " + std::to_string(sq) + " is not a perfect square");
    cert.k = k;
    cert.constraints.push_back("p1 = 4k^2 with k = " + std::to_string(k));
    for (long m = -W; m <= W; ++m)
      if (4 * m * m == p1) cert.fiber.push_back("c1 = " + std::to_string(m) + " (e = " + std::to_string(2 * m) + "x)");
    cert.notes.push_back("Euler classes 2m x with m^2 = k^2; m = k and m = -k coincide when k = 0");
  } else if (n == 3 || n == 5) {
    cert.group = to_string(RhoGroup::KSP) + " = Z + Z/2";
    cert.multiplier = n == 3 ? 4 : 2;
    cert.relation = "p1 = " + std::to_string(cert.multiplier) + " sp1";
    require(p1 % cert.multiplier == 0, "p1 = " + std::to_string(cert.multiplier) + "k",
            "p1 = " + p1s + " is not divisible by " + std::to_string(cert.multiplier));
    cert.k = p1 / cert.multiplier;
    cert.constraints.push_back("p1 divisible by " + std::to_string(cert.multiplier));
    for (long a = -W; a <= W; ++a)
      for (int t = 0; t < 2; ++t)
        if (cert.multiplier * sp1_of_ksp(KSPClass(a, t)) == p1) cert.fiber.push_back(KSPClass(a, t).to_string());
  } else if (n == 4) {
    cert.group = to_string(RhoGroup::KSPPair) + " = (Z + Z/2)^2";
    cert.relation = "p1 = 2 sp1' + 2 sp1'', e = sp1' - sp1''";
    cert.multiplier = 2;
    require(p1 % 2 == 0, "p1 = 2k", "p1 = " + p1s + " is odd");
    cert.k = p1 / 2;
    cert.l = *euler;
    require((cert.k - *euler) % 2 == 0, "p1/2 = e mod 2",
            "p1/2 = " + std::to_string(cert.k) + " and e = " + std::to_string(*euler) + " differ in parity");
    cert.constraints.push_back("p1 even");
    cert.constraints.push_back("p1/2 = e mod 2");
    for (long a = -W; a <= W; ++a)
      for (long b = -W; b <= W; ++b) {
        if (2 * a + 2 * b != p1 || kSpin4EulerSign * (a - b) != *euler) continue;
        for (int t = 0; t < 2; ++t)
          for (int s = 0; s < 2; ++s) cert.fiber.push_back(KSPPair{KSPClass(a, t), KSPClass(b, s)}.to_string());
      }
  } else if (n == 6) {
    cert.group = to_string(RhoGroup::K) + ", image of [CP3, BSU] (c1 = 0)";
    cert.relation = "p1 = -2 c2, e = " + std::string(kSpin6EulerSign < 0 ? "-" : "") + "c3";
    cert.multiplier = 2;
    require(p1 % 2 == 0, "p1 = 2k", "p1 = " + p1s + " is odd");
    require(*euler % 2 == 0, "e = 2l", "e = " + std::to_string(*euler) + " is odd");
    cert.k = p1 / 2;
    cert.l = *euler / 2;
    cert.constraints.push_back("p1 even");
    cert.constraints.push_back("e even");
    cert.constraints.push_back("c1 = 0");
    for (long c2 = -W; c2 <= W; ++c2)
      for (long c3 = -W; c3 <= W; ++c3) {
        if (!chern_image_member(0, c2, c3)) continue;
        if (-2 * c2 == p1 && kSpin6EulerSign * c3 == *euler) cert.fiber.push_back(KClass(0, c2, c3).to_string());
      }
  } else {
    cert.group = to_string(RhoGroup::KO) + " = Z (stable range)";
    cert.relation = "KO~ -> H^4 by p1 is an isomorphism; spin iff p1 even";
    cert.multiplier = 2;
    require(p1 % 2 == 0, "p1 = 2k", "p1 = " + p1s + " is odd, so w2 != 0");
    cert.k = p1 / 2;
    cert.constraints.push_back("p1 even");
    for (long a = -W; a <= W; ++a)
      if (KOClass{a}.free_part == p1) cert.fiber.push_back(KOClass{a}.to_string());
  }
  cert.spin_structures = 1;
  cert.count = cert.fiber.size() * cert.spin_structures;
  return cert;
}

}  // namespace spinclass::ktheory

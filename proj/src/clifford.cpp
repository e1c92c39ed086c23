#include "spinclass/clifford.hpp"

#include <array>
#include <bit>
#include <stdexcept>

namespace spinclass::clifford {

namespace {

void check_dimension(int n) {
  if (n < 0 || n > kMaxGenerators) throw std::invalid_argument("Clifford dimension out of range: " + std::to_string(n));
}

Blade full_mask(int n) { return n == 0 ? 0u : (n >= 32 ? ~0u : ((1u << n) - 1u)); }

}  // namespace

int grade(Blade b) { return std::popcount(b); }

std::string blade_name(Blade b) {
  if (b == 0) return "1";
  std::string out;
  for (int k = 1; b != 0; ++k, b >>= 1)
    if (b & 1u) out += "e" + std::to_string(k);
  return out;
}

// Merge e_I e_J into sorted order: every index of J jumps over the indices of
// I larger than it, one transposition each. Shared indices then collapse in
// pairs, each contributing e_k^2 = -1.
int blade_product_sign(Blade lhs, Blade rhs) {
  int swaps = 0;
  for (Blade r = rhs; r != 0; r &= r - 1) {
    Blade lowest = r & (~r + 1);
    Blade above = ~((lowest << 1) - 1);
    swaps += std::popcount(lhs & above);
  }
  swaps += std::popcount(lhs & rhs);
  return (swaps % 2 == 0) ? 1 : -1;
}

// ---------------------------------------------------------------------------

CliffordElement::CliffordElement(int n) : n_(n) { check_dimension(n); }

CliffordElement::CliffordElement(int n, Blade blade, Rational coeff) : n_(n) {
  check_dimension(n);
  if ((blade & ~full_mask(n)) != 0) throw std::invalid_argument("blade " + blade_name(blade) + " outside Cl_" + std::to_string(n));
  add_term(blade, coeff);
}

CliffordElement CliffordElement::scalar(int n, const Rational& value) { return {n, 0u, value}; }

CliffordElement CliffordElement::generator(int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("generator e" + std::to_string(k) + " outside Cl_" + std::to_string(n));
  return {n, Blade{1u} << (k - 1)};
}

CliffordElement CliffordElement::blade(int n, const std::vector<int>& indices) {
  Blade mask = 0;
  int prev = 0;
  for (int k : indices) {
    if (k <= prev || k > n) throw std::invalid_argument("blade indices must be strictly increasing within 1..n");
    mask |= Blade{1u} << (k - 1);
    prev = k;
  }
  return {n, mask};
}

Rational CliffordElement::coefficient(Blade b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? Rational(0) : it->second;
}

void CliffordElement::add_term(Blade b, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

CliffordElement& CliffordElement::operator+=(const CliffordElement& o) {
  if (o.n_ != n_) throw std::invalid_argument("adding elements of Cl_" + std::to_string(n_) + " and Cl_" + std::to_string(o.n_));
  for (const auto& [b, c] : o.terms_) add_term(b, c);
  return *this;
}

CliffordElement& CliffordElement::operator-=(const CliffordElement& o) {
  if (o.n_ != n_) throw std::invalid_argument("subtracting elements of Cl_" + std::to_string(o.n_) + " from Cl_" + std::to_string(n_));
  for (const auto& [b, c] : o.terms_) add_term(b, -c);
  return *this;
}

CliffordElement& CliffordElement::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [b, c] : terms_) c *= s;
  return *this;
}

std::string CliffordElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [b, c] : terms_) {
    bool negative = sgn(c) < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (first) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    if (b == 0) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += blade_name(b);
    }
    first = false;
  }
  return out;
}

CliffordElement cl_mul(const CliffordElement& a, const CliffordElement& b) {
  if (a.dimension() != b.dimension()) {
    throw std::invalid_argument("cl_mul: Cl_" + std::to_string(a.dimension()) + " vs Cl_" + std::to_string(b.dimension()));
  }
  CliffordElement out(a.dimension());
  for (const auto& [ba, ca] : a.terms()) {
    for (const auto& [bb, cb] : b.terms()) {
      Rational c = ca * cb;
      if (blade_product_sign(ba, bb) < 0) c = -c;
      out += CliffordElement(a.dimension(), ba ^ bb, c);
    }
  }
  return out;
}

CliffordElement operator*(const CliffordElement& a, const CliffordElement& b) { return cl_mul(a, b); }

CliffordElement even_part(const CliffordElement& a) {
  CliffordElement out(a.dimension());
  for (const auto& [b, c] : a.terms())
    if (grade(b) % 2 == 0) out += CliffordElement(a.dimension(), b, c);
  return out;
}

CliffordElement even_iso(const CliffordElement& a) {
  const int n = a.dimension() + 1;
  check_dimension(n);
  const auto en = CliffordElement::generator(n, n);
  CliffordElement out(n);
  for (const auto& [b, c] : a.terms()) {
    CliffordElement image = CliffordElement::scalar(n, c);
    for (int k = 1; k < n; ++k)
      if (b & (Blade{1u} << (k - 1))) image = image * (CliffordElement::generator(n, k) * en);
    out += image;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Irreducible representations

std::string to_string(FieldType f) {
  switch (f) {
    case FieldType::Real: return "real";
    case FieldType::Complex: return "complex";
    case FieldType::Quaternionic: return "quaternionic";
  }
  return "?";
}

int real_dimension(FieldType f) {
  switch (f) {
    case FieldType::Real: return 1;
    case FieldType::Complex: return 2;
    case FieldType::Quaternionic: return 4;
  }
  return 0;
}

namespace {

// Irreducible module dimensions over the field for n = 1..8, as produced by
// decompose_structure (checked against it in the test suite).
constexpr std::array<long, 9> kBaseModuleDimension = {0, 1, 1, 1, 2, 4, 8, 8, 16};

}  // namespace

IrrepInfo irrep_table(int n) {
  if (n <= 0) throw std::invalid_argument("irrep_table: n must be positive, got " + std::to_string(n));
  IrrepInfo info;
  info.n = n;
  info.count = (n % 4 == 3) ? 2 : 1;
  switch (n % 8) {
    case 1:
    case 5: info.field = FieldType::Complex; break;
    case 2:
    case 3:
    case 4: info.field = FieldType::Quaternionic; break;
    default: info.field = FieldType::Real; break;
  }
  // Cl_{n+8} = Cl_n (x) M_16(R)
  int base = (n - 1) % 8 + 1;
  long dim = kBaseModuleDimension[static_cast<std::size_t>(base)];
  for (int periods = (n - 1) / 8; periods > 0; --periods) {
    if (dim > (1L << 58)) throw std::overflow_error("irrep_table: module dimension overflows for n = " + std::to_string(n));
    dim *= 16;
  }
  info.dimension_over_field = dim;
  return info;
}

std::pair<long, long> signature(const std::vector<std::vector<Rational>>& symmetric) {
  auto a = symmetric;
  const std::size_t n = a.size();
  long pos = 0;
  long neg = 0;
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pivot = n;
    for (std::size_t k = 0; k < n && pivot == n; ++k)
      if (!done[k] && sgn(a[k][k]) != 0) pivot = k;
    if (pivot == n) {
      // All remaining diagonal entries vanish: fold an off-diagonal entry
      // into the diagonal with the congruence row_k += row_j, col_k += col_j.
      std::size_t k = n, j = n;
      for (std::size_t r = 0; r < n && k == n; ++r) {
        if (done[r]) continue;
        for (std::size_t c = 0; c < n; ++c)
          if (!done[c] && c != r && sgn(a[r][c]) != 0) {
            k = r;
            j = c;
            break;
          }
      }
      if (k == n) break;  // remaining block is zero
      for (std::size_t c = 0; c < n; ++c) a[k][c] += a[j][c];
      for (std::size_t r = 0; r < n; ++r) a[r][k] += a[r][j];
      pivot = k;
    }
    const Rational d = a[pivot][pivot];
    (sgn(d) > 0 ? pos : neg) += 1;
    done[pivot] = true;
    for (std::size_t r = 0; r < n; ++r) {
      if (done[r] || sgn(a[r][pivot]) == 0) continue;
      Rational f = a[r][pivot] / d;
      for (std::size_t c = 0; c < n; ++c) a[r][c] -= f * a[pivot][c];
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (done[r]) continue;
      a[r][pivot] = 0;
      a[pivot][r] = 0;
    }
  }
  return {pos, neg};
}

StructureDecomposition decompose_structure(int n) {
  if (n < 1 || n > 10) throw std::invalid_argument("decompose_structure supports 1 <= n <= 10");
  const Blade count = Blade{1u} << n;
  StructureDecomposition out;
  out.n = n;

  // Center: blades commuting with every generator (blades pairwise commute or
  // anticommute, so the center is spanned by blades).
  std::vector<Blade> central;
  for (Blade b = 0; b < count; ++b) {
    bool commutes = true;
    for (int k = 0; k < n && commutes; ++k) {
      Blade g = Blade{1u} << k;
      commutes = blade_product_sign(b, g) == blade_product_sign(g, b);
    }
    if (commutes) central.push_back(b);
  }
  out.center_dimension = static_cast<int>(central.size());

  CliffordElement idempotent = CliffordElement::scalar(n, 1);
  if (central.size() == 2) {
    Blade z = central[1];
    out.pseudoscalar_square = blade_product_sign(z, z);
    if (out.pseudoscalar_square > 0) {
      out.simple_components = 2;
      idempotent = (CliffordElement::scalar(n, 1) + CliffordElement(n, z)) * Rational(1, 2);
    }
  } else if (central.size() != 1) {
    throw std::logic_error("unexpected center dimension " + std::to_string(central.size()));
  }

  // Basis of the component A * f: independent images e_I f.
  std::vector<CliffordElement> basis;
  {
    std::vector<CliffordElement> images;
    for (Blade b = 0; b < count; ++b) images.push_back(CliffordElement(n, b) * idempotent);
    exact::ExactMatrix coords(count, images.size());
    for (std::size_t j = 0; j < images.size(); ++j)
      for (const auto& [b, c] : images[j].terms()) coords(b, j) = c;
    for (auto col : exact::row_reduce(coords).pivot_columns) basis.push_back(images[col]);
  }
  out.component_dimension = static_cast<long>(basis.size());

  // Trace form t(a, b) = Tr(L_{ab}) = 2^n * scalar part of ab; left
  // multiplication by an element of one component kills the others.
  std::vector<std::vector<Rational>> gram(basis.size(), std::vector<Rational>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j) {
      Rational t = (basis[i] * basis[j]).coefficient(0) * Rational(count);
      gram[i][j] = t;
      gram[j][i] = t;
    }
  auto [p, q] = signature(gram);
  out.positive_index = p;
  out.negative_index = q;

  const long dim = out.component_dimension;
  auto exact_sqrt = [](long v) -> long {
    long r = 0;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r * r == v ? r : -1;
  };
  if (central.size() == 2 && out.pseudoscalar_square < 0) {
    out.field = FieldType::Complex;
    out.matrix_size = (dim % 2 == 0) ? exact_sqrt(dim / 2) : -1;
  } else if (p > q) {
    out.field = FieldType::Real;
    out.matrix_size = p - q;
    if (out.matrix_size * out.matrix_size != dim) out.matrix_size = -1;
  } else if (p < q) {
    out.field = FieldType::Quaternionic;
    out.matrix_size = (q - p) / 2;
    if (4 * out.matrix_size * out.matrix_size != dim) out.matrix_size = -1;
  } else {
    out.matrix_size = -1;
  }
  if (out.matrix_size <= 0) throw std::logic_error("inconsistent structure data for Cl_" + std::to_string(n));
  return out;
}

}  // namespace spinclass::clifford

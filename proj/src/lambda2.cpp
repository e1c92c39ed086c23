#include "spinclass/lambda2.hpp"

#include <algorithm>
#include <stdexcept>

namespace spinclass::lambda2 {

namespace {

int wedge_slot(int i, int j) {
  for (std::size_t k = 0; k < kWedgeBasis.size(); ++k)
    if (kWedgeBasis[k].i == i && kWedgeBasis[k].j == j) return static_cast<int>(k);
  throw std::invalid_argument("no wedge pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
}

const GaussianRational kI = GaussianRational::imaginary_unit();

void check_form_index(int index) {
  if (index < 1 || index > 6) throw std::invalid_argument("form index must be in 1..6, got " + std::to_string(index));
}

}  // namespace

// ---------------------------------------------------------------------------
// TwoForm

GaussianRational TwoForm::coefficient(int i, int j) const {
  if (i == j) return 0;
  if (i > j) return -coeffs_[static_cast<std::size_t>(wedge_slot(j, i))];
  return coeffs_[static_cast<std::size_t>(wedge_slot(i, j))];
}

TwoForm TwoForm::conj() const {
  TwoForm out = *this;
  for (auto& c : out.coeffs_) c = c.conj();
  return out;
}

bool TwoForm::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& c) { return c.is_zero(); });
}

TwoForm& TwoForm::operator+=(const TwoForm& o) {
  for (std::size_t k = 0; k < 6; ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

TwoForm& TwoForm::operator-=(const TwoForm& o) {
  for (std::size_t k = 0; k < 6; ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

TwoForm& TwoForm::operator*=(const GaussianRational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

TwoForm TwoForm::operator-() const {
  TwoForm out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::string TwoForm::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < 6; ++k) {
    if (coeffs_[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeffs_[k].to_string() + ")e" + std::to_string(kWedgeBasis[k].i) + "^e" + std::to_string(kWedgeBasis[k].j);
  }
  return out.empty() ? "0" : out;
}

TwoForm wedge(int i, int j) {
  if (i == j) return {};
  std::array<GaussianRational, 6> c{};
  if (i < j) {
    c[static_cast<std::size_t>(wedge_slot(i, j))] = 1;
  } else {
    c[static_cast<std::size_t>(wedge_slot(j, i))] = -1;
  }
  return TwoForm(c);
}

// ---------------------------------------------------------------------------
// FormMatrix

FormMatrix::FormMatrix(ExactMatrix m) : m_(std::move(m)) {
  if (m_.rows() != 4 || m_.cols() != 4) throw exact::DimensionError("form matrix must be 4x4, got " + m_.shape());
  if (m_.transpose() != -m_) throw std::invalid_argument("form matrix is not antisymmetric");
}

FormMatrix::FormMatrix(const TwoForm& f) : m_(4, 4) {
  for (const auto& [i, j] : kWedgeBasis) {
    m_(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = f.coefficient(i, j);
    m_(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(i - 1)) = -f.coefficient(i, j);
  }
}

TwoForm FormMatrix::form() const {
  std::array<GaussianRational, 6> c{};
  for (std::size_t k = 0; k < 6; ++k)
    c[k] = m_(static_cast<std::size_t>(kWedgeBasis[k].i - 1), static_cast<std::size_t>(kWedgeBasis[k].j - 1));
  return TwoForm(c);
}

// ---------------------------------------------------------------------------
// The omega basis of Lambda^-

const std::vector<TwoForm>& omega_basis() {
  static const std::vector<TwoForm> basis = [] {
    return std::vector<TwoForm>{
        kI * wedge(1, 2) + kI * wedge(3, 4),  // omega_1
        wedge(1, 2) - wedge(3, 4),            // omega_2
        kI * wedge(1, 3) - kI * wedge(2, 4),  // omega_3
        wedge(1, 3) + wedge(2, 4),            // omega_4
        kI * wedge(1, 4) + kI * wedge(2, 3),  // omega_5
        wedge(1, 4) - wedge(2, 3),            // omega_6
    };
  }();
  return basis;
}

const TwoForm& omega(int index) {
  check_form_index(index);
  return omega_basis()[static_cast<std::size_t>(index - 1)];
}

const FormMatrix& omega_matrix(int index) {
  static const std::vector<FormMatrix> matrices = [] {
    std::vector<FormMatrix> out;
    for (const auto& f : omega_basis()) out.emplace_back(f);
    return out;
  }();
  check_form_index(index);
  return matrices[static_cast<std::size_t>(index - 1)];
}

TwoForm hodge_star(const TwoForm& f) {
  // *(e_i ^ e_j) = e_k ^ e_l with (i, j, k, l) an even permutation of (1, 2, 3, 4).
  return f.coefficient(1, 2) * wedge(3, 4) + f.coefficient(1, 3) * wedge(4, 2) + f.coefficient(1, 4) * wedge(2, 3) +
         f.coefficient(2, 3) * wedge(1, 4) + f.coefficient(2, 4) * wedge(3, 1) + f.coefficient(3, 4) * wedge(1, 2);
}

bool antiselfdual_check(const TwoForm& f) { return f == -hodge_star(f.conj()); }

GaussianRational inner_product(const TwoForm& a, const TwoForm& b) {
  GaussianRational sum = 0;
  for (std::size_t k = 0; k < 6; ++k) sum += a.coefficients()[k] * b.coefficients()[k].conj();
  return sum * GaussianRational(Rational(1, 2));
}

TwoForm act(const ExactMatrix& u, const TwoForm& f) {
  if (u.rows() != 4 || u.cols() != 4) throw exact::DimensionError("GL(4) action needs a 4x4 matrix, got " + u.shape());
  return FormMatrix(u * FormMatrix(f).matrix() * u.transpose()).form();
}

// ---------------------------------------------------------------------------
// Index sets

FormIndexSet make_index_set(std::vector<int> indices) {
  for (int i : indices) check_form_index(i);
  std::sort(indices.begin(), indices.end());
  if (std::adjacent_find(indices.begin(), indices.end()) != indices.end()) {
    throw std::invalid_argument("repeated form index in " + to_string(indices));
  }
  return indices;
}

FormIndexSet complement(const FormIndexSet& set) {
  FormIndexSet out;
  for (int k = 1; k <= 6; ++k)
    if (!std::binary_search(set.begin(), set.end(), k)) out.push_back(k);
  return out;
}

std::string to_string(const FormIndexSet& set) {
  std::string out = "{";
  for (std::size_t k = 0; k < set.size(); ++k) out += (k ? "," : "") + std::to_string(set[k]);
  return out + "}";
}

// ---------------------------------------------------------------------------
// Condition (*)

namespace {

const ExactMatrix& omega_matrix_inverse(int index) {
  static const std::vector<ExactMatrix> inverses = [] {
    std::vector<ExactMatrix> out;
    for (int k = 1; k <= 6; ++k) {
      const auto& m = omega_matrix(k).matrix();
      if (exact::determinant(m).is_zero()) throw std::logic_error("omega matrix is singular");
      out.push_back(exact::inverse(m));
    }
    return out;
  }();
  check_form_index(index);
  return inverses[static_cast<std::size_t>(index - 1)];
}

void check_4x4(const ExactMatrix& u) {
  if (u.rows() != 4 || u.cols() != 4) throw exact::DimensionError("expected a 4x4 matrix, got " + u.shape());
}

}  // namespace

bool star_condition(const ExactMatrix& u, int index) {
  check_4x4(u);
  return omega_matrix(index).matrix() * u * omega_matrix_inverse(index) == u.conj();
}

bool bilinear_condition(const ExactMatrix& u, int index) {
  check_4x4(u);
  const auto& m = omega_matrix(index).matrix();
  return u.transpose() * m * u == m;
}

std::vector<Rational> realify(const ExactMatrix& m) {
  std::vector<Rational> out;
  out.reserve(2 * m.entries().size());
  for (const auto& z : m.entries()) {
    out.push_back(z.re());
    out.push_back(z.im());
  }
  return out;
}

namespace {

ExactMatrix realified_columns(const std::vector<ExactMatrix>& family) {
  if (family.empty()) return {};
  const std::size_t len = 2 * family.front().entries().size();
  ExactMatrix cols(len, family.size());
  for (std::size_t j = 0; j < family.size(); ++j) {
    auto v = realify(family[j]);
    if (v.size() != len) throw exact::DimensionError("mixed shapes in matrix family");
    for (std::size_t r = 0; r < len; ++r) cols(r, j) = v[r];
  }
  return cols;
}

// Real basis matrix for unknown k of a 4x4 complex matrix: k = 2*(4r+c) + part.
ExactMatrix unknown_basis(std::size_t k) {
  ExactMatrix b(4, 4);
  std::size_t cell = k / 2;
  b(cell / 4, cell % 4) = (k % 2 == 0) ? GaussianRational(1) : kI;
  return b;
}

}  // namespace

std::size_t real_rank(const std::vector<ExactMatrix>& family) {
  if (family.empty()) return 0;
  return exact::rank(realified_columns(family));
}

StabilizerSpec stabilizer_space(const FormIndexSet& fixed) {
  auto set = make_index_set(fixed);
  constexpr std::size_t kUnknowns = 32;
  std::vector<ExactMatrix> blocks;
  for (int index : set) {
    // Column k holds the realified residual M u M^{-1} - conj(u) for the k-th
    // real unknown; the map is R-linear, so columns determine it.
    std::vector<ExactMatrix> residuals;
    for (std::size_t k = 0; k < kUnknowns; ++k) {
      ExactMatrix b = unknown_basis(k);
      residuals.push_back(omega_matrix(index).matrix() * b * omega_matrix_inverse(index) - b.conj());
    }
    blocks.push_back(realified_columns(residuals));
  }

  StabilizerSpec spec{set, {}};
  if (blocks.empty()) {
    for (std::size_t k = 0; k < kUnknowns; ++k) spec.solution_basis.push_back(unknown_basis(k));
    return spec;
  }
  for (const auto& v : exact::nullspace(exact::vstack(blocks))) {
    ExactMatrix u(4, 4);
    for (std::size_t k = 0; k < kUnknowns; ++k) u += unknown_basis(k) * v(k, 0);
    spec.solution_basis.push_back(std::move(u));
  }
  return spec;
}

// ---------------------------------------------------------------------------
// Block templates

ExactMatrix quaternion_block(const GaussianRational& z, const GaussianRational& w) {
  return ExactMatrix{{z, -w.conj()}, {w, z.conj()}};
}

ExactMatrix spin3_element(const GaussianRational& z, const GaussianRational& w) {
  return exact::kronecker(ExactMatrix::identity(2), quaternion_block(z, w));
}

ExactMatrix so2_element(const Rational& a, const Rational& b) {
  return exact::kronecker(ExactMatrix{{a, Rational(-b)}, {b, a}}, ExactMatrix::identity(2));
}

BlockPattern pattern_from_name(const std::string& name) {
  if (name == "Spin2") return BlockPattern::Spin2;
  if (name == "Spin3") return BlockPattern::Spin3;
  if (name == "Spin4") return BlockPattern::Spin4;
  if (name == "Spin5") return BlockPattern::Spin5;
  if (name == "SO2") return BlockPattern::SO2;
  throw std::invalid_argument("unknown block template '" + name + "' (expected Spin2, Spin3, Spin4, Spin5 or SO2)");
}

std::string to_string(BlockPattern p) {
  switch (p) {
    case BlockPattern::Spin2: return "Spin2";
    case BlockPattern::Spin3: return "Spin3";
    case BlockPattern::Spin4: return "Spin4";
    case BlockPattern::Spin5: return "Spin5";
    case BlockPattern::SO2: return "SO2";
  }
  return "?";
}

namespace {

// Real directions of the quaternion block: d/dRe z, d/dIm z, d/dRe w, d/dIm w.
std::vector<ExactMatrix> quaternion_block_directions() {
  return {quaternion_block(1, 0), quaternion_block(kI, 0), quaternion_block(0, 1), quaternion_block(0, kI)};
}

ExactMatrix place_block(const ExactMatrix& block, std::size_t br, std::size_t bc) {
  ExactMatrix unit(2, 2);
  unit(br, bc) = 1;
  return exact::kronecker(unit, block);
}

}  // namespace

std::vector<ExactMatrix> pattern_basis(BlockPattern p) {
  std::vector<ExactMatrix> out;
  switch (p) {
    case BlockPattern::Spin2:
      out.push_back(ExactMatrix::identity(4));
      out.push_back(ExactMatrix::diagonal({kI, -kI, kI, -kI}));
      break;
    case BlockPattern::Spin3:
      for (const auto& q : quaternion_block_directions()) out.push_back(exact::kronecker(ExactMatrix::identity(2), q));
      break;
    case BlockPattern::Spin4:
      for (std::size_t blk = 0; blk < 2; ++blk)
        for (const auto& q : quaternion_block_directions()) out.push_back(place_block(q, blk, blk));
      break;
    case BlockPattern::Spin5:
      for (std::size_t br = 0; br < 2; ++br)
        for (std::size_t bc = 0; bc < 2; ++bc)
          for (const auto& q : quaternion_block_directions()) out.push_back(place_block(q, br, bc));
      break;
    case BlockPattern::SO2:
      out.push_back(so2_element(1, 0));
      out.push_back(so2_element(0, 1));
      break;
  }
  return out;
}

FormIndexSet pattern_fixed_set(BlockPattern p) {
  switch (p) {
    case BlockPattern::Spin2: return {1, 2, 5, 6};
    case BlockPattern::Spin3: return {1, 2, 6};
    case BlockPattern::Spin4: return {1, 2};
    case BlockPattern::Spin5: return {1};
    case BlockPattern::SO2: return {1, 3, 4, 5};
  }
  return {};
}

bool pattern_match(const StabilizerSpec& spec, BlockPattern pattern) {
  const auto tmpl = pattern_basis(pattern);
  std::vector<ExactMatrix> joint = spec.solution_basis;
  joint.insert(joint.end(), tmpl.begin(), tmpl.end());
  const std::size_t r_spec = real_rank(spec.solution_basis);
  const std::size_t r_tmpl = real_rank(tmpl);
  const std::size_t r_joint = real_rank(joint);
  return r_spec == r_joint && r_tmpl == r_joint;
}

// ---------------------------------------------------------------------------
// Induced action on the omega complement

ExactMatrix induced_orthogonal_action(const ExactMatrix& u, const FormIndexSet& fixed) {
  const auto rest = complement(make_index_set(fixed));
  const std::size_t d = rest.size();
  ExactMatrix r(d, d);
  for (std::size_t col = 0; col < d; ++col) {
    const TwoForm image = act(u, omega(rest[col]));
    TwoForm rebuilt;
    for (std::size_t row = 0; row < d; ++row) {
      Rational c = inner_product(image, omega(rest[row])).re();
      r(row, col) = c;
      rebuilt += GaussianRational(c) * omega(rest[row]);
    }
    if (rebuilt != image) {
      throw SpanError("image of omega_" + std::to_string(rest[col]) + " leaves span" + to_string(rest) +
                      "; input is not in the stabilizer of " + to_string(fixed));
    }
  }
  return r;
}

bool is_special_orthogonal(const ExactMatrix& r) {
  return r.is_square() && r.is_real() && (r.transpose() * r).is_identity() && exact::determinant(r) == GaussianRational(1);
}

// ---------------------------------------------------------------------------
// Sampling

ExactMatrix sample_stabilizer_element(const StabilizerSpec& spec, exact::ExactSampler& sampler) {
  if (spec.solution_basis.empty()) return ExactMatrix::identity(4);
  for (int attempt = 0; attempt < 64; ++attempt) {
    ExactMatrix b(4, 4);
    for (const auto& basis : spec.solution_basis) b += basis * GaussianRational(sampler.rational(3));
    ExactMatrix s = (b - b.conj_transpose()) * GaussianRational(Rational(1, 2));
    if (s.is_zero()) continue;
    try {
      return exact::cayley_unitary(s);
    } catch (const exact::SingularMatrixError&) {
      continue;
    }
  }
  throw std::runtime_error("could not sample a nontrivial element of the stabilizer of " + to_string(spec.fixed_set));
}

ExactMatrix sample_spin3(exact::ExactSampler& sampler) {
  Rational t1 = sampler.rational(4), t2 = sampler.rational(4), t3 = sampler.rational(4);
  Rational s = t1 * t1 + t2 * t2 + t3 * t3;
  Rational d = 1 + s;
  GaussianRational z(2 * t1 / d, 2 * t2 / d);
  GaussianRational w(2 * t3 / d, (s - 1) / d);
  return spin3_element(z, w);
}

ExactMatrix sample_so2(exact::ExactSampler& sampler) {
  auto [a, b] = sampler.circle_point();
  return so2_element(a, b);
}

// ---------------------------------------------------------------------------
// Kronecker lift

namespace {

bool in_template(const ExactMatrix& u, BlockPattern p) {
  auto basis = pattern_basis(p);
  const std::size_t r = real_rank(basis);
  basis.push_back(u);
  return real_rank(basis) == r;
}

}  // namespace

KroneckerLiftReport kronecker_lift_check(const ExactMatrix& u_sp1, const ExactMatrix& r_so2) {
  check_4x4(u_sp1);
  check_4x4(r_so2);
  if (!in_template(u_sp1, BlockPattern::Spin3) || !exact::is_unitary(u_sp1)) {
    throw std::invalid_argument("kronecker_lift_check: first factor is not a unitary Spin3-template matrix");
  }
  if (!in_template(r_so2, BlockPattern::SO2) || !exact::is_unitary(r_so2)) {
    throw std::invalid_argument("kronecker_lift_check: second factor is not a unitary SO2-template matrix");
  }

  const ExactMatrix q{{u_sp1(0, 0), u_sp1(0, 1)}, {u_sp1(1, 0), u_sp1(1, 1)}};
  const ExactMatrix rot{{r_so2(0, 0), r_so2(0, 2)}, {r_so2(2, 0), r_so2(2, 2)}};

  KroneckerLiftReport rep;
  rep.lift = exact::kronecker(rot, q);
  rep.lift_is_product = rep.lift == r_so2 * u_sp1;
  rep.lift_unitary = exact::is_unitary(rep.lift);
  rep.lift_in_stabilizer = star_condition(rep.lift, 1);
  rep.lift_matches_spin5 = in_template(rep.lift, BlockPattern::Spin5);

  rep.lift_action = induced_orthogonal_action(rep.lift, {1});
  rep.spin3_action = induced_orthogonal_action(u_sp1, pattern_fixed_set(BlockPattern::Spin3));
  rep.so2_action = induced_orthogonal_action(r_so2, pattern_fixed_set(BlockPattern::SO2));

  // Reorder lift_action from (omega_2..omega_6) into block order.
  ExactMatrix permuted(5, 5);
  for (std::size_t r = 0; r < 5; ++r)
    for (std::size_t c = 0; c < 5; ++c)
      permuted(r, c) = rep.lift_action(static_cast<std::size_t>(rep.block_order[r] - 2),
                                       static_cast<std::size_t>(rep.block_order[c] - 2));
  ExactMatrix joined(5, 5);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) joined(r, c) = rep.spin3_action(r, c);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) joined(3 + r, 3 + c) = rep.so2_action(r, c);
  rep.diagram_commutes = permuted == joined;
  return rep;
}

}  // namespace spinclass::lambda2

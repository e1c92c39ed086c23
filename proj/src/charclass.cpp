#include "spinclass/charclass.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace spinclass::charclass {

// ---------------------------------------------------------------------------
// GradedPoly

GradedPoly::GradedPoly(std::vector<std::string> variables, int truncation_degree)
    : vars_(std::move(variables)), trunc_(truncation_degree) {
  if (trunc_ < 0) throw std::invalid_argument("truncation degree must be nonnegative");
}

GradedPoly GradedPoly::constant(std::vector<std::string> variables, int truncation_degree, const Integer& c) {
  GradedPoly p(std::move(variables), truncation_degree);
  p.add_term(Exponents(p.vars_.size(), 0), c);
  return p;
}

GradedPoly GradedPoly::variable(std::vector<std::string> variables, int truncation_degree, std::size_t index) {
  GradedPoly p(std::move(variables), truncation_degree);
  if (index >= p.vars_.size()) throw std::out_of_range("variable index out of range");
  Exponents e(p.vars_.size(), 0);
  e[index] = 1;
  p.add_term(e, 1);
  return p;
}

namespace {

int total_degree(const GradedPoly::Exponents& e) {
  int d = 0;
  for (int k : e) d += k;
  return d;
}

}  // namespace

void GradedPoly::add_term(const Exponents& e, const Integer& c) {
  if (e.size() != vars_.size()) throw std::invalid_argument("exponent vector has wrong length");
  if (kVariableDegree * total_degree(e) > trunc_ || c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer GradedPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

GradedPoly GradedPoly::homogeneous_part(int degree) const {
  GradedPoly out(vars_, trunc_);
  for (const auto& [e, c] : terms_)
    if (kVariableDegree * total_degree(e) == degree) out.terms_.emplace(e, c);
  return out;
}

GradedPoly GradedPoly::truncated(int degree) const {
  GradedPoly out(vars_, std::min(degree, trunc_));
  for (const auto& [e, c] : terms_) out.add_term(e, c);
  return out;
}

void GradedPoly::check_compatible(const GradedPoly& o, const char* op) const {
  if (vars_ != o.vars_) throw std::invalid_argument(std::string("GradedPoly ") + op + ": variable lists differ");
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& o) {
  check_compatible(o, "+");
  trunc_ = std::min(trunc_, o.trunc_);
  *this = truncated(trunc_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& o) { return *this += -o; }

GradedPoly& GradedPoly::operator*=(const GradedPoly& o) {
  check_compatible(o, "*");
  GradedPoly out(vars_, std::min(trunc_, o.trunc_));
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      Exponents e(ea.size());
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      out.add_term(e, ca * cb);
    }
  *this = std::move(out);
  return *this;
}

GradedPoly& GradedPoly::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

GradedPoly GradedPoly::operator-() const {
  GradedPoly out = *this;
  return out *= Integer(-1);
}

bool operator==(const GradedPoly& a, const GradedPoly& b) { return a.vars_ == b.vars_ && a.terms_ == b.terms_; }

std::string GradedPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponents, Integer>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    const int da = total_degree(a.first), db = total_degree(b.first);
    if (da != db) return da < db;
    return a.first > b.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : sorted) {
    const bool constant = total_degree(e) == 0;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (constant || mag != 1) os << mag.get_str();
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      os << vars_[k];
      if (e[k] > 1) os << "^" << e[k];
    }
  }
  return os.str();
}

std::vector<std::string> default_variables(std::size_t rank) {
  if (rank == 1) return {"x"};
  std::vector<std::string> out;
  for (std::size_t k = 1; k <= rank; ++k) out.push_back("x" + std::to_string(k));
  return out;
}

// ---------------------------------------------------------------------------
// Weight

bool Weight::is_zero() const {
  return std::all_of(exponents.begin(), exponents.end(), [](int e) { return e == 0; });
}

int Weight::leading_sign() const {
  for (int e : exponents)
    if (e != 0) return e > 0 ? 1 : -1;
  return 0;
}

Weight Weight::operator-() const {
  Weight w = *this;
  for (int& e : w.exponents) e = -e;
  return w;
}

Weight operator+(const Weight& a, const Weight& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("weights of different rank");
  Weight w = a;
  for (std::size_t k = 0; k < w.exponents.size(); ++k) w.exponents[k] += b.exponents[k];
  return w;
}

GradedPoly Weight::to_poly(const std::vector<std::string>& variables, int truncation_degree) const {
  if (variables.size() != rank()) throw std::invalid_argument("weight rank does not match variable count");
  GradedPoly p(variables, truncation_degree);
  for (std::size_t k = 0; k < rank(); ++k) {
    GradedPoly::Exponents e(rank(), 0);
    e[k] = 1;
    p.add_term(e, exponents[k]);
  }
  return p;
}

std::string Weight::to_string(const std::vector<std::string>& variables) const {
  return to_poly(variables, GradedPoly::kVariableDegree).to_string();
}

std::string to_string(const std::vector<Weight>& weights) {
  std::string out = "{";
  for (std::size_t k = 0; k < weights.size(); ++k) out += (k ? ", " : "") + weights[k].to_string();
  return out + "}";
}

// ---------------------------------------------------------------------------
// Torus models

std::string to_string(SpinGroup g) {
  switch (g) {
    case SpinGroup::Spin3: return "Spin3";
    case SpinGroup::Spin4: return "Spin4";
    case SpinGroup::Spin5: return "Spin5";
    case SpinGroup::Spin6: return "Spin6";
  }
  return "?";
}

SpinGroup spin_group_for_rank(int n) {
  switch (n) {
    case 3: return SpinGroup::Spin3;
    case 4: return SpinGroup::Spin4;
    case 5: return SpinGroup::Spin5;
    case 6: return SpinGroup::Spin6;
    default: throw std::invalid_argument("no torus model for Spin" + std::to_string(n) + "; expected 3..6");
  }
}

TorusModel TorusModel::of(SpinGroup g) {
  TorusModel t;
  t.group_ = g;
  switch (g) {
    case SpinGroup::Spin3:
      t.diag_ = {{{1}}, {{-1}}, {{1}}, {{-1}}};
      t.fixed_ = {1, 2, 6};
      break;
    case SpinGroup::Spin4:
      t.diag_ = {{{1, 0}}, {{-1, 0}}, {{0, 1}}, {{0, -1}}};
      t.fixed_ = {1, 2};
      break;
    case SpinGroup::Spin5:
      t.diag_ = {{{1, 0}}, {{-1, 0}}, {{0, 1}}, {{0, -1}}};
      t.fixed_ = {1};
      break;
    case SpinGroup::Spin6:
      t.diag_ = {{{1, 1, 1}}, {{-1, 0, 0}}, {{0, -1, 0}}, {{0, 0, -1}}};
      t.fixed_ = {};
      break;
  }
  t.vars_ = default_variables(t.diag_.front().rank());
  return t;
}

ExactMatrix TorusModel::embed(const std::vector<GaussianRational>& z) const {
  if (z.size() != rank()) {
    throw std::invalid_argument("torus of " + to_string(group_) + " has rank " + std::to_string(rank()) + ", got " +
                                std::to_string(z.size()) + " parameters");
  }
  for (const auto& zk : z)
    if (zk.norm() != 1) throw std::invalid_argument("torus parameter " + zk.to_string() + " is not on the unit circle");
  std::vector<GaussianRational> entries;
  for (const auto& chi : diag_) {
    GaussianRational v = 1;
    for (std::size_t k = 0; k < rank(); ++k) {
      const GaussianRational base = chi.exponents[k] >= 0 ? z[k] : z[k].conj();
      for (int p = 0; p < std::abs(chi.exponents[k]); ++p) v *= base;
    }
    entries.push_back(v);
  }
  return ExactMatrix::diagonal(entries);
}

// ---------------------------------------------------------------------------
// Representations and weights

Representation representation_from_name(const std::string& name) {
  if (name == "pi") return Representation::Pi;
  if (name == "rho") return Representation::Rho;
  if (name == "rho4_1") return Representation::Rho4_1;
  if (name == "rho4_2") return Representation::Rho4_2;
  if (name == "rho6") return Representation::Rho6;
  throw std::invalid_argument("unknown representation '" + name + "'");
}

std::string to_string(Representation r) {
  switch (r) {
    case Representation::Pi: return "pi";
    case Representation::Rho: return "rho";
    case Representation::Rho4_1: return "rho4_1";
    case Representation::Rho4_2: return "rho4_2";
    case Representation::Rho6: return "rho6";
  }
  return "?";
}

std::string to_string(RepresentationKind k) {
  switch (k) {
    case RepresentationKind::Real: return "real";
    case RepresentationKind::Quaternionic: return "quaternionic";
    case RepresentationKind::Complex: return "complex";
  }
  return "?";
}

std::vector<int> WeightSystem::pair_orientation() const {
  std::vector<int> out(weights.size(), 1);
  if (!out.empty() && orientation < 0) out[0] = -1;
  return out;
}

namespace {

WeightSystem pi_weights(const TorusModel& torus) {
  const auto rest = lambda2::complement(torus.fixed_set());
  const std::size_t d = rest.size();

  ExactMatrix omegas(6, d);
  for (std::size_t c = 0; c < d; ++c)
    for (std::size_t r = 0; r < 6; ++r) omegas(r, c) = lambda2::omega(rest[c]).coefficients()[r];

  // Character of each wedge slot e_i ^ e_j is m_i + m_j.
  const auto& diag = torus.diagonal_characters();
  std::map<Weight, std::vector<std::size_t>> slots;
  for (std::size_t s = 0; s < lambda2::kWedgeBasis.size(); ++s) {
    const auto [i, j] = lambda2::kWedgeBasis[s];
    slots[diag[static_cast<std::size_t>(i - 1)] + diag[static_cast<std::size_t>(j - 1)]].push_back(s);
  }

  std::vector<std::pair<Weight, ExactMatrix>> found;
  for (const auto& [chi, idx] : slots) {
    ExactMatrix e(6, idx.size());
    for (std::size_t c = 0; c < idx.size(); ++c) e(idx[c], c) = -1;
    for (const auto& v : exact::nullspace(exact::hstack({omegas, e}))) {
      ExactMatrix coords(d, 1);
      for (std::size_t r = 0; r < d; ++r) coords(r, 0) = v(r, 0);
      if (!coords.is_zero()) found.emplace_back(chi, coords);
    }
  }
  if (found.size() != d) {
    throw std::domain_error("torus of " + to_string(torus.group()) + " does not act diagonally on monomials over " +
                            lambda2::to_string(rest) + ": found " + std::to_string(found.size()) +
                            " weight vectors for dimension " + std::to_string(d));
  }

  WeightSystem ws;
  ws.kind = RepresentationKind::Real;
  std::map<Weight, int> balance;
  for (const auto& [w, v] : found) {
    if (w.is_zero()) {
      ++ws.zero_count;
      continue;
    }
    balance[w.leading_sign() < 0 ? w : -w] += w.leading_sign();
    if (w.leading_sign() < 0) {
      ws.weights.push_back(w);
      ws.eigenvectors.push_back(v);
    }
  }
  for (const auto& [w, b] : balance)
    if (b != 0) throw std::domain_error("weight " + w.to_string() + " is not paired with its negative");

  // Order representatives by their first omega coordinate.
  std::vector<std::size_t> order(ws.weights.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  auto lead = [&](std::size_t k) {
    std::size_t r = 0;
    while (r < d && ws.eigenvectors[k](r, 0).is_zero()) ++r;
    return r;
  };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return lead(a) < lead(b); });
  WeightSystem sorted = ws;
  for (std::size_t k = 0; k < order.size(); ++k) {
    sorted.weights[k] = ws.weights[order[k]];
    sorted.eigenvectors[k] = ws.eigenvectors[order[k]];
  }
  ws = std::move(sorted);

  if (ws.zero_count == 0 && !ws.weights.empty()) {
    ExactMatrix frame(d, d);
    for (std::size_t p = 0; p < ws.eigenvectors.size(); ++p)
      for (std::size_t r = 0; r < d; ++r) {
        frame(r, 2 * p) = ws.eigenvectors[p](r, 0).re();
        frame(r, 2 * p + 1) = exact::Rational(-ws.eigenvectors[p](r, 0).im());
      }
    const auto det = exact::determinant(frame);
    if (det.is_zero() || !det.is_real()) throw std::domain_error("weight vectors do not form a real frame");
    ws.orientation = sgn(det.re()) > 0 ? 1 : -1;
  }
  return ws;
}

WeightSystem quaternionic_weights(const TorusModel& torus, const std::vector<std::size_t>& blocks) {
  WeightSystem ws;
  ws.kind = RepresentationKind::Quaternionic;
  const auto& diag = torus.diagonal_characters();
  for (std::size_t b : blocks) {
    const Weight& w = diag[2 * b];
    if (diag[2 * b + 1] != -w) throw std::domain_error("diagonal block is not of quaternionic type");
    ws.weights.push_back(w);
  }
  return ws;
}

}  // namespace

WeightSystem weights_of_action(const TorusModel& torus, Representation rep) {
  const SpinGroup g = torus.group();
  auto mismatch = [&] {
    return std::invalid_argument("representation " + to_string(rep) + " is not defined for " + to_string(g));
  };
  switch (rep) {
    case Representation::Pi:
      return pi_weights(torus);
    case Representation::Rho:
      if (g == SpinGroup::Spin3) return quaternionic_weights(torus, {0});
      if (g == SpinGroup::Spin5) return quaternionic_weights(torus, {0, 1});
      if (g == SpinGroup::Spin6) return weights_of_action(torus, Representation::Rho6);
      throw std::invalid_argument("Spin4 has two quaternionic representations; use rho4_1 or rho4_2");
    case Representation::Rho4_1:
    case Representation::Rho4_2:
      if (g != SpinGroup::Spin4) throw mismatch();
      return quaternionic_weights(torus, {rep == Representation::Rho4_1 ? std::size_t{0} : std::size_t{1}});
    case Representation::Rho6: {
      if (g != SpinGroup::Spin6) throw mismatch();
      WeightSystem ws;
      ws.kind = RepresentationKind::Complex;
      ws.weights = torus.diagonal_characters();
      return ws;
    }
  }
  throw mismatch();
}

// ---------------------------------------------------------------------------
// Total classes

namespace {

std::vector<std::string> resolve_variables(const std::vector<Weight>& weights, std::vector<std::string> variables) {
  if (!variables.empty()) return variables;
  return weights.empty() ? std::vector<std::string>{} : default_variables(weights.front().rank());
}

GradedPoly product_of(const std::vector<Weight>& weights, int trunc, std::vector<std::string> variables,
                      bool squared) {
  const auto vars = resolve_variables(weights, std::move(variables));
  GradedPoly total = GradedPoly::constant(vars, trunc, 1);
  for (const auto& w : weights) {
    GradedPoly lin = w.to_poly(vars, trunc);
    total *= GradedPoly::constant(vars, trunc, 1) + (squared ? lin * lin : lin);
  }
  return total;
}

}  // namespace

GradedPoly pontrjagin_total(const std::vector<Weight>& weights, int truncation_degree,
                            std::vector<std::string> variables) {
  return product_of(weights, truncation_degree, std::move(variables), true);
}

GradedPoly chern_total(const std::vector<Weight>& weights, int truncation_degree, std::vector<std::string> variables) {
  return product_of(weights, truncation_degree, std::move(variables), false);
}

GradedPoly sp_total(const std::vector<Weight>& weights, int truncation_degree, std::vector<std::string> variables) {
  return product_of(weights, truncation_degree, std::move(variables), true);
}

GradedPoly euler_top(const std::vector<Weight>& weights, const std::vector<int>& orientation,
                     std::vector<std::string> variables) {
  if (!orientation.empty() && orientation.size() != weights.size())
    throw std::invalid_argument("orientation needs one sign per weight pair");
  const auto vars = resolve_variables(weights, std::move(variables));
  const int trunc = GradedPoly::kVariableDegree * static_cast<int>(weights.size());
  GradedPoly e = GradedPoly::constant(vars, trunc, 1);
  for (std::size_t k = 0; k < weights.size(); ++k) {
    if (weights[k].is_zero()) throw std::domain_error("zero weight present: no Euler class for this representation");
    const int s = orientation.empty() ? 1 : orientation[k];
    if (s != 1 && s != -1) throw std::invalid_argument("orientation entries must be +1 or -1");
    e *= Integer(s) * weights[k].to_poly(vars, trunc);
  }
  return e;
}

// ---------------------------------------------------------------------------
// Lemma identities

std::vector<Weight> printed_spin6_pi_weights() { return {{{0, -1, -1}}, {{-1, 0, -1}}, {{0, -1, -1}}}; }

bool LemmaReport::passed() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.holds; });
}

namespace {

IdentityCheck exact_identity(std::string name, GradedPoly lhs, GradedPoly rhs) {
  IdentityCheck c{std::move(name), std::move(lhs), std::move(rhs)};
  c.holds = c.lhs == c.rhs;
  c.sign = c.holds ? 1 : 0;
  return c;
}

IdentityCheck signed_identity(std::string name, GradedPoly lhs, GradedPoly rhs) {
  IdentityCheck c{std::move(name), std::move(lhs), std::move(rhs)};
  c.up_to_sign = true;
  if (c.lhs == c.rhs) {
    c.sign = 1;
  } else if (c.lhs == -c.rhs) {
    c.sign = -1;
  }
  c.holds = c.sign != 0;
  return c;
}

constexpr int kDeg4 = 4;
constexpr int kDeg6 = 6;

}  // namespace

LemmaReport verify_lemma_cohomo(int n, const LemmaOptions& options) {
  const TorusModel torus = TorusModel::of(spin_group_for_rank(n));
  const auto& vars = torus.variables();
  const int T = kLemmaTruncation;

  LemmaReport rep;
  rep.n = n;
  rep.variables = vars;
  rep.pi = weights_of_action(torus, Representation::Pi);

  if (n == 6) {
    rep.notes.push_back("printed pi6 weight list repeats -x2 - x3; the derived third weight is -x1 - x2");
    if (options.use_printed_spin6_weights) {
      rep.pi.weights = printed_spin6_pi_weights();
      rep.pi.eigenvectors.clear();
      rep.pi.orientation = 1;
      rep.notes.push_back("printed weight list injected in place of the derived one");
    }
  }

  const GradedPoly p1 = pontrjagin_total(rep.pi.weights, T, vars).homogeneous_part(kDeg4);
  const Integer two = 2, four = 4;

  switch (n) {
    case 3: {
      auto rho = weights_of_action(torus, Representation::Rho);
      rep.rho.emplace_back("rho3", rho);
      const GradedPoly sp1 = sp_total(rho.weights, T, vars).homogeneous_part(kDeg4);
      rep.checks.push_back(exact_identity("p1(pi3) = 4 sp1(rho3)", p1, four * sp1));
      break;
    }
    case 4: {
      auto r1 = weights_of_action(torus, Representation::Rho4_1);
      auto r2 = weights_of_action(torus, Representation::Rho4_2);
      rep.rho.emplace_back("rho4_1", r1);
      rep.rho.emplace_back("rho4_2", r2);
      const GradedPoly s1 = sp_total(r1.weights, T, vars).homogeneous_part(kDeg4);
      const GradedPoly s2 = sp_total(r2.weights, T, vars).homogeneous_part(kDeg4);
      rep.checks.push_back(exact_identity("p1(pi4) = 2 sp1(rho4_1) + 2 sp1(rho4_2)", p1, two * s1 + two * s2));
      const GradedPoly e = euler_top(rep.pi.weights, rep.pi.pair_orientation(), vars);
      rep.checks.push_back(signed_identity("e(pi4) = +-(sp1(rho4_1) - sp1(rho4_2))", e, s1 - s2));
      break;
    }
    case 5: {
      auto rho = weights_of_action(torus, Representation::Rho);
      rep.rho.emplace_back("rho5", rho);
      const GradedPoly sp1 = sp_total(rho.weights, T, vars).homogeneous_part(kDeg4);
      rep.checks.push_back(exact_identity("p1(pi5) = 2 sp1(rho5)", p1, two * sp1));
      break;
    }
    case 6: {
      auto rho = weights_of_action(torus, Representation::Rho6);
      rep.rho.emplace_back("rho6", rho);
      const GradedPoly c = chern_total(rho.weights, T, vars);
      rep.checks.push_back(
          exact_identity("c1(rho6) = 0", c.homogeneous_part(GradedPoly::kVariableDegree), GradedPoly(vars, T)));
      rep.checks.push_back(exact_identity("p1(pi6) = -2 c2(rho6)", p1, Integer(-2) * c.homogeneous_part(kDeg4)));
      const GradedPoly e = euler_top(rep.pi.weights, rep.pi.pair_orientation(), vars);
      rep.checks.push_back(signed_identity("e(pi6) = +-c3(rho6)", e, c.homogeneous_part(kDeg6)));
      break;
    }
    default:
      break;
  }
  return rep;
}

}  // namespace spinclass::charclass

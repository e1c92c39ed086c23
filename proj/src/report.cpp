#include "spinclass/report.hpp"

#include <algorithm>
#include <sstream>

#include "spinclass/charclass.hpp"
#include "spinclass/clifford.hpp"
#include "spinclass/embed.hpp"
#include "spinclass/ktheory.hpp"
#include "spinclass/lambda2.hpp"

namespace spinclass::report {

namespace {

using clifford::Blade;
using clifford::CliffordElement;
using clifford::FieldType;
using exact::ExactMatrix;
using exact::ExactSampler;

Report start(std::string command, Json inputs, const RunOptions& o) {
  Report r;
  r.command = std::move(command);
  r.inputs = std::move(inputs);
  r.seed = o.seed;
  return r;
}

void check_samples(const RunOptions& o) {
  if (o.samples < 1) throw UsageError("--samples must be positive");
}

// Mod-8 rules stated independently of clifford::irrep_table.
int rule_count(int n) { return n % 4 == 3 ? 2 : 1; }
FieldType rule_field(int n) {
  switch (n % 8) {
    case 1:
    case 5:
      return FieldType::Complex;
    case 2:
    case 3:
    case 4:
      return FieldType::Quaternionic;
    default:
      return FieldType::Real;
  }
}

CliffordElement blade_el(int n, Blade b) { return CliffordElement(n, b, 1); }

Blade random_blade(ExactSampler& s, int n) { return static_cast<Blade>(s.integer(0, (1L << n) - 1)); }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

Json strings(const std::vector<std::string>& v) { return Json(v); }

std::string weights_text(const std::vector<charclass::Weight>& ws, const std::vector<std::string>& vars) {
  std::vector<std::string> parts;
  for (const auto& w : ws) parts.push_back(w.to_string(vars));
  return "{" + join(parts, ", ") + "}";
}

// Clause of the classification theorem for rank n.
int theorem_clause(int n) { return std::min(n, 7) - 1; }

lambda2::FormIndexSet parse_indices(const std::string& text) {
  lambda2::FormIndexSet out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) throw UsageError("empty entry in index list \"" + text + "\"");
    int v = 0;
    try {
      std::size_t used = 0;
      v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("index \"" + item + "\" is not an integer");
    }
    if (v < 1 || v > 6) throw UsageError("form index " + std::to_string(v) + " outside 1..6");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("index list is empty");
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) throw UsageError("repeated form index in \"" + text + "\"");
  return out;
}

void append(Report& into, const Report& from, const std::string& label) {
  for (auto s : from.steps) {
    s.claim = label + ": " + s.claim;
    into.steps.push_back(std::move(s));
  }
}

}  // namespace

bool Report::verdict() const {
  return !steps.empty() && std::all_of(steps.begin(), steps.end(), [](const Step& s) { return s.verdict; });
}

std::size_t expected_bundle_count(int n, long k) {
  switch (n) {
    case 2:
      return k == 0 ? 1 : 2;
    case 3:
    case 5:
      return 2;
    case 4:
      return 4;
    default:
      return 1;
  }
}

// ---------------------------------------------------------------------------

Report cmd_clifford(int n, const RunOptions& o) {
  if (n < 1 || n > kMaxCliffordN)
    throw UsageError("clifford: n must lie in 1.." + std::to_string(kMaxCliffordN) + ", got " + std::to_string(n));
  check_samples(o);
  Report r = start("clifford", {{"n", n}, {"samples", o.samples}}, o);
  ExactSampler sampler(o.seed);

  const auto info = clifford::irrep_table(n);
  {
    Step s{"irreducible representations of Cl_n: count and field type", "Proposition Clifford irreps"};
    s.verdict = info.count == rule_count(n) && info.field == rule_field(n);
    s.witness = {{"count", info.count},
                 {"field", clifford::to_string(info.field)},
                 {"dimension_over_field", info.dimension_over_field}};
    r.steps.push_back(std::move(s));
  }
  if (n <= 8) {
    const auto d = clifford::decompose_structure(n);
    Step s{"structure decomposition of Cl_n agrees with the table", "Proposition Clifford irreps"};
    s.verdict = d.simple_components == info.count && d.field == info.field && d.matrix_size == info.dimension_over_field;
    s.witness = {{"simple_components", d.simple_components},
                 {"component_dimension", d.component_dimension},
                 {"trace_signature", {d.positive_index, d.negative_index}},
                 {"field", clifford::to_string(d.field)},
                 {"matrix_size", d.matrix_size}};
    r.steps.push_back(std::move(s));
  }
  {
    const auto far = clifford::irrep_table(n + 8);
    Step s{"count and field type are 8-periodic", "Proposition Clifford irreps"};
    s.verdict = far.count == info.count && far.field == info.field &&
                far.dimension_over_field == 16 * info.dimension_over_field;
    s.witness = {{"n_plus_8", {{"count", far.count}, {"field", clifford::to_string(far.field)}}}};
    r.steps.push_back(std::move(s));
  }
  {
    bool ok = true;
    const auto minus_one = CliffordElement::scalar(n, -1);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        auto ei = CliffordElement::generator(n, i), ej = CliffordElement::generator(n, j);
        if (i == j)
          ok = ok && ei * ei == minus_one;
        else
          ok = ok && (ei * ej + ej * ei) == CliffordElement(n);
      }
    Step s{"e_i^2 = -1 and e_i e_j = -e_j e_i", "Clifford algebra relations"};
    s.verdict = ok;
    s.witness = {{"pairs", n * n}};
    r.steps.push_back(std::move(s));
  }
  {
    const bool exhaustive = n <= 5;
    const Blade top = Blade{1u} << n;
    std::size_t checked = 0;
    bool ok = true;
    auto check = [&](Blade a, Blade b, Blade c) {
      auto x = blade_el(n, a), y = blade_el(n, b), z = blade_el(n, c);
      ok = ok && (x * y) * z == x * (y * z);
      ++checked;
    };
    if (exhaustive) {
      for (Blade a = 0; a < top; ++a)
        for (Blade b = 0; b < top; ++b)
          for (Blade c = 0; c < top; ++c) check(a, b, c);
    } else {
      for (int k = 0; k < o.samples; ++k) check(random_blade(sampler, n), random_blade(sampler, n), random_blade(sampler, n));
    }
    Step s{"multiplication is associative on basis blades", "Clifford algebra relations"};
    s.verdict = ok;
    s.witness = {{"mode", exhaustive ? "exhaustive" : "sampled"}, {"triples", checked}};
    r.steps.push_back(std::move(s));
  }
  {
    const int m = n - 1;
    const bool exhaustive = n <= 8;
    const Blade top = Blade{1u} << m;
    std::size_t checked = 0;
    bool ok = true;
    auto check = [&](Blade a, Blade b) {
      auto x = blade_el(m, a), y = blade_el(m, b);
      auto fx = clifford::even_iso(x), fy = clifford::even_iso(y);
      ok = ok && clifford::even_iso(x * y) == fx * fy && clifford::even_part(fx) == fx;
      ++checked;
    };
    if (exhaustive) {
      for (Blade a = 0; a < top; ++a)
        for (Blade b = 0; b < top; ++b) check(a, b);
    } else {
      for (int k = 0; k < o.samples; ++k) check(random_blade(sampler, m), random_blade(sampler, m));
    }
    Step s{"e_i -> e_i e_n is multiplicative from Cl_(n-1) into the even part of Cl_n", "Even part isomorphism"};
    s.verdict = ok;
    s.witness = {{"mode", exhaustive ? "exhaustive" : "sampled"}, {"pairs", checked}};
    r.steps.push_back(std::move(s));
  }
  return r;
}

// ---------------------------------------------------------------------------

Report cmd_stabilizer(const std::string& indices, const RunOptions& o) {
  const auto fixed = parse_indices(indices);
  check_samples(o);
  Report r = start("stabilizer", {{"indices", lambda2::to_string(fixed)}, {"samples", o.samples}}, o);
  const std::string cite = "Stabilizer of forms " + lambda2::to_string(fixed);

  const auto spec = lambda2::stabilizer_space(fixed);
  {
    bool ok = lambda2::real_rank(spec.solution_basis) == spec.real_dimension();
    for (const auto& b : spec.solution_basis)
      for (int i : fixed) ok = ok && lambda2::star_condition(b, i);
    Step s{"solution space of the stabilizer condition", cite};
    s.verdict = ok;
    s.witness = {{"real_dimension", spec.real_dimension()}};
    r.steps.push_back(std::move(s));
  }

  std::optional<lambda2::BlockPattern> pattern;
  for (auto p : {lambda2::BlockPattern::Spin5, lambda2::BlockPattern::Spin4, lambda2::BlockPattern::Spin3,
                 lambda2::BlockPattern::Spin2, lambda2::BlockPattern::SO2})
    if (lambda2::pattern_fixed_set(p) == fixed) pattern = p;
  {
    Step s{"solution space equals the block template", cite};
    if (pattern) {
      s.verdict = lambda2::pattern_match(spec, *pattern);
      s.witness = {{"pattern", lambda2::to_string(*pattern)}, {"template_dimension", lambda2::pattern_basis(*pattern).size()}};
    } else {
      s.claim = "no block template is attached to this fixed set";
      s.verdict = true;
      s.witness = {{"pattern", nullptr}};
    }
    r.steps.push_back(std::move(s));
  }

  const auto rest = lambda2::complement(fixed);
  if (!rest.empty() && spec.real_dimension() > 0) {
    ExactSampler sampler(o.seed);
    bool in_group = true, orthogonal = true, cover = true;
    for (int k = 0; k < o.samples; ++k) {
      const auto u = lambda2::sample_stabilizer_element(spec, sampler);
      in_group = in_group && exact::is_unitary(u);
      for (int i : fixed) in_group = in_group && lambda2::star_condition(u, i);
      const auto a = lambda2::induced_orthogonal_action(u, fixed);
      orthogonal = orthogonal && lambda2::is_special_orthogonal(a);
      cover = cover && lambda2::induced_orthogonal_action(-u, fixed) == a;
    }
    const Json w = {{"samples", o.samples}, {"complement", lambda2::to_string(rest)}};
    r.steps.push_back({"sampled elements are unitary and fix every form in the set", cite, in_group, w});
    r.steps.push_back({"induced action on the complementary forms is special orthogonal", cite, orthogonal, w});
    r.steps.push_back({"u and -u induce the same action", cite, cover, w});
  }
  return r;
}

// ---------------------------------------------------------------------------

Report cmd_lemma_cohomo(int n, const RunOptions& o) {
  if (n < 3 || n > 6) throw UsageError("lemma-cohomo: n must lie in 3..6, got " + std::to_string(n));
  Report r = start("lemma-cohomo", {{"n", n}, {"printed_spin6_weights", o.printed_spin6_weights}}, o);
  const std::string cite = "Lemma cohomo, case n=" + std::to_string(n);

  charclass::LemmaOptions lo;
  lo.use_printed_spin6_weights = o.printed_spin6_weights;
  const auto rep = charclass::verify_lemma_cohomo(n, lo);

  {
    Json rho = Json::object();
    for (const auto& [label, ws] : rep.rho)
      rho[label] = {{"kind", charclass::to_string(ws.kind)}, {"weights", weights_text(ws.weights, rep.variables)}};
    Step s{"torus weights read off from the induced action", cite, true};
    s.witness = {{"variables", rep.variables},
                 {"pi", weights_text(rep.pi.weights, rep.variables)},
                 {"pi_zero_weights", rep.pi.zero_count},
                 {"pi_orientation", rep.pi.orientation},
                 {"rho", rho},
                 {"notes", strings(rep.notes)}};
    r.steps.push_back(std::move(s));
  }
  for (const auto& c : rep.checks) {
    Step s{c.name, cite, c.holds};
    s.witness = {{"lhs", c.lhs.to_string()}, {"rhs", c.rhs.to_string()}};
    if (c.up_to_sign) s.witness["sign"] = c.sign;
    r.steps.push_back(std::move(s));
  }
  return r;
}

// ---------------------------------------------------------------------------

Report cmd_classify(int n, long p1, std::optional<long> euler, const RunOptions& o) {
  Json inputs = {{"n", n}, {"p1", p1}};
  inputs["euler"] = euler ? Json(*euler) : Json(nullptr);
  Report r = start("classify", std::move(inputs), o);
  const std::string cite = "Theorem main (" + std::to_string(theorem_clause(n)) + ")";

  ktheory::ClassificationCertificate c;
  try {
    c = ktheory::classify_spin_bundles(n, p1, euler);
  } catch (const ktheory::ParityError& e) {
    Step s{"characteristic data satisfy the parity constraint", cite, false};
    s.witness = {{"condition", e.condition()}, {"error", e.what()}};
    r.steps.push_back(std::move(s));
    return r;
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("classify: ") + e.what());
  }

  {
    Step s{"characteristic data satisfy the parity constraint", cite, true};
    s.witness = {{"relation", c.relation}, {"constraints", strings(c.constraints)}, {"multiplier", c.multiplier}, {"k", c.k}};
    if (c.l) s.witness["l"] = *c.l;
    r.steps.push_back(std::move(s));
  }
  {
    const auto expected = expected_bundle_count(n, c.k);
    Step s{"number of Spin(" + std::to_string(n) + ")-bundles with these classes", cite, c.count == expected};
    s.witness = {{"group", c.group},
                 {"fiber", strings(c.fiber)},
                 {"spin_structures", c.spin_structures},
                 {"count", c.count},
                 {"expected", expected},
                 {"window", c.window},
                 {"notes", strings(c.notes)}};
    r.steps.push_back(std::move(s));
  }
  return r;
}

// ---------------------------------------------------------------------------

Report cmd_embed(const RunOptions& o) {
  Report r = start("embed", {{"tamper", o.tamper_other_candidate ? "other-candidate" : "none"}, {"swap_labels", o.swap_labels}}, o);
  embed::EmbeddingOptions eo;
  eo.tamper_other_candidate = o.tamper_other_candidate;
  eo.swap_labels = o.swap_labels;
  const auto cert = embed::verify_embedding(eo);
  for (const auto& st : cert.steps) {
    Step s{st.id + " " + st.claim, st.citation, st.passed};
    s.witness = {{"lines", strings(st.witness)}};
    r.steps.push_back(std::move(s));
  }
  if (!r.steps.empty()) {
    auto& last = r.steps.back().witness;
    last["chosen_E"] = cert.chosen.rho ? ktheory::to_string(*cert.chosen.rho) : std::string("unknown");
    if (cert.failed_step) last["failed_step"] = *cert.failed_step;
    last["notes"] = strings(cert.notes);
  }
  return r;
}

Report cmd_tensor(const RunOptions& o) {
  check_samples(o);
  Report r = start("tensor", {{"samples", o.samples}}, o);
  ExactSampler sampler(o.seed);
  bool product = true, stabilizer = true, spin5 = true, commutes = true;
  for (int k = 0; k < o.samples; ++k) {
    const auto u = lambda2::sample_spin3(sampler);
    const auto g = lambda2::sample_so2(sampler);
    const auto rep = lambda2::kronecker_lift_check(u, g);
    product = product && rep.lift_is_product && rep.lift_unitary;
    stabilizer = stabilizer && rep.lift_in_stabilizer;
    spin5 = spin5 && rep.lift_matches_spin5;
    commutes = commutes && rep.diagram_commutes;
  }
  std::vector<int> order(lambda2::kTensorBlockOrder.begin(), lambda2::kTensorBlockOrder.end());
  const Json w = {{"samples", o.samples}, {"block_order", order}};
  r.steps.push_back({"Kronecker lift is unitary and equals the product of the factors", "Lemma tensor", product, w});
  r.steps.push_back({"lift fixes omega_1", "Lemma tensor", stabilizer, w});
  r.steps.push_back({"lift lies in the Spin5 block template", "Lemma tensor", spin5, w});
  r.steps.push_back({"induced action is the block join of the factor actions", "Lemma tensor", commutes, w});
  return r;
}

Report cmd_infrastructure(const RunOptions& o) {
  check_samples(o);
  Report r = start("infrastructure", {{"samples", o.samples}}, o);
  ExactSampler sampler(o.seed);
  const std::string cite = "exact arithmetic infrastructure";
  bool mixed = true, null_ok = true, unitary = true;
  std::size_t null_vectors = 0;
  for (int k = 0; k < o.samples; ++k) {
    const auto a = sampler.matrix(2, 3), b = sampler.matrix(2, 2), c = sampler.matrix(3, 2), d = sampler.matrix(2, 3);
    mixed = mixed && exact::kronecker(a, b) * exact::kronecker(c, d) == exact::kronecker(a * c, b * d);

    const auto m = sampler.matrix(3, 5);
    const auto basis = exact::nullspace(m);
    null_ok = null_ok && basis.size() + exact::rank(m) == m.cols();
    for (const auto& v : basis) null_ok = null_ok && (m * v).is_zero() && !v.is_zero();
    null_vectors += basis.size();

    unitary = unitary && exact::is_unitary(exact::cayley_unitary(sampler.skew_hermitian(4)));
  }
  r.steps.push_back({"(A (x) B)(C (x) D) = AC (x) BD", cite, mixed, {{"samples", o.samples}}});
  r.steps.push_back({"nullspace vectors satisfy m v = 0 and rank + nullity = columns", cite, null_ok,
                     {{"samples", o.samples}, {"vectors", null_vectors}}});
  r.steps.push_back({"Cayley transform of a skew-Hermitian matrix is unitary", cite, unitary, {{"samples", o.samples}}});
  return r;
}

// ---------------------------------------------------------------------------

Report cmd_all(const RunOptions& o) {
  check_samples(o);
  Report r = start("all", {{"samples", o.samples}, {"printed_spin6_weights", o.printed_spin6_weights}}, o);

  for (int n = 1; n <= kMaxCliffordN; ++n) append(r, cmd_clifford(n, o), "clifford n=" + std::to_string(n));
  for (const char* set : {"1", "1,2", "1,2,6", "1,3,4,5", "1,2,5,6"})
    append(r, cmd_stabilizer(set, o), std::string("stabilizer {") + set + "}");
  append(r, cmd_tensor(o), "tensor");
  for (int n = 3; n <= 6; ++n) append(r, cmd_lemma_cohomo(n, o), "lemma-cohomo n=" + std::to_string(n));

  // Classification sweep over k, l in -3..3 for every admissible clause.
  {
    struct Tally {
      std::size_t cases = 0;
      bool ok = true;
      std::vector<std::size_t> counts;
    };
    std::vector<std::pair<int, Tally>> tallies;
    Tally zero_line;
    auto record = [&](int n, Tally& t, const ktheory::ClassificationCertificate& c, long k) {
      ++t.cases;
      t.ok = t.ok && c.count == expected_bundle_count(n, k);
      if (std::find(t.counts.begin(), t.counts.end(), c.count) == t.counts.end()) t.counts.push_back(c.count);
    };
    for (int n = 2; n <= 12; ++n) {
      Tally t;
      for (long k = -3; k <= 3; ++k) {
        if (n == 2) {
          const auto c = ktheory::classify_spin_bundles(2, 4 * k * k);
          record(2, k == 0 ? zero_line : t, c, c.k);
        } else if (n == 3) {
          record(n, t, ktheory::classify_spin_bundles(3, 4 * k), k);
        } else if (n == 4) {
          for (long l = -3; l <= 3; ++l)
            if ((k - l) % 2 == 0) record(n, t, ktheory::classify_spin_bundles(4, 2 * k, l), k);
        } else if (n == 6) {
          for (long l = -3; l <= 3; ++l) record(n, t, ktheory::classify_spin_bundles(6, 2 * k, 2 * l), k);
        } else {
          record(n, t, ktheory::classify_spin_bundles(n, 2 * k), k);
        }
      }
      tallies.emplace_back(n, std::move(t));
    }
    for (const auto& [n, t] : tallies) {
      Step s{"classify: count is " + std::to_string(expected_bundle_count(n, 1)) + " for rank " + std::to_string(n) +
                 (n == 2 ? " with k != 0" : "") + " across k, l in -3..3",
             "Theorem main (" + std::to_string(theorem_clause(n)) + ")", t.ok};
      s.witness = {{"cases", t.cases}, {"observed_counts", t.counts}};
      r.steps.push_back(std::move(s));
    }
    Step s{"classify: rank 2 with k = 0 has a single bundle", "Theorem main (1)", zero_line.ok && zero_line.cases == 1};
    s.witness = {{"cases", zero_line.cases}, {"observed_counts", zero_line.counts}};
    r.steps.push_back(std::move(s));
  }

  append(r, cmd_embed(o), "embed");
  append(r, cmd_infrastructure(o), "infrastructure");
  return r;
}

// ---------------------------------------------------------------------------

Json to_json(const Report& r) {
  Json steps = Json::array();
  for (const auto& s : r.steps)
    steps.push_back({{"claim", s.claim}, {"citation", s.citation}, {"verdict", s.verdict ? "pass" : "fail"}, {"witness", s.witness}});
  return {{"command", r.command},
          {"inputs", r.inputs},
          {"seed", r.seed},
          {"steps", steps},
          {"verdict", r.verdict() ? "pass" : "fail"}};
}

std::string to_text(const Report& r) {
  std::ostringstream out;
  out << r.command << " " << r.inputs.dump() << " seed=" << r.seed << "\n";
  for (const auto& s : r.steps) {
    out << (s.verdict ? "[pass] " : "[FAIL] ") << s.claim << "  (" << s.citation << ")\n";
    for (const auto& [key, value] : s.witness.items()) {
      if (value.is_array() && !value.empty() && value.front().is_string()) {
        out << "         " << key << ":\n";
        for (const auto& line : value) out << "           " << line.get<std::string>() << "\n";
      } else {
        out << "         " << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
      }
    }
  }
  out << "verdict: " << (r.verdict() ? "pass" : "fail") << "\n";
  return out.str();
}

}  // namespace spinclass::report

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spinclass/ktheory.hpp"

namespace spinclass::embed {

using ktheory::BundleDescriptor;
using ktheory::CohCP3;
using ktheory::KSPClass;

/// Named quaternionic bundle appearing with an integer coefficient.
struct KSPTerm {
  std::string label;
  long coefficient = 1;
  /// Quaternionic rank of the bundle itself.
  int quaternionic_rank = 1;
  long sp1 = 0;
  /// Torsion bit of the reduced class, when known.
  std::optional<int> torsion;
  /// Which rewrite rule produced the term.
  std::string provenance;
};

/// Formal integer combination of classes in KSP~(CP^3).
class KSPExpr {
 public:
  KSPExpr() = default;
  explicit KSPExpr(KSPTerm t) { terms_.push_back(std::move(t)); }

  const std::vector<KSPTerm>& terms() const { return terms_; }
  KSPExpr& add(KSPTerm t);

  friend KSPExpr operator+(KSPExpr a, const KSPExpr& b);
  friend KSPExpr operator*(long c, KSPExpr a);
  friend KSPExpr operator-(const KSPExpr& a, const KSPExpr& b) { return a + (-1) * b; }

  long sp1() const;
  /// Sum of coefficient * quaternionic rank.
  long quaternionic_rank() const;
  bool all_coefficients_even() const;
  /// Defined when every odd-coefficient term has known torsion.
  std::optional<KSPClass> evaluate() const;

  std::string to_string() const;

 private:
  std::vector<KSPTerm> terms_;
};

/// eta = (H (x)_C H)_R: rank 2, e = 2x, p1 = 4x^2, w2 = 0.
BundleDescriptor eta_descriptor();
/// Normal bundle of CP^3 in R^9: rank 3, p1 = -4x^2, w2 = 0.
BundleDescriptor normal_descriptor();

struct ESolution {
  std::pair<BundleDescriptor, BundleDescriptor> candidates;
  ktheory::ClassificationCertificate classification;
  std::vector<std::string> derivation;
};

/// Bundles E with eta + E and N + 2 sharing rank, p1 and w2.
ESolution solve_for_E();

/// The candidate whose rho-class is divisible by two. Throws
/// std::invalid_argument for malformed candidates and std::domain_error
/// unless exactly one is divisible.
BundleDescriptor select_E(const std::pair<BundleDescriptor, BundleDescriptor>& candidates);

/// rho of a 3 + 2 spin split as a tensor-factored expression. A trivial
/// 2-plane factor doubles the rank-3 factor.
KSPExpr tensor_rewrite(const BundleDescriptor& rank3, const BundleDescriptor& rank2);

struct RewriteStep {
  std::string claim;
  std::string rule;
  KSPExpr expr;
  long sp1 = 0;
  long quaternionic_rank = 0;
  /// sp1 and quaternionic rank agree with the previous step.
  bool consistent = true;
};

struct CertificateStep {
  std::string id;
  std::string claim;
  std::string citation;
  bool passed = false;
  std::vector<std::string> witness;
};

struct EmbeddingOptions {
  /// Pick the candidate whose rho-class is not divisible by two.
  bool tamper_other_candidate = false;
  /// Present the two candidates in the opposite order.
  bool swap_labels = false;
};

struct EmbeddingCertificate {
  BundleDescriptor eta;
  BundleDescriptor normal;
  std::vector<BundleDescriptor> candidates;
  BundleDescriptor chosen;
  std::vector<std::pair<std::string, CohCP3>> p1_ledger;
  std::vector<std::pair<std::string, int>> w2_ledger;
  std::vector<std::string> axioms;
  std::optional<KSPClass> rho_normal_sum;
  std::optional<KSPClass> rho_e_eta;
  bool normal_sum_divisible = false;
  bool e_eta_divisible = false;
  std::vector<RewriteStep> normal_chain;
  std::vector<RewriteStep> e_eta_chain;
  std::vector<CertificateStep> steps;
  std::optional<std::string> failed_step;
  bool verdict = false;
  std::vector<std::string> notes;
};

EmbeddingCertificate verify_embedding(const EmbeddingOptions& options = {});

}  // namespace spinclass::embed

#include "doctest.h"
#include "spinclass/charclass.hpp"
#include "spinclass/ktheory.hpp"

using namespace spinclass::ktheory;

TEST_CASE("cohomology ring of CP3") {
  auto x = CohCP3::x_power(1);
  CHECK((x * x).to_string() == "x^2");
  CHECK((x * x * x * x) == CohCP3{});
  CHECK(CohCP3(1, 2, 0, 0).to_string() == "1 + 2x");
  CHECK((-4 * CohCP3::x_power(2)).to_string() == "-4x^2");
  CHECK(CohCP3{}.to_string() == "0");
  CHECK_THROWS(CohCP3::x_power(4));
  // c1(H (x) H) = 2x gives p1 = e^2 = 4x^2
  auto e = 2 * x;
  CHECK(e * e == CohCP3::x_power(2, 4));
}

TEST_CASE("KSP~(CP3) is Z + Z/2") {
  const KSPClass zero;
  for (long a = -3; a <= 3; ++a)
    for (int t = 0; t < 2; ++t) {
      KSPClass u(a, t);
      CHECK(u + zero == u);
      CHECK(u + (-u) == zero);
      CHECK(2 * u == KSPClass(2 * a, 0));
      CHECK(u + u == 2 * u);
      for (long b = -2; b <= 2; ++b)
        for (int s = 0; s < 2; ++s) {
          KSPClass v(b, s);
          CHECK(u + v == v + u);
          CHECK((u + v) + KSPClass(1, 1) == u + (v + KSPClass(1, 1)));
        }
    }
  CHECK(KSPClass(0, 1) + KSPClass(0, 1) == zero);
  CHECK(KSPClass(3, 3).torsion() == 1);
  CHECK(KSPClass(2, 1).to_string() == "(2,1)");
}

TEST_CASE("sp1 and divisibility") {
  CHECK(sp1_of_ksp(KSPClass(0, 0)) == 0);
  CHECK(sp1_of_ksp(KSPClass(2, 1)) == 2);
  for (long m = -5; m <= 5; ++m) CHECK(sp1_of_ksp(KSPClass(m, 0)) == m);

  CHECK(divisible_by_two(KSPClass(2, 0)));
  CHECK_FALSE(divisible_by_two(KSPClass(2, 1)));
  CHECK(divisible_by_two(KSPClass(0, 0)));
  CHECK_FALSE(divisible_by_two(KSPClass(1, 0)));

  // divisible_by_two(k) iff some j has j + j == k, by exhaustive search.
  for (long a = -6; a <= 6; ++a)
    for (int t = 0; t < 2; ++t) {
      KSPClass k(a, t);
      bool exists = false;
      for (long b = -6; b <= 6; ++b)
        for (int s = 0; s < 2; ++s) exists = exists || KSPClass(b, s) + KSPClass(b, s) == k;
      CHECK(divisible_by_two(k) == exists);
      CHECK(divisible_by_two(k) == divisible_by_two(-k));
      auto h = half(k);
      CHECK(h.has_value() == exists);
      if (h) CHECK(*h + *h == k);
    }
}

TEST_CASE("Chern image and K classes") {
  CHECK(chern_image_member(0, 0, 2));
  CHECK_FALSE(chern_image_member(1, 5, 3));
  CHECK(chern_image_member(0, 0, 0));
  CHECK_THROWS_AS(KClass(0, 0, 1), std::invalid_argument);
  CHECK(KClass(0, -1, 2).to_string() == "c = 1 - x^2 + 2x^3");
}

TEST_CASE("rho group table and descriptors") {
  CHECK(rho_group_for_rank(3) == RhoGroup::KSP);
  CHECK(rho_group_for_rank(4) == RhoGroup::KSPPair);
  CHECK(rho_group_for_rank(5) == RhoGroup::KSP);
  CHECK(rho_group_for_rank(6) == RhoGroup::K);
  CHECK(rho_group_for_rank(7) == RhoGroup::KO);
  CHECK(rho_group_for_rank(8) == RhoGroup::KOPair);
  CHECK(rho_group_for_rank(2) == RhoGroup::K);
  CHECK(rho_group_for_rank(11) == RhoGroup::KSP);
  CHECK_THROWS(rho_group_for_rank(0));

  BundleDescriptor d{"E", 3, CohCP3::x_power(2, -8), 0, std::nullopt, KSPClass(-2, 0)};
  CHECK_NOTHROW(d.validate());
  d.rho = KOClass{1};
  CHECK_THROWS_AS(d.validate(), std::invalid_argument);
  d.rho.reset();
  d.euler = CohCP3::x_power(1, 2);
  CHECK_THROWS_AS(d.validate(), std::invalid_argument);
  BundleDescriptor bad{"B", 2, CohCP3::x_power(1, 1), 0, std::nullopt, std::nullopt};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("Whitney sum of p1") {
  BundleDescriptor e{"E", 3, CohCP3::x_power(2, -8), 0, std::nullopt, std::nullopt};
  BundleDescriptor eta{"eta", 2, CohCP3::x_power(2, 4), 0, CohCP3::x_power(1, 2), std::nullopt};
  CHECK(whitney_p1(e, eta) == CohCP3::x_power(2, -4));
  CHECK(whitney_p1(e, trivial_bundle(2)) == e.p1);
  CHECK(whitney_p1(e, eta) == whitney_p1(eta, e));
  auto s = direct_sum(e, eta);
  CHECK(s.rank == 5);
  CHECK(s.w2 == 0);
  CHECK(s.name == "E+eta");
}

TEST_CASE("classification examples") {
  CHECK(classify_spin_bundles(3, 4).count == 2);
  CHECK(classify_spin_bundles(4, 2, 3).count == 4);
  CHECK(classify_spin_bundles(8, 2).count == 1);
  CHECK(classify_spin_bundles(5, 2).count == 2);
  CHECK(classify_spin_bundles(6, 2, 2).count == 1);

  auto c = classify_spin_bundles(3, -8);
  CHECK(c.fiber == std::vector<std::string>{"(-2,0)", "(-2,1)"});
  CHECK(c.k == -2);
  CHECK(c.spin_structures == 1);

  auto c6 = classify_spin_bundles(6, 2, 2);
  CHECK(c6.fiber == std::vector<std::string>{"c = 1 - x^2 - 2x^3"});
}

TEST_CASE("classification parity errors name the condition") {
  try {
    classify_spin_bundles(3, 2);
    FAIL("expected ParityError");
  } catch (const ParityError& e) {
    CHECK(e.condition() == "p1 = 4k");
  }
  CHECK_THROWS_AS(classify_spin_bundles(5, 3), ParityError);
  CHECK_THROWS_AS(classify_spin_bundles(6, 2, 3), ParityError);
  CHECK_THROWS_AS(classify_spin_bundles(4, 2, 2), ParityError);
  CHECK_THROWS_AS(classify_spin_bundles(2, 8), ParityError);
  CHECK_THROWS_AS(classify_spin_bundles(2, -4), ParityError);
  CHECK_THROWS_AS(classify_spin_bundles(9, 1), ParityError);
  CHECK_THROWS_AS(classify_spin_bundles(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(classify_spin_bundles(5, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(classify_spin_bundles(1, 0), std::invalid_argument);
}

TEST_CASE("counts match the fiber structure across a sweep") {
  for (long k = -3; k <= 3; ++k) {
    CHECK(classify_spin_bundles(3, 4 * k).count == 2);
    CHECK(classify_spin_bundles(5, 2 * k).count == 2);
    for (int n = 7; n <= 12; ++n) CHECK(classify_spin_bundles(n, 2 * k).count == 1);
    for (long l = -3; l <= 3; ++l) {
      CHECK(classify_spin_bundles(6, 2 * k, 2 * l).count == 1);
      if ((k - l) % 2 == 0) CHECK(classify_spin_bundles(4, 2 * k, l).count == 4);
    }
    // Spin2: c1 = +-k gives two bundles unless k = 0.
    CHECK(classify_spin_bundles(2, 4 * k * k).count == (k == 0 ? 1u : 2u));
  }
}

TEST_CASE("Euler sign conventions agree with the torus computation") {
  using spinclass::charclass::verify_lemma_cohomo;
  CHECK(verify_lemma_cohomo(4).checks.back().sign == kSpin4EulerSign);
  CHECK(verify_lemma_cohomo(6).checks.back().sign == kSpin6EulerSign);
}

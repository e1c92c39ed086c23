#include "doctest.h"
#include "oracles.hpp"
#include "spinclass/clifford.hpp"

using namespace spinclass::clifford;
using spinclass::exact::ExactSampler;

namespace {

CliffordElement e(int n, std::vector<int> idx) { return CliffordElement::blade(n, idx); }

CliffordElement random_element(int n, ExactSampler& s, int terms = 4) {
  CliffordElement out(n);
  for (int k = 0; k < terms; ++k) {
    auto b = static_cast<Blade>(s.integer(0, (1L << n) - 1));
    out += CliffordElement(n, b, s.rational(4));
  }
  return out;
}

}  // namespace

TEST_CASE("blade sign agrees with the bubble-sort oracle for n <= 6") {
  for (Blade a = 0; a < 64; ++a)
    for (Blade b = 0; b < 64; ++b) {
      auto [sign, idx] = oracle::blade_product(oracle::mask_indices(a), oracle::mask_indices(b));
      CHECK(blade_product_sign(a, b) == sign);
      CHECK(oracle::mask_indices(a ^ b) == idx);
    }
}

TEST_CASE("cl_mul worked examples") {
  CHECK(e(3, {1}) * e(3, {1}) == CliffordElement::scalar(3, -1));
  CHECK(e(3, {1, 2}) * e(3, {2, 3}) == e(3, {1, 3}) * Rational(-1));
  CHECK(e(3, {1, 2, 3}) * e(3, {1, 2, 3}) == CliffordElement::scalar(3, 1));
  CHECK_THROWS_AS(e(3, {1}) * e(4, {1}), std::invalid_argument);
  CHECK_THROWS(CliffordElement::blade(3, {2, 1}));
  CHECK_THROWS(CliffordElement::generator(3, 4));
}

TEST_CASE("zero coefficients are never stored") {
  auto x = e(2, {1}) + e(2, {1}) * Rational(-1);
  CHECK(x.is_zero());
  CHECK(x.terms().empty());
  CHECK((e(2, {1}) * Rational(0)).terms().empty());
}

TEST_CASE("generators anticommute and square to -1 for n <= 8") {
  for (int n = 1; n <= 8; ++n)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        auto ei = CliffordElement::generator(n, i), ej = CliffordElement::generator(n, j);
        if (i == j) {
          CHECK(ei * ei == CliffordElement::scalar(n, -1));
        } else {
          CHECK((ei * ej + ej * ei).is_zero());
        }
      }
}

TEST_CASE("cl_mul is associative on basis blade triples for n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    const Blade count = Blade{1u} << n;
    bool ok = true;
    for (Blade a = 0; a < count && ok; ++a)
      for (Blade b = 0; b < count && ok; ++b)
        for (Blade c = 0; c < count && ok; ++c) {
          CliffordElement x(n, a), y(n, b), z(n, c);
          ok = (x * y) * z == x * (y * z);
        }
    CHECK_MESSAGE(ok, "n = " << n);
  }
}

TEST_CASE("even_part") {
  auto x = CliffordElement::scalar(3, 1) + e(3, {1}) + e(3, {1, 2});
  CHECK(even_part(x) == CliffordElement::scalar(3, 1) + e(3, {1, 2}));
  CHECK(even_part(e(3, {1, 2, 3})).is_zero());
  ExactSampler s(2);
  for (int k = 0; k < 30; ++k) {
    auto r = random_element(5, s);
    CHECK(even_part(even_part(r)) == even_part(r));
  }
}

TEST_CASE("even_iso examples") {
  CHECK(even_iso(CliffordElement::scalar(3, 1)) == CliffordElement::scalar(4, 1));
  // (e1 e4)(e2 e4) = -e1 e4 e4 e2 = e1 e2
  CHECK(even_iso(e(3, {1, 2})) == e(4, {1, 2}));
  CHECK(even_iso(e(3, {1})) == e(4, {1, 4}));
}

TEST_CASE("even_iso is multiplicative on all blade pairs for n <= 8") {
  for (int n = 2; n <= 8; ++n) {
    const int m = n - 1;
    const Blade count = Blade{1u} << m;
    std::vector<CliffordElement> images;
    for (Blade b = 0; b < count; ++b) images.push_back(even_iso(CliffordElement(m, b)));
    bool ok = true;
    for (Blade a = 0; a < count && ok; ++a)
      for (Blade b = 0; b < count && ok; ++b)
        ok = even_iso(CliffordElement(m, a) * CliffordElement(m, b)) == images[a] * images[b];
    CHECK_MESSAGE(ok, "n = " << n);
  }
}

TEST_CASE("even_iso is a bijection onto the even part for n <= 8") {
  for (int n = 2; n <= 8; ++n) {
    const int m = n - 1;
    const Blade count = Blade{1u} << m;
    spinclass::exact::ExactMatrix coords(std::size_t{1} << n, count);
    bool all_even = true;
    for (Blade b = 0; b < count; ++b) {
      auto img = even_iso(CliffordElement(m, b));
      all_even = all_even && even_part(img) == img;
      for (const auto& [blade, c] : img.terms()) coords(blade, b) = c;
    }
    CHECK(all_even);
    // dim Cl_n^0 = 2^{n-1} = number of basis images
    CHECK(spinclass::exact::rank(coords) == count);
  }
}

TEST_CASE("irrep_table counts and field types") {
  auto t3 = irrep_table(3);
  CHECK(t3.count == 2);
  CHECK(t3.field == FieldType::Quaternionic);
  auto t9 = irrep_table(9);
  CHECK(t9.count == 1);
  CHECK(t9.field == FieldType::Complex);
  CHECK(irrep_table(1).count == 1);
  CHECK_THROWS_AS(irrep_table(0), std::invalid_argument);
  CHECK_THROWS_AS(irrep_table(-3), std::invalid_argument);

  for (int n = 1; n <= 24; ++n) {
    auto a = irrep_table(n), b = irrep_table(n + 8);
    CHECK(a.count == b.count);
    CHECK(a.field == b.field);
    CHECK(b.dimension_over_field == 16 * a.dimension_over_field);
  }
}

TEST_CASE("signature of small symmetric forms") {
  using R = Rational;
  CHECK(signature({{R(1), R(0)}, {R(0), R(-3)}}) == std::pair<long, long>{1, 1});
  CHECK(signature({{R(0), R(1)}, {R(1), R(0)}}) == std::pair<long, long>{1, 1});
  CHECK(signature({{R(2), R(1)}, {R(1), R(2)}}) == std::pair<long, long>{2, 0});
  CHECK(signature({{R(1), R(1)}, {R(1), R(1)}}) == std::pair<long, long>{1, 0});
  CHECK(signature({{R(0), R(0)}, {R(0), R(0)}}) == std::pair<long, long>{0, 0});
}

TEST_CASE("structure decomposition reproduces the stored module dimensions") {
  for (int n = 1; n <= 8; ++n) {
    auto s = decompose_structure(n);
    auto t = irrep_table(n);
    CHECK_MESSAGE(s.field == t.field, "n = " << n);
    CHECK_MESSAGE(s.simple_components == t.count, "n = " << n);
    CHECK_MESSAGE(s.matrix_size == t.dimension_over_field, "n = " << n);
    // M_m(D): real dimension m^2 * dim D, and the components fill Cl_n.
    CHECK(s.component_dimension == s.matrix_size * s.matrix_size * real_dimension(s.field));
    CHECK(s.component_dimension * s.simple_components == (1L << n));
  }
}

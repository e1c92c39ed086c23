#include "doctest.h"
#include "spinclass/lambda2.hpp"

using namespace spinclass::lambda2;
using spinclass::exact::ExactSampler;
using spinclass::exact::make_rational;

namespace {

const GaussianRational kI = GaussianRational::imaginary_unit();

}  // namespace

TEST_CASE("wedge coordinates are antisymmetric") {
  CHECK(wedge(2, 1) == -wedge(1, 2));
  CHECK(wedge(3, 4).coefficient(4, 3) == GaussianRational(-1));
  CHECK(wedge(1, 1).is_zero());
  CHECK_THROWS(wedge(0, 2));
  FormMatrix m(omega(1));
  CHECK(m.form() == omega(1));
  CHECK_THROWS(FormMatrix(ExactMatrix::identity(4)));
}

TEST_CASE("omega examples") {
  CHECK(omega(1) == kI * wedge(1, 2) + kI * wedge(3, 4));
  CHECK(omega(2) == wedge(1, 2) - wedge(3, 4));
  CHECK(omega(6) == wedge(1, 4) - wedge(2, 3));
  CHECK_THROWS_AS(omega(0), std::invalid_argument);
  CHECK_THROWS_AS(omega(7), std::invalid_argument);
}

TEST_CASE("hodge star on the basis") {
  CHECK(hodge_star(wedge(1, 2)) == wedge(3, 4));
  CHECK(hodge_star(wedge(1, 3)) == wedge(4, 2));
  CHECK(hodge_star(wedge(2, 4)) == wedge(3, 1));
  for (const auto& [i, j] : kWedgeBasis) CHECK(hodge_star(hodge_star(wedge(i, j))) == wedge(i, j));
}

TEST_CASE("omegas are anti-self-dual and orthonormal") {
  for (int a = 1; a <= 6; ++a) {
    CHECK_MESSAGE(antiselfdual_check(omega(a)), "omega_" << a);
    for (int b = 1; b <= 6; ++b) CHECK(inner_product(omega(a), omega(b)) == GaussianRational(a == b ? 1 : 0));
  }
  CHECK_FALSE(antiselfdual_check(wedge(1, 2) + wedge(3, 4)));
  CHECK(antiselfdual_check(TwoForm{}));
}

TEST_CASE("index sets") {
  CHECK(make_index_set({6, 1, 2}) == FormIndexSet{1, 2, 6});
  CHECK(complement({1, 2, 6}) == FormIndexSet{3, 4, 5});
  CHECK(to_string(FormIndexSet{1, 2}) == "{1,2}");
  CHECK_THROWS_AS(make_index_set({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(make_index_set({0}), std::invalid_argument);
  CHECK_THROWS_AS(make_index_set({7}), std::invalid_argument);
}

TEST_CASE("star condition examples") {
  for (int i = 1; i <= 6; ++i) CHECK(star_condition(ExactMatrix::identity(4), i));

  auto u = spin3_element(GaussianRational(make_rational(3, 5)), GaussianRational(make_rational(4, 5)));
  for (int i : {1, 2, 6}) CHECK_MESSAGE(star_condition(u, i), "i = " << i);

  ExactSampler s;
  auto generic = spinclass::exact::cayley_unitary(s.skew_hermitian(4));
  CHECK_FALSE(star_condition(generic, 1));
  CHECK_THROWS(star_condition(ExactMatrix::identity(3), 1));
}

TEST_CASE("star condition agrees with the bilinear form condition on unitaries") {
  ExactSampler s(41);
  const auto spec = stabilizer_space({1});
  for (int k = 0; k < 10; ++k) {
    auto generic = spinclass::exact::cayley_unitary(s.skew_hermitian(4));
    auto inside = sample_stabilizer_element(spec, s);
    for (int i = 1; i <= 6; ++i) {
      CHECK(star_condition(generic, i) == bilinear_condition(generic, i));
      CHECK(star_condition(inside, i) == bilinear_condition(inside, i));
    }
    CHECK(star_condition(inside, 1));
  }
}

TEST_CASE("stabilizer dimensions and block templates") {
  struct Row {
    FormIndexSet fixed;
    std::size_t dim;
    BlockPattern pattern;
  };
  const std::vector<Row> rows = {
      {{1}, 16, BlockPattern::Spin5},
      {{1, 2}, 8, BlockPattern::Spin4},
      {{1, 2, 6}, 4, BlockPattern::Spin3},
      {{1, 3, 4, 5}, 2, BlockPattern::SO2},
  };
  for (const auto& r : rows) {
    auto spec = stabilizer_space(r.fixed);
    CHECK_MESSAGE(spec.real_dimension() == r.dim, to_string(r.fixed));
    CHECK(real_rank(spec.solution_basis) == spec.real_dimension());
    CHECK(pattern_match(spec, r.pattern));
    CHECK(pattern_fixed_set(r.pattern) == r.fixed);
    for (const auto& b : spec.solution_basis)
      for (int i : r.fixed) CHECK(star_condition(b, i));
  }
  CHECK_FALSE(pattern_match(stabilizer_space({1, 2}), BlockPattern::Spin5));
  CHECK_FALSE(pattern_match(stabilizer_space({1}), BlockPattern::Spin4));

  auto spin2 = stabilizer_space(pattern_fixed_set(BlockPattern::Spin2));
  CHECK(spin2.real_dimension() == 2);
  CHECK(pattern_match(spin2, BlockPattern::Spin2));
}

TEST_CASE("pattern names") {
  CHECK(pattern_from_name("Spin4") == BlockPattern::Spin4);
  CHECK(pattern_from_name("SO2") == BlockPattern::SO2);
  CHECK(to_string(BlockPattern::Spin3) == "Spin3");
  CHECK_THROWS_AS(pattern_from_name("Spin7"), std::invalid_argument);
}

TEST_CASE("induced actions") {
  ExactSampler s(5);
  for (int k = 0; k < 10; ++k) {
    auto u = sample_spin3(s);
    REQUIRE(spinclass::exact::is_unitary(u));
    auto r = induced_orthogonal_action(u, {1, 2, 6});
    CHECK(r.rows() == 3);
    CHECK(is_special_orthogonal(r));
    // -u acts trivially on 2-forms.
    CHECK(induced_orthogonal_action(-u, {1, 2, 6}) == r);
  }
  CHECK(induced_orthogonal_action(-ExactMatrix::identity(4), {1}).is_identity());

  auto spec = stabilizer_space({1});
  for (int k = 0; k < 10; ++k) {
    auto u = sample_stabilizer_element(spec, s), v = sample_stabilizer_element(spec, s);
    auto ru = induced_orthogonal_action(u, {1}), rv = induced_orthogonal_action(v, {1});
    CHECK(is_special_orthogonal(ru));
    CHECK(induced_orthogonal_action(u * v, {1}) == ru * rv);
  }

  for (int k = 0; k < 5; ++k) {
    auto r = induced_orthogonal_action(sample_so2(s), {1, 3, 4, 5});
    CHECK(r.rows() == 2);
    CHECK(is_special_orthogonal(r));
  }

  auto generic = spinclass::exact::cayley_unitary(s.skew_hermitian(4));
  CHECK_THROWS_AS(induced_orthogonal_action(generic, {1}), SpanError);
}

TEST_CASE("kronecker lift commutes with the induced actions") {
  auto id = kronecker_lift_check(ExactMatrix::identity(4), ExactMatrix::identity(4));
  CHECK(id.passed());
  CHECK(id.lift.is_identity());

  auto u = spin3_element(GaussianRational(make_rational(3, 5)), GaussianRational(make_rational(4, 5)));
  auto r = so2_element(make_rational(5, 13), make_rational(12, 13));
  auto rep = kronecker_lift_check(u, r);
  CHECK(rep.lift_is_product);
  CHECK(rep.lift_unitary);
  CHECK(rep.lift_in_stabilizer);
  CHECK(rep.lift_matches_spin5);
  CHECK(rep.diagram_commutes);
  CHECK(rep.block_order == std::array<int, 5>{3, 4, 5, 2, 6});

  ExactSampler s(99);
  for (int k = 0; k < 20; ++k) CHECK(kronecker_lift_check(sample_spin3(s), sample_so2(s)).passed());

  CHECK_THROWS_AS(kronecker_lift_check(r, u), std::invalid_argument);
}

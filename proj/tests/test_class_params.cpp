#include <doctest.h>

#include <cmath>
#include <numbers>

#include "schlicht/bounds.hpp"
#include "schlicht/class_params.hpp"
#include "schlicht/errors.hpp"
#include "schlicht/json_io.hpp"
#include "support.hpp"

using namespace schlicht;
using testing::cd;

namespace {

void check_seq(const std::vector<double>& got, const std::vector<double>& want) {
  REQUIRE(got.size() == want.size());
  for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-15));
}

bool close(cd a, cd b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace

TEST_CASE("validation rejects out-of-domain parameters") {
  CHECK_NOTHROW(make_class_params(cd(1), 0.0, 1.0, -1.0));
  CHECK_THROWS_AS(make_class_params(cd(0), 0.0, 1.0, -1.0), ParameterDomainError);
  CHECK_THROWS_AS(make_class_params(cd(1), -0.1, 1.0, -1.0), ParameterDomainError);
  CHECK_THROWS_AS(make_class_params(cd(1), 1.1, 1.0, -1.0), ParameterDomainError);
  CHECK_THROWS_AS(make_class_params(cd(1), 0.0, -0.5, 0.5), ParameterDomainError);
  CHECK_THROWS_AS(make_class_params(cd(1), 0.0, 0.5, 0.5), ParameterDomainError);
  CHECK_THROWS_AS(make_class_params(cd(1), 0.0, 1.5, -1.0), ParameterDomainError);
  CHECK_THROWS_AS(make_class_params(cd(1), 0.0, 1.0, -1.5), ParameterDomainError);
  CHECK_THROWS_AS(make_class_params(cd(NAN), 0.0, 1.0, -1.0), ParameterDomainError);
  CHECK_THROWS_AS((CauchyEulerParams{1, 0.0}.validate()), ParameterDomainError);
  CHECK_THROWS_AS((CauchyEulerParams{2, -1.0}.validate()), ParameterDomainError);
  CHECK_NOTHROW((CauchyEulerParams{3, -0.5}.validate()));
}

TEST_CASE("Cauchy-Euler factor") {
  CHECK(CauchyEulerParams{2, 0.0}.factor(2) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  std::mt19937_64 rng(9);
  for (int i = 0; i < 20; ++i) {
    CauchyEulerParams ce{2 + int(rng() % 5), testing::uniform(rng, -0.9, 5.0)};
    CHECK(ce.factor(1) == doctest::Approx(1.0).epsilon(1e-15));
  }
  CHECK(CauchyEulerParams{2, 1e9}.factor(2) == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("A_k sequences") {
  check_seq(ak_sequence(make_class_params(cd(1), 0, 1, -1), 6), {2, 2, 2, 2});
  check_seq(ak_sequence(make_class_params(cd(-0.5), 0, 1, -1), 5), {-1, -1, -1});
  // |gamma (A - B) - B (k - 1)| - (k - 1) with A - B = 1, B = 0.
  check_seq(ak_sequence(make_class_params(cd(0, 1), 0, 1, 0), 6), {0, -1, -2, -3});
  check_seq(ak_sequence(make_class_params(cd(0, 2), 0, 1, 0), 6), {1, 0, -1, -2});
  CHECK(ak_sequence(make_class_params(cd(1), 0, 1, -1), 2).empty());
}

TEST_CASE("case classification") {
  CHECK(classify_case(make_class_params(cd(1), 0, 1, -1), 10).case_tag == CaseTag::II);
  CHECK(classify_case(make_class_params(cd(-0.5), 0, 1, -1), 5).case_tag == CaseTag::I);
  const auto c = classify_case(make_class_params(cd(0, 1), 0, 1, 0), 6);
  CHECK(c.case_tag == CaseTag::III);
  REQUIRE(c.crossover_k);
  CHECK(*c.crossover_k == 2);
  const auto c2 = classify_case(make_class_params(cd(0, 2), 0, 1, 0), 6);
  CHECK(c2.case_tag == CaseTag::III);
  REQUIRE(c2.crossover_k);
  CHECK(*c2.crossover_k == 3);
  CHECK(classify_case(make_class_params(cd(-0.5), 0, 1, -1), 2).case_tag == CaseTag::II);
  CHECK_THROWS_AS(classify_case(make_class_params(cd(1), 0, 1, -1), 1), ParameterDomainError);
  // A_2 = 0 exactly: the tie counts as nonnegative.
  const auto tie = classify_case(make_class_params(cd(-1), 0, 1, -1), 3);
  CHECK(tie.case_tag == CaseTag::II);
  const auto tie4 = classify_case(make_class_params(cd(-1), 0, 1, -1), 4);
  CHECK(tie4.case_tag == CaseTag::III);
  CHECK(*tie4.crossover_k == 2);
}

TEST_CASE("property: A_k has a sign prefix") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto p = testing::random_params(rng);
    const auto ak = ak_sequence(p, 20);
    bool seen_negative = false;
    for (double a : ak) {
      if (a < -kAkTieTolerance) seen_negative = true;
      else CHECK_FALSE(seen_negative);
    }
  }
}

TEST_CASE("property: classify_case agrees with a direct reading of A_k") {
  std::mt19937_64 rng(4321);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto p = testing::random_params(rng);
    const int n = 2 + int(rng() % 19);
    // Independent recomputation of A_j for j = 2..n-1.
    const auto A = [&](int j) {
      const cd g = p.gamma * (p.A - p.B) - p.B * double(j - 1);
      return std::abs(g) - double(j - 1);
    };
    const auto c = classify_case(p, n);
    if (n == 2 || A(n - 1) >= -1e-12) {
      CHECK(c.case_tag == CaseTag::II);
    } else if (A(2) < -1e-12) {
      CHECK(c.case_tag == CaseTag::I);
    } else {
      int k = 2;
      for (int j = 2; j <= n - 1; ++j) if (A(j) >= -1e-12) k = j;
      CHECK(c.case_tag == CaseTag::III);
      REQUIRE(c.crossover_k);
      CHECK(*c.crossover_k == k);
      CHECK(k >= 2);
      CHECK(k <= n - 2);
    }
  }
}

TEST_CASE("subclass reductions") {
  SubclassSpec s;
  s.kind = Subclass::StarlikeGamma;
  s.gamma = 1.0;
  auto r = reduce(s);
  CHECK(r.params.gamma == cd(1));
  CHECK(r.params.lambda == 0.0);
  CHECK(r.params.A == 1.0);
  CHECK(r.params.B == -1.0);
  CHECK_FALSE(r.transfer);

  s = {};
  s.kind = Subclass::ConvexGamma;
  s.gamma = cd(0.5, 0.5);
  r = reduce(s);
  CHECK(r.params.lambda == 1.0);
  CHECK(r.params.gamma == cd(0.5, 0.5));

  s = {};
  s.kind = Subclass::M;
  s.beta = 2.0;
  r = reduce(s);
  CHECK(r.params.gamma == cd(-1));
  CHECK(r.params.lambda == 0.0);
  s.kind = Subclass::N;
  CHECK(reduce(s).params.lambda == 1.0);
  s.beta = 0.5;
  CHECK_THROWS_AS(reduce(s), ParameterDomainError);

  s = {};
  s.kind = Subclass::Sc;
  s.gamma = 2.0;
  s.lambda = 0.3;
  s.beta = 0.25;
  r = reduce(s);
  CHECK(r.params.A == doctest::Approx(0.5));
  CHECK(r.params.B == -1.0);
  CHECK(r.params.lambda == 0.3);
  s.beta = 1.0;
  CHECK_THROWS_AS(reduce(s), ParameterDomainError);

  s = {};
  s.kind = Subclass::Bclass;
  s.beta = 0.5;
  s.mu = 1.5;
  r = reduce(s);
  REQUIRE(r.transfer);
  CHECK(r.transfer->m == 2);
  CHECK(r.transfer->mu == 1.5);
  CHECK(r.params.A == doctest::Approx(0.0));

  s = {};
  s.kind = Subclass::K;
  s.m = 3;
  s.mu = 0.5;
  r = reduce(s);
  REQUIRE(r.transfer);
  CHECK(r.transfer->m == 3);

  s = {};
  s.kind = Subclass::Sbeta;
  s.beta = 0.0;
  r = reduce(s);
  CHECK(close(r.params.gamma, cd(1), 1e-15));
  CHECK(r.params.A == 1.0);
  CHECK(r.params.B == -1.0);
  s.beta = std::numbers::pi / 2;
  CHECK_THROWS_AS(reduce(s), ParameterDomainError);

  s = {};
  s.kind = Subclass::StarlikeOrder;
  s.alpha = 0.25;
  r = reduce(s);
  CHECK(r.params.A == doctest::Approx(0.5));
  CHECK(r.params.gamma == cd(1));
  s.alpha = 1.0;
  CHECK_THROWS_AS(reduce(s), ParameterDomainError);

  s = {};
  s.kind = Subclass::Janowski;
  s.A = 0.5;
  s.B = -0.25;
  r = reduce(s);
  CHECK(r.params.A == 0.5);
  CHECK(r.params.B == -0.25);
  CHECK(r.params.gamma == cd(1));
}

TEST_CASE("property: the S^beta reduction is e^{-i beta} cos beta") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    SubclassSpec s;
    s.kind = trial % 2 ? Subclass::Sbeta : Subclass::Spiral;
    s.beta = testing::uniform(rng, -1.5, 1.5);
    s.alpha = s.beta;
    const double beta = s.kind == Subclass::Sbeta ? s.beta : s.alpha;
    const auto r = reduce(s);
    CHECK(close(r.params.gamma, std::polar(std::cos(beta), -beta), 1e-14));
    CHECK(r.params.lambda == 0.0);
  }
}

TEST_CASE("subclass names round trip") {
  for (auto k : {Subclass::S, Subclass::K, Subclass::StarlikeGamma, Subclass::ConvexGamma, Subclass::Sc,
                 Subclass::Bclass, Subclass::M, Subclass::N, Subclass::Sbeta, Subclass::Janowski,
                 Subclass::StarlikeOrder, Subclass::Spiral}) {
    CHECK(parse_subclass(to_string(k)) == k);
  }
  CHECK_THROWS_AS(parse_subclass("nonsense"), ParameterDomainError);
}

TEST_CASE("class params JSON round trip") {
  const auto p = make_class_params(cd(0.25, -2), 0.75, 0.5, -0.5);
  const auto q = params_from_json(nlohmann::json::parse(to_json(p).dump()));
  CHECK(q.gamma == p.gamma);
  CHECK(q.lambda == p.lambda);
  CHECK(q.A == p.A);
  CHECK(q.B == p.B);
  CHECK_THROWS_AS(params_from_json(nlohmann::json::parse(R"({"gamma":[1,0],"lambda":0,"A":-0.5,"B":0.5})")),
                  ParameterDomainError);
  CHECK_THROWS_AS(params_from_json(nlohmann::json::parse(R"({"gamma":[1,0]})")), ParameterDomainError);
}

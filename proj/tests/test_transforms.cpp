#include <cmath>
#include <memory>

#include "helpers.hpp"
#include "hlab/generators.hpp"
#include "hlab/sequence_space.hpp"
#include "hlab/transforms.hpp"

using namespace hlab;

namespace {

std::shared_ptr<const PointSpace> shared_line(const std::vector<double>& xs) {
  return std::make_shared<const PointSpace>(test::line(xs));
}

std::vector<double> fine_line(std::size_t n) {
  std::vector<double> xs;
  for (std::size_t i = 0; i < n; ++i) xs.push_back(static_cast<double>(i) / static_cast<double>(n - 1));
  return xs;
}

}  // namespace

TEST_SUITE("transforms") {

TEST_CASE("snowflake with t = 1 is the identity") {
  const PointSpace s = test::line({0, 0.5, 2});
  CHECK(snowflake(s, 1.0) == s);
}

TEST_CASE("snowflake powers distances") {
  const PointSpace s = snowflake(test::line({0, 4}), 0.5);
  CHECK(s.dist(0, 1) == doctest::Approx(2.0));
  CHECK_CODE(snowflake(test::line({0, 1, 2}), 2.0), ErrorCode::InvalidExponent);
  CHECK_CODE(snowflake(test::line({0, 1}), 0.0), ErrorCode::InvalidExponent);
}

TEST_CASE("ultrametric inputs accept any positive exponent") {
  const Materialization m = materialize(cantor_spec(3));
  const PointSpace s = snowflake(m.points, 2.0);
  CHECK(validate_metric(s.table()).is_ultrametric);
  CHECK(is_ultrametric(m.atoms));
  CHECK_FALSE(is_ultrametric(interval_atoms({{0, 1}, {2, 3}, {5, 6}})));
  CHECK_NOTHROW(snowflake(m.atoms, 3.0));
  CHECK_CODE(snowflake(interval_atoms({{0, 1}, {2, 3}, {5, 6}}), 2.0), ErrorCode::InvalidExponent);
}

TEST_CASE("snowflaked Cantor cells re-index the exponent") {
  const AtomicSpace a = materialize(cantor_spec(3)).atoms;
  const AtomicSpace half = snowflake(a, 0.5);
  const Extended base = exact_content(a, a.all(), test::kCantorAlpha, Extended::infinity()).value;
  const Extended snow = exact_content(half, half.all(), 2 * test::kCantorAlpha, Extended::infinity()).value;
  CHECK(std::abs(base.finite_value() - snow.finite_value()) < 1e-9);
  const Extended d = exact_content(half, half.all(), 2 * test::kCantorAlpha, Extended(std::sqrt(0.2))).value;
  const Extended b = exact_content(a, a.all(), test::kCantorAlpha, Extended(0.2)).value;
  CHECK(std::abs(d.finite_value() - b.finite_value()) < 1e-9);
}

TEST_CASE("Lipschitz constants of simple maps") {
  auto dom = shared_line({0, 1, 3});
  CHECK(lipschitz_constant(MetricMap::identity(dom)) == doctest::Approx(1.0));
  auto pt = shared_line({5});
  const MetricMap constant(dom, pt, {0, 0, 0});
  CHECK(lipschitz_constant(constant) == 0.0);
  CHECK(holder_constant(constant, 0.3) == 0.0);
  auto doubled = shared_line({0, 2, 6});
  const MetricMap scale(dom, doubled, {0, 1, 2});
  CHECK(lipschitz_constant(scale) == doctest::Approx(2.0));
  CHECK(holder_constant(scale, 1.0) == doctest::Approx(lipschitz_constant(scale)));
  CHECK(bilipschitz_constant(scale) == doctest::Approx(2.0));
  CHECK(bilipschitz_constant(MetricMap::identity(dom)) == doctest::Approx(1.0));
  CHECK_CODE(bilipschitz_constant(constant), ErrorCode::NotInjective);
  CHECK_CODE(holder_constant(scale, 0.0), ErrorCode::InvalidExponent);
  CHECK_CODE(MetricMap(dom, pt, {0, 1, 0}), ErrorCode::IndexOutOfRange);
  CHECK_CODE(MetricMap(dom, pt, {0}), ErrorCode::BadParams);
}

TEST_CASE("coordinate projections are 1-Lipschitz") {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    auto cloud = std::make_shared<const PointSpace>(random_cloud(rng, 12, 3));
    const MetricMap p = coordinate_projection(cloud, {0, 2});
    CHECK(lipschitz_constant(p) <= 1.0 + 1e-12);
    CHECK(p.codomain().coordinates().front().size() == 2);
  }
  CHECK_CODE(coordinate_projection(std::make_shared<const PointSpace>(test::line({0, 1})), {1}),
             ErrorCode::IndexOutOfRange);
}

TEST_CASE("Hoelder order two map on a snowflaked line") {
  const std::vector<double> xs = fine_line(1000);
  auto line = shared_line(xs);
  auto root = std::make_shared<const PointSpace>(snowflake(*line, 0.5));
  std::vector<std::size_t> id(xs.size());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
  const MetricMap f(root, line, id);
  CHECK(holder_constant(f, 2.0) == doctest::Approx(1.0));

  const std::vector<double> grid{0.9, 0.5, 0.3, 0.2, 0.1, 0.05};
  const auto profile = local_lipschitz_profile(f, grid);
  for (const LocalLipschitzEntry& e : profile) {
    REQUIRE(e.has_pairs);
    CHECK(e.k <= e.delta + 1e-12);
  }
  CHECK(classify_flatness(profile) == Flatness::UniformlyLocallyFlat);
}

TEST_CASE("identity is not flat") {
  auto line = shared_line(fine_line(200));
  const std::vector<double> grid{0.5, 0.2, 0.1, 0.05, 0.02};
  const auto profile = local_lipschitz_profile(MetricMap::identity(line), grid);
  for (const LocalLipschitzEntry& e : profile) CHECK(e.k == doctest::Approx(1.0));
  CHECK(classify_flatness(profile) == Flatness::NotFlat);
}

TEST_CASE("profiles of globally Lipschitz maps stay below the constant") {
  Rng rng(4);
  auto dom = std::make_shared<const PointSpace>(random_cloud(rng, 30, 2));
  auto cod = std::make_shared<const PointSpace>(random_cloud(rng, 10, 2));
  std::vector<std::size_t> assign;
  for (std::size_t i = 0; i < 30; ++i) assign.push_back(rng.index(10));
  const MetricMap f(dom, cod, assign);
  const double k = lipschitz_constant(f);
  const std::vector<double> grid{2.0, 0.5, 0.2, 0.1};
  for (const LocalLipschitzEntry& e : local_lipschitz_profile(f, grid)) CHECK(e.k <= k);
  CHECK_CODE(local_lipschitz_profile(f, std::vector<double>{0.1, 0.2}), ErrorCode::DegenerateGrid);
}

TEST_CASE("flatness edge cases") {
  auto two = shared_line({0, 1});
  const std::vector<double> grid{4.0, 2.0, 1.5, 0.5};
  const auto profile = local_lipschitz_profile(MetricMap::identity(two), grid);
  CHECK_FALSE(profile.back().has_pairs);
  CHECK(classify_flatness(profile) == Flatness::Inconclusive);
  CHECK_CODE(classify_flatness(std::vector<LocalLipschitzEntry>{}), ErrorCode::DegenerateProfile);
}

TEST_CASE("image presentation of grouped points") {
  auto dom = shared_line({0, 1, 2, 3});
  auto cod = shared_line({0, 10});
  const MetricMap f(dom, cod, {0, 0, 1, 1});
  const AtomicSpace img = image_presentation(f, {{0, 1}, {2, 3}});
  CHECK(img.atom_diam(0) == 0.0);
  CHECK(img.sup_dist(0, 1) == 10.0);
}

}  // TEST_SUITE

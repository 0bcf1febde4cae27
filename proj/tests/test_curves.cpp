#include <cmath>
#include <memory>
#include <numbers>

#include "helpers.hpp"
#include "hlab/curves.hpp"
#include "hlab/generators.hpp"
#include "hlab/transforms.hpp"

using namespace hlab;

namespace {

SampledPath planar(const std::vector<std::vector<double>>& pts) {
  std::vector<double> t;
  for (std::size_t i = 0; i < pts.size(); ++i) t.push_back(static_cast<double>(i));
  return SampledPath::euclidean(t, pts);
}

}  // namespace

TEST_SUITE("curves") {

TEST_CASE("path construction errors") {
  CHECK_CODE(SampledPath::euclidean({}, {}), ErrorCode::BadParams);
  CHECK_CODE(SampledPath::euclidean({0, 0}, {{0}, {1}}), ErrorCode::BadParams);
  CHECK_CODE(SampledPath::euclidean({0, 1}, {{0}}), ErrorCode::BadParams);
  CHECK_CODE(SampledPath::euclidean({0, 1}, {{0}, {1, 2}}), ErrorCode::BadParams);
}

TEST_CASE("partition sums") {
  const SampledPath p = SampledPath::euclidean({0, 0.5, 1}, {{0}, {0.5}, {1}});
  CHECK(partition_sum(p, {0, 2}) == doctest::Approx(1.0));
  CHECK(partition_sum(p, {0, 1, 2}) == doctest::Approx(1.0));
  CHECK_CODE(partition_sum(p, {1, 2}), ErrorCode::BadPartition);
  CHECK_CODE(partition_sum(p, {0, 1}), ErrorCode::BadPartition);
  CHECK_CODE(partition_sum(p, {0, 1, 1, 2}), ErrorCode::BadPartition);

  const SampledPath bent = planar({{0, 0}, {3, 4}, {6, 0}});
  CHECK(partition_sum(bent, {0, 2}) == doctest::Approx(6.0));
  CHECK(partition_sum(bent, {0, 1, 2}) == doctest::Approx(10.0));
}

TEST_CASE("refinement never decreases the sum") {
  Rng rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const SampledPath p = random_walk_path(rng, 12, 2);
    std::vector<std::size_t> coarse{0, 5, 11}, fine{0, 2, 5, 7, 9, 11};
    CHECK(partition_sum(p, coarse) <= partition_sum(p, fine) + 1e-12);
    CHECK(partition_sum(p, fine) <= length(p) + 1e-12);
  }
}

TEST_CASE("length of constant and circular paths") {
  CHECK(length(SampledPath::euclidean({0, 1, 2}, {{1, 1}, {1, 1}, {1, 1}})) == 0.0);
  const SampledPath c = circle_path(1000);
  CHECK(c.size() == 1001);
  const double len = length(c);
  CHECK(len == doctest::Approx(2000.0 * std::sin(std::numbers::pi / 1000.0)).epsilon(1e-12));
  CHECK(std::abs(len - 2 * std::numbers::pi) < 1.1e-5);
}

TEST_CASE("Lipschitz parameterizations bound the length") {
  // t -> (t, t/2) on [0, 2] is sqrt(5)/2-Lipschitz.
  std::vector<double> t;
  std::vector<std::vector<double>> pts;
  for (int i = 0; i <= 20; ++i) {
    t.push_back(i / 10.0);
    pts.push_back({i / 10.0, i / 20.0});
  }
  const SampledPath p = SampledPath::euclidean(t, pts);
  CHECK(length(p) <= std::sqrt(5.0) / 2.0 * 2.0 + 1e-12);
}

TEST_CASE("split lengths") {
  const SampledPath c = circle_path(100);
  const double total = length(c);
  const auto [l0, r0] = split_length(c, c.params().front());
  CHECK(l0 == 0.0);
  CHECK(r0 == doctest::Approx(total));
  const auto [l1, r1] = split_length(c, c.params().back());
  CHECK(l1 == doctest::Approx(total));
  CHECK(r1 == 0.0);
  const auto [l2, r2] = split_length(c, c.params()[50]);
  CHECK(l2 + r2 == doctest::Approx(total).epsilon(1e-14));
  CHECK(l2 == doctest::Approx(total / 2));
  CHECK_CODE(split_length(c, 0.123), ErrorCode::NotASample);
}

TEST_CASE("arc-length reparameterization") {
  const SampledPath c = circle_path(1000);
  const SampledPath q = arclength_reparameterize(c);
  const double chord = 2.0 * std::sin(std::numbers::pi / 1000.0);
  for (std::size_t i = 1; i < q.size(); ++i) {
    CHECK(q.params()[i] - q.params()[i - 1] == doctest::Approx(chord).epsilon(1e-9));
  }
  CHECK(std::abs(length(q) - length(c)) <= 1e-12);

  // Already parameterized by arc length: unchanged.
  const SampledPath straight = SampledPath::euclidean({0, 1, 3}, {{0}, {1}, {3}});
  CHECK(arclength_reparameterize(straight).params() == straight.params());

  // Repeated points collapse.
  const SampledPath rep = planar({{0, 0}, {1, 0}, {1, 0}, {1, 2}});
  const SampledPath r = arclength_reparameterize(rep);
  CHECK(r.size() == 3);
  CHECK(r.params() == std::vector<double>{0, 1, 3});
  CHECK(length(r) == length(rep));
}

TEST_CASE("arc-length parameterizations are 1-Lipschitz") {
  Rng rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const SampledPath q = arclength_reparameterize(random_walk_path(rng, 25, 3));
    for (std::size_t i = 0; i < q.size(); ++i) {
      for (std::size_t j = i + 1; j < q.size(); ++j) {
        CHECK(q.distance(i, j) <= q.params()[j] - q.params()[i] + 1e-12);
      }
    }
  }
}

TEST_CASE("relabeling and restriction") {
  const SampledPath p = planar({{0, 0}, {1, 0}, {1, 1}});
  CHECK(length(p.relabeled({-5, 0, 100})) == length(p));
  CHECK_CODE(p.relabeled({0, 1}), ErrorCode::BadParams);
  CHECK(length(p.restricted({0, 2})) == doctest::Approx(std::sqrt(2.0)));
  CHECK_CODE(p.restricted({0, 3}), ErrorCode::IndexOutOfRange);
}

TEST_CASE("mapping paths") {
  auto line = std::make_shared<const PointSpace>(test::line({0, 1, 2, 3}));
  auto doubled = std::make_shared<const PointSpace>(test::line({0, 2, 4, 6}));
  auto point = std::make_shared<const PointSpace>(test::line({7}));
  const SampledPath p = SampledPath::in_space({0, 1, 2, 3}, line, {0, 1, 3, 2});
  CHECK(length(p) == doctest::Approx(4.0));

  const MappedPath id = map_path(MetricMap::identity(line), p);
  CHECK(id.image_length == doctest::Approx(4.0));
  CHECK(id.bound_holds);

  const MappedPath twice = map_path(MetricMap(line, doubled, {0, 1, 2, 3}), p);
  CHECK(twice.image_length == doctest::Approx(8.0));
  CHECK(twice.k == doctest::Approx(2.0));
  CHECK(twice.bound_holds);

  const MappedPath flat = map_path(MetricMap(line, point, {0, 0, 0, 0}), p);
  CHECK(flat.image_length == 0.0);

  const MappedPath local = map_path(MetricMap(line, doubled, {0, 1, 2, 3}), p, 1.5);
  CHECK_FALSE(local.bound_applicable);
  const SampledPath unit_steps = SampledPath::in_space({0, 1, 2, 3}, line, {0, 1, 2, 3});
  const MappedPath local2 = map_path(MetricMap(line, doubled, {0, 1, 2, 3}), unit_steps, 1.5);
  CHECK(local2.bound_applicable);
  CHECK(local2.bound_holds);

  CHECK_CODE(map_path(MetricMap::identity(doubled), p), ErrorCode::DomainMismatch);
  CHECK_CODE(map_path(MetricMap::identity(line), planar({{0, 0}, {1, 0}})), ErrorCode::DomainMismatch);
}

TEST_CASE("segment distances") {
  CHECK(segment_distance({0, 0}, {1, 0}, {0, 1}, {1, 1}) == doctest::Approx(1.0));
  CHECK(segment_distance({0, 0}, {1, 1}, {0, 1}, {1, 0}) == doctest::Approx(0.0));
  CHECK(segment_distance({0, 0}, {1, 0}, {2, 0}, {3, 0}) == doctest::Approx(1.0));
  CHECK(segment_distance({0, 0}, {0, 0}, {1, -1}, {1, 1}) == doctest::Approx(1.0));
  CHECK(segment_distance({0, 0}, {0, 0}, {3, 4}, {3, 4}) == doctest::Approx(5.0));
}

TEST_CASE("image content against length") {
  SUBCASE("straight segment") {
    const SampledPath p = planar({{0, 0}, {0.25, 0}, {0.5, 0}, {0.75, 0}, {1, 0}});
    const H1Comparison c = image_h1_check(p);
    CHECK(c.injective);
    CHECK(c.length == doctest::Approx(1.0));
    CHECK(c.content == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(c.equal);
  }
  SUBCASE("retraced segment") {
    const SampledPath p = planar({{0, 0}, {2, 0}, {0, 0}});
    const H1Comparison c = image_h1_check(p);
    CHECK_FALSE(c.injective);
    CHECK(c.length == doctest::Approx(4.0));
    CHECK(c.content == doctest::Approx(2.0));
    CHECK(c.content < c.length);
    CHECK_FALSE(c.equal);
  }
  SUBCASE("partial fold back is not injective") {
    const SampledPath p = planar({{0, 0}, {2, 0}, {1, 0}});
    CHECK_FALSE(image_h1_check(p).injective);
  }
  SUBCASE("single chord") {
    const H1Comparison c = image_h1_check(planar({{0, 0}, {3, 4}}));
    CHECK(c.content == doctest::Approx(5.0));
    CHECK(c.length == doctest::Approx(5.0));
    CHECK(c.equal);
  }
  SUBCASE("right-angle path") {
    const H1Comparison c = image_h1_check(planar({{0, 0}, {1, 0}, {1, 1}, {2, 1}}));
    CHECK(c.injective);
    CHECK(c.equal);
  }
  SUBCASE("limits") {
    const SampledPath long_path = arclength_reparameterize(circle_path(40));
    CHECK_CODE(image_h1_check(long_path), ErrorCode::TooManySegments);
    auto line = std::make_shared<const PointSpace>(test::line({0, 1}));
    CHECK_CODE(image_h1_check(SampledPath::in_space({0, 1}, line, {0, 1})), ErrorCode::BadParams);
  }
}

}  // TEST_SUITE

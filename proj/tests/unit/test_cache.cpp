#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "qtwist/cache.hpp"
#include "qtwist/pipeline.hpp"

using namespace qtwist;
namespace fs = std::filesystem;

TEST_CASE("sha256") {
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("json round trips") {
  FormContext ctx = load_form(37, nullptr);
  CHECK(class_set_from_json(to_json(*ctx.classes)) == *ctx.classes);
  CHECK(eigensystems_from_json(to_json(ctx.systems)) == ctx.systems);
  std::vector<BrandtMatrix> ms{ctx.brandt->matrix(2), ctx.brandt->matrix(3)};
  CHECK(brandt_from_json(to_json(ms)) == ms);
  DirichletCoeffs d = load_coeffs(ctx, 50, nullptr);
  CHECK(coeffs_from_json(to_json(d)) == d);
  GeneralizedThetaSeries s;
  s.lstar = -3;
  s.constant = make_rational(1, 2);
  s.coeffs = {0, 1, -2, 0, 7};
  CHECK(theta_from_json(to_json(s)) == s);
}

TEST_CASE("cache store, load and rejection of bad entries") {
  const fs::path dir = fs::temp_directory_path() / "qtwist-unit-cache";
  fs::remove_all(dir);
  Cache cache(dir);
  REQUIRE(cache.enabled());
  CHECK_FALSE(cache.load(11, "classes").has_value());
  ClassSet cs = ideal_classes(11);
  cache.store(11, "classes", to_json(cs));
  auto got = cache.load(11, "classes");
  REQUIRE(got.has_value());
  CHECK(class_set_from_json(*got) == cs);

  cache.store(11, "theta", Json{{"x", 1}}, "key-a");
  CHECK(cache.path(11, "theta", "key-a") != cache.path(11, "theta", "key-b"));
  CHECK_FALSE(cache.load(11, "theta", "key-b").has_value());
  CHECK(cache.load(11, "theta", "key-a")->at("x") == 1);

  // Tampered payload fails the content hash.
  {
    std::ifstream in(cache.path(11, "classes"));
    Json j = Json::parse(in);
    j["payload"]["p"] = 13;
    std::ofstream out(cache.path(11, "classes"));
    out << j.dump();
  }
  CHECK_FALSE(cache.load(11, "classes").has_value());
  // Truncated file.
  {
    std::ofstream out(cache.path(11, "theta", "key-a"));
    out << "{\"schema";
  }
  CHECK_FALSE(cache.load(11, "theta", "key-a").has_value());
  fs::remove_all(dir);

  Cache off{fs::path()};
  CHECK_FALSE(off.enabled());
  off.store(11, "classes", to_json(cs));
  CHECK_FALSE(off.load(11, "classes").has_value());
}

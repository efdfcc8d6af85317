#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qtwist/brandt.hpp"
#include "qtwist/lvalue.hpp"
#include "qtwist/theta.hpp"

namespace qtwist {

using Json = nlohmann::json;

constexpr int kCacheSchemaVersion = 1;

std::string sha256_hex(const std::string& data);

Json to_json(const QLattice& l);
QLattice lattice_from_json(const Json& j);
Json to_json(const ClassSet& c);
ClassSet class_set_from_json(const Json& j);
Json to_json(const std::vector<BrandtMatrix>& ms);
std::vector<BrandtMatrix> brandt_from_json(const Json& j);
Json to_json(const std::vector<EigenSystem>& es);
std::vector<EigenSystem> eigensystems_from_json(const Json& j);
Json to_json(const GeneralizedThetaSeries& s);
GeneralizedThetaSeries theta_from_json(const Json& j);
Json to_json(const DirichletCoeffs& d);
DirichletCoeffs coeffs_from_json(const Json& j);

/// Directory of self-describing entries {schema_version, p, kind, key, payload, content_hash}.
/// Entries that fail the version or hash check are treated as missing.
class Cache {
 public:
  explicit Cache(std::filesystem::path dir);
  /// $QTWIST_CACHE_DIR, else ./.qtwist-cache.
  static std::filesystem::path default_dir();

  bool enabled() const { return !dir_.empty(); }
  std::optional<Json> load(std::int64_t p, const std::string& kind, const std::string& key = "") const;
  void store(std::int64_t p, const std::string& kind, const Json& payload, const std::string& key = "") const;
  std::filesystem::path path(std::int64_t p, const std::string& kind, const std::string& key = "") const;

 private:
  std::filesystem::path dir_;
};

}  // namespace qtwist

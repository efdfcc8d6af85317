#include "qtwist/cache.hpp"

#include <openssl/evp.h>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace qtwist {

namespace {

std::string str(const Integer& x) { return x.get_str(); }
std::string str(const Rational& x) { return x.get_str(); }
Integer integer(const Json& j) { return Integer(j.get<std::string>()); }
Rational rational(const Json& j) {
  Rational r(j.get<std::string>());
  r.canonicalize();
  return r;
}

// Key text safe for a file name.
std::string sanitize(const std::string& key) {
  std::string out;
  for (char c : key) out += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_') ? c : '_';
  return out;
}

}  // namespace

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw Error("sha256_hex: digest failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  return os.str();
}

Json to_json(const QLattice& l) {
  Json rows = Json::array();
  for (const auto& r : l.hnf()) rows.push_back({str(r[0]), str(r[1]), str(r[2]), str(r[3])});
  return {{"alpha", l.algebra().alpha}, {"beta", l.algebra().beta}, {"den", str(l.denominator())}, {"hnf", rows}};
}

QLattice lattice_from_json(const Json& j) {
  QuaternionAlgebra alg(j.at("alpha").get<std::int64_t>(), j.at("beta").get<std::int64_t>());
  const Integer den = integer(j.at("den"));
  std::vector<Quaternion> gens;
  for (const auto& row : j.at("hnf")) {
    std::array<Rational, 4> c;
    for (int k = 0; k < 4; ++k) c[k] = make_rational(integer(row.at(k)), den);
    gens.emplace_back(alg, c);
  }
  return QLattice::from_generators(alg, gens);
}

Json to_json(const ClassSet& c) {
  Json reps = Json::array(), lefts = Json::array();
  for (const auto& r : c.reps) reps.push_back({{"lattice", to_json(r.lattice)}, {"norm", str(r.norm)}});
  for (const auto& o : c.left_orders) lefts.push_back(to_json(o.lattice));
  return {{"p", c.p},
          {"alpha", c.algebra.alpha},
          {"beta", c.algebra.beta},
          {"order", to_json(c.order.lattice)},
          {"reps", reps},
          {"left_orders", lefts},
          {"units", c.unit_halforders}};
}

ClassSet class_set_from_json(const Json& j) {
  ClassSet c;
  c.p = j.at("p").get<std::int64_t>();
  c.algebra = QuaternionAlgebra(j.at("alpha").get<std::int64_t>(), j.at("beta").get<std::int64_t>());
  c.order = Order{lattice_from_json(j.at("order"))};
  for (const auto& r : j.at("reps")) c.reps.push_back(RightIdeal{lattice_from_json(r.at("lattice")), rational(r.at("norm"))});
  for (const auto& o : j.at("left_orders")) c.left_orders.push_back(Order{lattice_from_json(o)});
  c.unit_halforders = j.at("units").get<std::vector<std::int64_t>>();
  if (c.left_orders.size() != c.reps.size() || c.unit_halforders.size() != c.reps.size())
    throw InvalidArgument("class_set_from_json: inconsistent sizes");
  return c;
}

Json to_json(const std::vector<BrandtMatrix>& ms) {
  Json out = Json::array();
  for (const auto& m : ms) out.push_back({{"m", m.m}, {"entries", m.entries}});
  return out;
}

std::vector<BrandtMatrix> brandt_from_json(const Json& j) {
  std::vector<BrandtMatrix> out;
  for (const auto& e : j) out.push_back(BrandtMatrix{e.at("m").get<std::int64_t>(), e.at("entries").get<IntMatrix64>()});
  return out;
}

Json to_json(const std::vector<EigenSystem>& es) {
  Json out = Json::array();
  for (const auto& e : es) {
    Json coords = Json::array(), ev = Json::object();
    for (const auto& c : e.coords) coords.push_back(str(c));
    for (const auto& [q, a] : e.eigenvalues) ev[std::to_string(q)] = a;
    out.push_back({{"label", e.label}, {"coords", coords}, {"eigenvalues", ev}, {"height", str(e.height)}});
  }
  return out;
}

std::vector<EigenSystem> eigensystems_from_json(const Json& j) {
  std::vector<EigenSystem> out;
  for (const auto& x : j) {
    EigenSystem e;
    e.label = x.at("label").get<std::string>();
    for (const auto& c : x.at("coords")) e.coords.push_back(integer(c));
    for (const auto& [q, a] : x.at("eigenvalues").items()) e.eigenvalues[std::stoll(q)] = a.get<std::int64_t>();
    e.height = rational(x.at("height"));
    out.push_back(std::move(e));
  }
  return out;
}

Json to_json(const GeneralizedThetaSeries& s) {
  return {{"lstar", s.lstar}, {"constant", str(s.constant)}, {"coeffs", s.coeffs}};
}

GeneralizedThetaSeries theta_from_json(const Json& j) {
  GeneralizedThetaSeries s;
  s.lstar = j.at("lstar").get<std::int64_t>();
  s.constant = rational(j.at("constant"));
  s.coeffs = j.at("coeffs").get<std::vector<std::int64_t>>();
  return s;
}

Json to_json(const DirichletCoeffs& d) { return {{"p", d.p}, {"M", d.M}, {"a", d.a}}; }

DirichletCoeffs coeffs_from_json(const Json& j) {
  DirichletCoeffs d{j.at("p").get<std::int64_t>(), j.at("M").get<std::int64_t>(), j.at("a").get<std::vector<std::int64_t>>()};
  if (static_cast<std::int64_t>(d.a.size()) != d.M + 1) throw InvalidArgument("coeffs_from_json: length mismatch");
  return d;
}

Cache::Cache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path Cache::default_dir() {
  if (const char* env = std::getenv("QTWIST_CACHE_DIR"); env && *env) return env;
  return ".qtwist-cache";
}

std::filesystem::path Cache::path(std::int64_t p, const std::string& kind, const std::string& key) const {
  std::string name = "p" + std::to_string(p) + "_" + sanitize(kind);
  if (!key.empty()) name += "_" + sha256_hex(key).substr(0, 16);
  return dir_ / (name + ".json");
}

std::optional<Json> Cache::load(std::int64_t p, const std::string& kind, const std::string& key) const {
  if (!enabled()) return std::nullopt;
  std::ifstream in(path(p, kind, key));
  if (!in) return std::nullopt;
  try {
    Json entry = Json::parse(in);
    if (entry.at("schema_version").get<int>() != kCacheSchemaVersion) return std::nullopt;
    if (entry.at("p").get<std::int64_t>() != p || entry.at("kind") != kind || entry.at("key") != key) return std::nullopt;
    const Json& payload = entry.at("payload");
    if (sha256_hex(payload.dump()) != entry.at("content_hash").get<std::string>()) return std::nullopt;
    return payload;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void Cache::store(std::int64_t p, const std::string& kind, const Json& payload, const std::string& key) const {
  if (!enabled()) return;
  std::filesystem::create_directories(dir_);
  Json entry = {{"schema_version", kCacheSchemaVersion},
                {"p", p},
                {"kind", kind},
                {"key", key},
                {"payload", payload},
                {"content_hash", sha256_hex(payload.dump())}};
  const auto target = path(p, kind, key);
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw Error("cache: cannot write " + tmp.string());
    out << entry.dump() << "\n";
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace qtwist

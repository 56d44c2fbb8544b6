#include "fractalmark/keyfile.hpp"

#include "fractalmark/errors.hpp"

#include <json.hpp>
#include <openssl/evp.h>

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

namespace fractalmark {

namespace {

std::string exact_decimal(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double read_real(const nlohmann::json& j, const char* field) {
  const auto it = j.find(field);
  if (it == j.end()) throw ParameterError(std::string("key file lacks field '") + field + "'");
  if (it->is_number()) return it->get<double>();
  if (!it->is_string()) throw ParameterError(std::string("key field '") + field + "' must be a decimal string");
  const std::string s = it->get<std::string>();
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) {
    throw ParameterError(std::string("key field '") + field + "' is not a decimal number");
  }
  return v;
}

int read_int(const nlohmann::json& j, const char* field) {
  const auto it = j.find(field);
  if (it == j.end()) throw ParameterError(std::string("key file lacks field '") + field + "'");
  if (!it->is_number_integer()) throw ParameterError(std::string("key field '") + field + "' must be an integer");
  return it->get<int>();
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace

std::string serialize_key(const WatermarkKey& key) {
  validate(key);
  nlohmann::ordered_json j;
  j["schema_version"] = kKeySchemaVersion;
  j["kind"] = std::string(to_string(key.kind));
  j["n"] = key.order;
  j["r"] = key.variation.r();
  j["m"] = key.variation.m();
  j["o"] = key.variation.o();
  j["x0"] = exact_decimal(key.chaos.x0);
  j["a"] = exact_decimal(key.chaos.a);
  j["k"] = key.chaos.k;
  j["d"] = key.chaos.d;
  return j.dump(2) + "\n";
}

WatermarkKey parse_key(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParameterError(std::string("key file is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParameterError("key file must hold a JSON object");
  if (read_int(j, "schema_version") != kKeySchemaVersion) throw ParameterError("unsupported key schema_version");
  const auto kind = j.find("kind");
  if (kind == j.end() || !kind->is_string()) throw ParameterError("key field 'kind' must be a string");

  WatermarkKey key;
  key.kind = curve_kind_from_string(kind->get<std::string>());
  key.order = read_int(j, "n");
  key.variation = VariationParams::make(read_int(j, "r"), read_int(j, "m"), read_int(j, "o"));
  key.chaos = ChaosParams{read_real(j, "x0"), read_real(j, "a"), read_int(j, "k"), read_int(j, "d")};
  validate(key);
  return key;
}

WatermarkKey load_key(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open key file '" + path.string() + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_key(text.str());
}

void save_key(const std::filesystem::path& path, const WatermarkKey& key) {
  const std::string text = serialize_key(key);
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot create key file '" + path.string() + "'");
  out << text;
  if (!out) throw IoError("error writing key file '" + path.string() + "'");
}

std::string key_fingerprint(const WatermarkKey& key) {
  const std::string text = serialize_key(key);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(text.data(), text.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < 8 && i < length; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xF]);
  }
  return out;
}

WatermarkKey sample_key(std::uint64_t seed, CurveKind kind, int order) {
  if (order < kMinOrder || order > kMaxOrder) throw ParameterError("curve order must lie in [1, 8]");
  std::mt19937_64 rng(seed);
  WatermarkKey key;
  key.kind = kind;
  key.order = order;
  const int r = uniform_int(rng, 0, kRotationCount - 1);
  const int m = uniform_int(rng, 0, kMirrorCount - 1);
  const int o = kind == CurveKind::Hilbert ? uniform_int(rng, 0, kOrderModCount - 1) : 0;
  key.variation = VariationParams::make(r, m, o);
  // Half-open [3.7, 4.0) and closed [0.1, 0.9] both hold for u in [0, 1).
  // Draws inside periodic windows, or that collapse, are redrawn.
  for (;;) {
    key.chaos.x0 = uniform(rng, kMinX0, kMaxX0);
    key.chaos.a = uniform(rng, kMinA, kMaxA);
    key.chaos.k = uniform_int(rng, kMinWarmup, kMaxWarmup);
    key.chaos.d = uniform_int(rng, kMinDigit, kMaxDigit);
    if (key.chaos.x0 == 1.0 - 1.0 / key.chaos.a) continue;
    try {
      (void)keystream(key.chaos, std::size_t{1} << (2 * order));
      break;
    } catch (const DegeneracyError&) {
    }
  }
  validate(key);
  return key;
}

}  // namespace fractalmark

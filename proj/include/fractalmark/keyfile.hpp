#pragma once

#include "fractalmark/watermark.hpp"

#include <cstdint>
#include <filesystem>
#include <string>

namespace fractalmark {

inline constexpr int kKeySchemaVersion = 1;

/// Canonical key text: a JSON object with fields in the order schema_version,
/// kind, n, r, m, o, x0, a, k, d. x0 and a are decimal strings with 17
/// significant digits, which round-trip binary64 exactly.
std::string serialize_key(const WatermarkKey& key);

/// Parses and validates key text. x0 and a may be strings or JSON numbers.
WatermarkKey parse_key(const std::string& text);

WatermarkKey load_key(const std::filesystem::path& path);
void save_key(const std::filesystem::path& path, const WatermarkKey& key);

/// First 16 hex characters of SHA-256 over the canonical serialization.
std::string key_fingerprint(const WatermarkKey& key);

/// Draws every free parameter uniformly from its admissible range.
WatermarkKey sample_key(std::uint64_t seed, CurveKind kind = CurveKind::Hilbert, int order = 3);

}  // namespace fractalmark

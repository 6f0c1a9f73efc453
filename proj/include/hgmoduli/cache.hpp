#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "hgmoduli/moduli.hpp"

namespace hgm {

using Json = nlohmann::json;

// Canonical JSON encodings. Rationals are {"den": "...", "num": "..."} with
// arbitrary-precision decimal strings; polynomials are exponent-indexed
// arrays of rationals; components are arrays of {partition, coeff} with the
// partitions in their canonical order. Everything round-trips bit-exactly.
Json rat_to_json(const Rat& q);
Rat rat_from_json(const Json& j); // raises CACHE_CORRUPT on malformed input
Json lpoly_to_json(const LPoly& p);
LPoly lpoly_from_json(const Json& j);
Json component_to_json(const Component& c);
Component component_from_json(const Json& j);
Json hbasis_to_json(const HBasisMap& h, unsigned d);

// The persistent cache: {"version": "1", "entries": {"r:k:KIND:n:d": ...}}.
// A version mismatch or any malformed content invalidates the whole file.
inline constexpr const char* cache_format_version = "1";

std::string store_to_cache_text(const ModuliStore& st);
void load_cache_text_into_store(const std::string& text, ModuliStore& st);

// Whole-file advisory lock held for the lifetime of the object; concurrent
// CLI invocations serialize on it.
class FileLock {
public:
    explicit FileLock(const std::string& path); // creates the file if absent
    ~FileLock();
    FileLock(const FileLock&) = delete;
    FileLock& operator=(const FileLock&) = delete;

private:
    int fd_ = -1;
};

// Reads the cache file into the store (no-op if the file does not exist).
void load_cache_file(const std::string& path, ModuliStore& st);
// Writes the store back out (atomically via rename).
void save_cache_file(const std::string& path, const ModuliStore& st);

} // namespace hgm

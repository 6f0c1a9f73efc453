#include "hgmoduli/cache.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace hgm {

Json rat_to_json(const Rat& q) {
    return Json{{"den", q.get_den().get_str()}, {"num", q.get_num().get_str()}};
}

Rat rat_from_json(const Json& j) {
    if (!j.is_object() || j.size() != 2 || !j.contains("num") || !j.contains("den") ||
        !j["num"].is_string() || !j["den"].is_string())
        fail(Errc::cache_corrupt, "rational must be {\"num\": string, \"den\": string}");
    return rat_from_strings(j["num"].get<std::string>(), j["den"].get<std::string>());
}

Json lpoly_to_json(const LPoly& p) {
    Json arr = Json::array();
    for (const Rat& c : p.coeffs()) arr.push_back(rat_to_json(c));
    return arr;
}

LPoly lpoly_from_json(const Json& j) {
    if (!j.is_array()) fail(Errc::cache_corrupt, "polynomial must be an array");
    std::vector<Rat> cs;
    cs.reserve(j.size());
    for (const Json& c : j) cs.push_back(rat_from_json(c));
    if (!cs.empty() && cs.back() == 0) fail(Errc::cache_corrupt, "polynomial has trailing zeros");
    return LPoly(std::move(cs));
}

Json component_to_json(const Component& c) {
    Json arr = Json::array();
    for (const auto& [lambda, poly] : c) {
        Json entry;
        entry["partition"] = lambda.parts();
        entry["coeff"] = lpoly_to_json(poly);
        arr.push_back(std::move(entry));
    }
    return arr;
}

Component component_from_json(const Json& j) {
    if (!j.is_array()) fail(Errc::cache_corrupt, "component must be an array");
    Component out;
    for (const Json& entry : j) {
        if (!entry.is_object() || !entry.contains("partition") || !entry.contains("coeff"))
            fail(Errc::cache_corrupt, "component entry must have partition and coeff");
        const Json& parts = entry["partition"];
        if (!parts.is_array()) fail(Errc::cache_corrupt, "partition must be an array");
        std::vector<unsigned> ps;
        for (const Json& p : parts) {
            if (!p.is_number_unsigned() || p.get<unsigned long long>() == 0 ||
                p.get<unsigned long long>() > 1u << 20)
                fail(Errc::cache_corrupt, "partition parts must be small positive integers");
            ps.push_back(p.get<unsigned>());
        }
        LPoly c = lpoly_from_json(entry["coeff"]);
        if (c.is_zero()) fail(Errc::cache_corrupt, "zero coefficient stored in component");
        if (!out.emplace(Partition(std::move(ps)), std::move(c)).second)
            fail(Errc::cache_corrupt, "duplicate partition in component");
    }
    return out;
}

Json hbasis_to_json(const HBasisMap& h, unsigned d) {
    Json arr = Json::array();
    for (const auto& [key, poly] : h) {
        if (key.d != d) continue;
        Json entry;
        entry["partition"] = key.lambda.parts();
        entry["coeff"] = lpoly_to_json(poly);
        arr.push_back(std::move(entry));
    }
    return arr;
}

std::string store_to_cache_text(const ModuliStore& st) {
    Json entries = Json::object();
    for (const auto& [key, poly] : st.polys_snapshot()) entries[key.str()] = lpoly_to_json(poly);
    for (const auto& [key, comp] : st.comps_snapshot())
        entries[key.str()] = component_to_json(comp);
    Json root;
    root["version"] = cache_format_version;
    root["entries"] = std::move(entries);
    return root.dump();
}

void load_cache_text_into_store(const std::string& text, ModuliStore& st) {
    Json root = Json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (root.is_discarded() || !root.is_object())
        fail(Errc::cache_corrupt, "cache file is not valid JSON");
    if (!root.contains("version") || !root["version"].is_string() ||
        root["version"].get<std::string>() != cache_format_version)
        fail(Errc::cache_corrupt, "cache version mismatch");
    if (!root.contains("entries") || !root["entries"].is_object())
        fail(Errc::cache_corrupt, "cache entries missing");
    for (const auto& [text_key, value] : root["entries"].items()) {
        auto key = ModuliKey::parse(text_key);
        if (!key) fail(Errc::cache_corrupt, "bad cache key '" + text_key + "'");
        if (kind_is_scalar(key->kind))
            st.put_poly(*key, lpoly_from_json(value));
        else
            st.put_comp(*key, component_from_json(value));
    }
}

FileLock::FileLock(const std::string& path) {
    fd_ = ::open(path.c_str(), O_RDWR | O_CREAT, 0644);
    if (fd_ >= 0) ::flock(fd_, LOCK_EX);
}

FileLock::~FileLock() {
    if (fd_ >= 0) {
        ::flock(fd_, LOCK_UN);
        ::close(fd_);
    }
}

void load_cache_file(const std::string& path, ModuliStore& st) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return;
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    if (text.empty()) return; // freshly created by the lock; treat as absent
    load_cache_text_into_store(text, st);
}

void save_cache_file(const std::string& path, const ModuliStore& st) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << store_to_cache_text(st);
    }
    std::rename(tmp.c_str(), path.c_str());
}

} // namespace hgm

#include "cyops/cache.hpp"

#include <unistd.h>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "cyops/error.hpp"

namespace cyops {

namespace {

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

}  // namespace

std::string ResultCache::path_for(const CacheKey& key) const {
    std::string blob = key.record + "\x1f" + key.command + "\x1f" + key.params;
    return dir_ + "/" + fnv1a_hex(blob) + ".json";
}

std::optional<std::string> ResultCache::lookup(const CacheKey& key) const {
    std::ifstream in(path_for(key));
    if (!in) return std::nullopt;
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception&) {
        return std::nullopt;
    }
    if (!doc.contains("key") || !doc.contains("result")) return std::nullopt;
    const auto& k = doc["key"];
    if (k.value("record", "") != key.record || k.value("command", "") != key.command ||
        k.value("params", "") != key.params)
        return std::nullopt;  // hash collision: treat as a miss
    return doc["result"].dump(2);
}

void ResultCache::store(const CacheKey& key, const std::string& result_json) const {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir_, ec);
    nlohmann::json doc;
    doc["key"] = {{"record", key.record}, {"command", key.command}, {"params", key.params}};
    doc["result"] = nlohmann::json::parse(result_json);
    std::string final_path = path_for(key);
    // per-process temp name so concurrent writers never interleave
    std::string tmp_path = final_path + ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp_path);
        if (!out) throw Error("cache: cannot write " + tmp_path);
        out << doc.dump(2) << "\n";
    }
    fs::rename(tmp_path, final_path, ec);
    if (ec) throw Error("cache: rename failed: " + ec.message());
}

}  // namespace cyops

#pragma once

// Persistent result cache: one JSON document per (record, command,
// parameters), under a content-addressed filename. Writes go through a
// temp file and an atomic rename; reads verify the stored key to guard
// against hash collisions.

#include <optional>
#include <string>

namespace cyops {

struct CacheKey {
    std::string record;   // canonical record text (or other input digest)
    std::string command;
    std::string params;   // normalized parameter string
};

class ResultCache {
public:
    explicit ResultCache(std::string dir) : dir_(std::move(dir)) {}

    // JSON text of the stored result, if present.
    std::optional<std::string> lookup(const CacheKey& key) const;
    void store(const CacheKey& key, const std::string& result_json) const;

    std::string path_for(const CacheKey& key) const;

private:
    std::string dir_;
};

}  // namespace cyops

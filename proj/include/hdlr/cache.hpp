#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "hdlr/weightfn.hpp"

namespace hdlr {

/// File-backed result cache for Grassmannian constants: one file per key
/// holding the canonical polynomial string. Writes are atomic (tmp + rename).
class ResultCache {
public:
    explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    /// HDLR_CACHE_DIR when set, else ".hdlr-cache" under the working directory.
    static std::filesystem::path default_dir();

    static std::string key(Theory th, int d, int n, const SubsetIndex& I, const SubsetIndex& J,
                           const SubsetIndex& K, bool equivariant);

    std::optional<std::string> get(const std::string& key) const;
    void put(const std::string& key, const std::string& value) const;

    std::vector<std::pair<std::string, std::string>> entries() const;
    void clear() const;
    const std::filesystem::path& dir() const { return dir_; }

private:
    std::filesystem::path dir_;
    std::filesystem::path path_of(const std::string& key) const;
};

/// Atomic file write used by the cache and the CLI emitters.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

} // namespace hdlr

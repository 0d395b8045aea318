#include "hdlr/cache.hpp"

#include <cstdlib>
#include <fstream>

#include "hdlr/errors.hpp"

namespace hdlr {

namespace fs = std::filesystem;

fs::path ResultCache::default_dir() {
    if (const char* env = std::getenv("HDLR_CACHE_DIR")) return fs::path(env);
    return fs::path(".hdlr-cache");
}

std::string ResultCache::key(Theory th, int d, int n, const SubsetIndex& I, const SubsetIndex& J,
                             const SubsetIndex& K, bool equivariant) {
    std::string k = std::string(theory_name(th)) + "_d" + std::to_string(d) + "_n" +
                    std::to_string(n) + "/" + I.str() + "_" + J.str() + "_" + K.str();
    if (equivariant) k += "_eq";
    return k;
}

fs::path ResultCache::path_of(const std::string& key) const { return dir_ / (key + ".txt"); }

std::optional<std::string> ResultCache::get(const std::string& key) const {
    std::ifstream in(path_of(key));
    if (!in) return std::nullopt;
    std::string value((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return value;
}

void ResultCache::put(const std::string& key, const std::string& value) const {
    fs::path p = path_of(key);
    fs::create_directories(p.parent_path());
    write_file_atomic(p, value);
}

std::vector<std::pair<std::string, std::string>> ResultCache::entries() const {
    std::vector<std::pair<std::string, std::string>> out;
    if (!fs::exists(dir_)) return out;
    for (auto& entry : fs::recursive_directory_iterator(dir_)) {
        if (!entry.is_regular_file() || entry.path().extension() != ".txt") continue;
        std::ifstream in(entry.path());
        std::string value((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        std::string key = fs::relative(entry.path(), dir_).generic_string();
        key = key.substr(0, key.size() - 4);
        out.emplace_back(std::move(key), std::move(value));
    }
    std::sort(out.begin(), out.end());
    return out;
}

void ResultCache::clear() const {
    if (fs::exists(dir_)) fs::remove_all(dir_);
}

void write_file_atomic(const fs::path& path, const std::string& content) {
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write " + tmp.string());
        out << content;
    }
    fs::rename(tmp, path);
}

} // namespace hdlr

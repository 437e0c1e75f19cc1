#include "qbps/cache.hpp"

#include <openssl/evp.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qbps/errors.hpp"

namespace qbps {

std::string content_hash(const std::vector<std::string>& parts) {
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    if (!ctx) throw std::runtime_error("cannot allocate digest context");
    EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
    for (const std::string& part : parts) {
        const std::string prefix = std::to_string(part.size()) + ":";
        EVP_DigestUpdate(ctx, prefix.data(), prefix.size());
        EVP_DigestUpdate(ctx, part.data(), part.size());
    }
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx, digest, &len);
    EVP_MD_CTX_free(ctx);
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 0xf];
    }
    return out;
}

CacheStore::CacheStore(std::string directory) : dir_(std::move(directory)) {
    std::filesystem::create_directories(dir_);
}

std::optional<std::string> CacheStore::lookup(const std::string& key) const {
    std::filesystem::path path = std::filesystem::path(dir_) / (key + ".out");
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void CacheStore::store(const std::string& key, const std::string& value) const {
    std::filesystem::path final_path = std::filesystem::path(dir_) / (key + ".out");
    std::filesystem::path tmp_path =
        std::filesystem::path(dir_) /
        (key + ".tmp." + std::to_string(static_cast<unsigned long>(::getpid())));
    {
        std::ofstream out(tmp_path, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write cache entry " + tmp_path.string());
        out << value;
    }
    std::error_code ec;
    std::filesystem::rename(tmp_path, final_path, ec);
    if (ec) {
        std::filesystem::remove(tmp_path);
    }
}

std::string CacheStore::resolve_directory(const std::string& override_dir) {
    if (!override_dir.empty()) return override_dir;
    if (const char* env = std::getenv("QBPS_CACHE"); env && *env) return env;
    return ".qbps-cache";
}

}  // namespace qbps

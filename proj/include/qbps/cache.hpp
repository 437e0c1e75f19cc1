#pragma once

#include <optional>
#include <string>
#include <vector>

namespace qbps {

// SHA-256 of the concatenated parts (length-prefixed, so distinct splits give
// distinct digests), hex encoded.
std::string content_hash(const std::vector<std::string>& parts);

// Directory of content-addressed result files.  Writers go through a
// temporary file plus atomic rename, so concurrent runs race benignly and
// readers never observe partial entries.  Entries keyed under a different
// artifact version simply never match.
class CacheStore {
  public:
    explicit CacheStore(std::string directory);

    const std::string& directory() const { return dir_; }

    std::optional<std::string> lookup(const std::string& key) const;
    void store(const std::string& key, const std::string& value) const;

    // Resolves the cache directory: explicit override, then QBPS_CACHE, then
    // a dot-directory under the working directory.
    static std::string resolve_directory(const std::string& override_dir);

  private:
    std::string dir_;
};

}  // namespace qbps

#ifndef FPTLAB_CACHE_HPP
#define FPTLAB_CACHE_HPP

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <tuple>

#include "fptlab/poly.hpp"

namespace fptlab {

extern const char* const kToolVersion;

// One cached nu value. Records are keyed by (p, canonical polynomial text,
// level, tool version); nu is immutable once written.
struct CacheRecord {
    std::uint64_t p;
    std::string poly; // canonical serialization
    int e;
    std::int64_t nu;
    std::string tool_version;
};

// Append-only JSON-lines store of nu values. Reads tolerate corrupt lines
// (skipped with a warning); writes take an exclusive flock with a timeout,
// and a timed-out lock degrades to computing without persisting. Safe for
// concurrent invocations: single writer, many readers.
class NuCache {
public:
    explicit NuCache(std::filesystem::path path, bool trace = false);

    /// Returns the cached nu for (f, e) or computes, appends and returns it.
    std::int64_t lookup_or_compute(const Polynomial& f, int e, const std::function<std::int64_t()>& compute);

    const std::filesystem::path& path() const { return path_; }
    std::size_t size() const { return index_.size(); }

private:
    void load();
    bool append(const CacheRecord& record);

    std::filesystem::path path_;
    bool trace_;
    std::map<std::tuple<std::uint64_t, std::string, int>, std::int64_t> index_;
};

} // namespace fptlab

#endif

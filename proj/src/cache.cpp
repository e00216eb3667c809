#include "fptlab/cache.hpp"

#include <cerrno>
#include <chrono>
#include <fstream>
#include <iostream>
#include <thread>

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <json.hpp>

#include "fptlab/fedder.hpp"

namespace fptlab {

const char* const kToolVersion = "0.1.0";

namespace {

using nlohmann::json;

constexpr auto kLockTimeout = std::chrono::seconds(2);
constexpr auto kLockRetry = std::chrono::milliseconds(20);

std::string serialize_record(const CacheRecord& r)
{
    json j;
    j["p"] = r.p;
    j["poly"] = r.poly;
    j["e"] = r.e;
    j["nu"] = r.nu;
    j["tool_version"] = r.tool_version;
    return j.dump();
}

bool deserialize_record(const std::string& line, CacheRecord& out)
{
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object())
        return false;
    if (!j.contains("p") || !j.contains("poly") || !j.contains("e") || !j.contains("nu") ||
        !j.contains("tool_version"))
        return false;
    if (!j["p"].is_number_unsigned() || !j["poly"].is_string() || !j["e"].is_number_integer() ||
        !j["nu"].is_number_integer() || !j["tool_version"].is_string())
        return false;
    out.p = j["p"].get<std::uint64_t>();
    out.poly = j["poly"].get<std::string>();
    out.e = j["e"].get<int>();
    out.nu = j["nu"].get<std::int64_t>();
    out.tool_version = j["tool_version"].get<std::string>();
    return true;
}

// RAII exclusive flock; `held()` reports whether the lock was acquired
// before the timeout.
class FileLock {
public:
    explicit FileLock(const std::filesystem::path& path)
    {
        fd_ = ::open(path.c_str(), O_CREAT | O_RDWR | O_CLOEXEC, 0644);
        if (fd_ < 0)
            return;
        const auto deadline = std::chrono::steady_clock::now() + kLockTimeout;
        while (::flock(fd_, LOCK_EX | LOCK_NB) != 0) {
            if (errno != EWOULDBLOCK && errno != EINTR)
                return;
            if (std::chrono::steady_clock::now() >= deadline)
                return;
            std::this_thread::sleep_for(kLockRetry);
        }
        held_ = true;
    }

    ~FileLock()
    {
        if (fd_ >= 0) {
            if (held_)
                ::flock(fd_, LOCK_UN);
            ::close(fd_);
        }
    }

    bool held() const { return held_; }

private:
    int fd_ = -1;
    bool held_ = false;
};

} // namespace

NuCache::NuCache(std::filesystem::path path, bool trace) : path_(std::move(path)), trace_(trace)
{
    load();
}

void NuCache::load()
{
    std::ifstream in(path_);
    if (!in)
        return;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty())
            continue;
        CacheRecord r;
        if (!deserialize_record(line, r)) {
            std::cerr << "fptlab: warning: skipping corrupt cache line " << lineno << " in " << path_ << "\n";
            continue;
        }
        if (r.tool_version != kToolVersion)
            continue; // version mismatch is a miss
        index_[{r.p, r.poly, r.e}] = r.nu;
    }
}

bool NuCache::append(const CacheRecord& record)
{
    std::error_code ec;
    const auto dir = path_.parent_path();
    if (!dir.empty())
        std::filesystem::create_directories(dir, ec);

    FileLock lock(path_);
    if (!lock.held()) {
        std::cerr << "fptlab: warning: cache lock timed out; result not persisted\n";
        return false;
    }
    std::ofstream out(path_, std::ios::app);
    if (!out) {
        std::cerr << "fptlab: warning: cannot append to cache " << path_ << "\n";
        return false;
    }
    out << serialize_record(record) << "\n";
    return true;
}

std::int64_t NuCache::lookup_or_compute(const Polynomial& f, int e, const std::function<std::int64_t()>& compute)
{
    const std::string key_poly = f.str();
    const auto key = std::make_tuple(f.p().value(), key_poly, e);
    if (auto it = index_.find(key); it != index_.end()) {
        if (trace_)
            std::cerr << "fptlab: cache hit p=" << f.p().value() << " e=" << e << " poly=" << key_poly << "\n";
        return it->second;
    }
    if (trace_)
        std::cerr << "fptlab: cache miss p=" << f.p().value() << " e=" << e << " poly=" << key_poly << "\n";
    const std::int64_t value = compute();
    index_[key] = value;
    append(CacheRecord{f.p().value(), key_poly, e, value, kToolVersion});
    return value;
}

} // namespace fptlab

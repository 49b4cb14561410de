#pragma once

#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>

namespace kpg {

/// Potentiality verdicts keyed by (sequence text, target key), persisted as
/// lines "SEQ TARGET V" with V in {0,1} under <dir>/verdicts.txt. Safe for
/// concurrent use; repeated keys resolve last-writer-wins.
class VerdictCache {
public:
    /// In-memory only.
    VerdictCache() = default;
    /// Loads existing verdicts and appends new ones to <dir>/verdicts.txt.
    explicit VerdictCache(const std::filesystem::path& dir);

    std::optional<bool> lookup(const std::string& seq, const std::string& target) const;
    void store(const std::string& seq, const std::string& target, bool verdict);

    std::size_t size() const;

    /// Name of the environment variable consulted for a default directory.
    static constexpr const char* kEnvironmentVariable = "KPG_CACHE_DIR";

private:
    static std::string key(const std::string& seq, const std::string& target) { return seq + ' ' + target; }

    mutable std::shared_mutex mutex_;
    std::unordered_map<std::string, bool> verdicts_;
    std::ofstream log_;
};

} // namespace kpg

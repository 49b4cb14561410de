#include "kpg/verdict_cache.hpp"

#include "kpg/error.hpp"

#include <sstream>

namespace kpg {

VerdictCache::VerdictCache(const std::filesystem::path& dir)
{
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    const auto file = dir / "verdicts.txt";
    {
        std::ifstream in(file);
        std::string line;
        while (std::getline(in, line)) {
            std::istringstream fields(line);
            std::string seq, target, verdict;
            if (fields >> seq >> target >> verdict && (verdict == "0" || verdict == "1"))
                verdicts_[key(seq, target)] = verdict == "1";
        }
    }
    log_.open(file, std::ios::app);
    if (!log_)
        throw Error("cannot open verdict cache " + file.string());
}

std::optional<bool> VerdictCache::lookup(const std::string& seq, const std::string& target) const
{
    std::shared_lock lock(mutex_);
    auto it = verdicts_.find(key(seq, target));
    if (it == verdicts_.end())
        return std::nullopt;
    return it->second;
}

void VerdictCache::store(const std::string& seq, const std::string& target, bool verdict)
{
    std::unique_lock lock(mutex_);
    verdicts_[key(seq, target)] = verdict;
    if (log_.is_open()) {
        log_ << seq << ' ' << target << ' ' << (verdict ? '1' : '0') << '\n';
        log_.flush();
    }
}

std::size_t VerdictCache::size() const
{
    std::shared_lock lock(mutex_);
    return verdicts_.size();
}

} // namespace kpg

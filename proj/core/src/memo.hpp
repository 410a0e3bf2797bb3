#pragma once

#include <memory>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace hopfmzv::detail {

/// Thread-safe cache of a pure function. Values are computed outside the lock,
/// so recursive lookups are fine; concurrent misses on the same key may both
/// compute, and the first insert wins (both results are equal).
template <typename Key, typename Value, typename Hash = std::hash<Key>>
class Memo {
public:
    template <typename Compute>
    std::shared_ptr<const Value> get(const Key& key, Compute&& compute) {
        {
            std::shared_lock lock(mutex_);
            if (auto it = map_.find(key); it != map_.end())
                return it->second;
        }
        auto value = std::make_shared<const Value>(compute());
        std::unique_lock lock(mutex_);
        auto [it, inserted] = map_.try_emplace(key, std::move(value));
        return it->second;
    }

private:
    std::shared_mutex mutex_;
    std::unordered_map<Key, std::shared_ptr<const Value>, Hash> map_;
};

} // namespace hopfmzv::detail

#ifndef ARTIFACT_CACHE_HPP
#define ARTIFACT_CACHE_HPP

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

namespace artifact {

// Process-wide memo table. Values are built outside the lock; when two
// threads build the same key the first insertion wins. References stay valid
// for the lifetime of the cache.
template <class K, class V>
class Cache {
public:
    template <class F>
    const V& get(const K& key, F&& make)
    {
        {
            std::shared_lock lock(mu_);
            auto it = map_.find(key);
            if (it != map_.end()) return *it->second;
        }
        auto value = std::make_unique<V>(make());
        std::unique_lock lock(mu_);
        auto [it, inserted] = map_.emplace(key, std::move(value));
        return *it->second;
    }

private:
    std::shared_mutex mu_;
    std::map<K, std::unique_ptr<V>> map_;
};

} // namespace artifact

#endif

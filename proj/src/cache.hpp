#pragma once

#include <map>
#include <mutex>
#include <shared_mutex>

namespace vex::detail {

/// Insert-only memo table safe for concurrent readers and writers. Values are
/// never erased, so returned references stay valid for the program lifetime.
template <class K, class V>
class MemoTable {
 public:
  template <class Compute>
  const V& get(const K& key, Compute&& compute) {
    {
      std::shared_lock lock(mu_);
      if (auto it = map_.find(key); it != map_.end()) return it->second;
    }
    V value = compute();
    std::unique_lock lock(mu_);
    return map_.try_emplace(key, std::move(value)).first->second;
  }

 private:
  std::shared_mutex mu_;
  std::map<K, V> map_;
};

}  // namespace vex::detail

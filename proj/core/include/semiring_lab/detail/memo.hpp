#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>

namespace semiring_lab::detail {

/// Per-structure cache for derived analysis results. Structures are
/// immutable after validation, so a cached value never goes stale.
/// The mutex is recursive because computing one entry may pull in
/// another entry of the same structure (is_local needs the ideal list).
class MemoMap {
 public:
  template <typename T, typename F>
  const T& get(const std::string& key, F&& compute) const {
    std::scoped_lock lock(mutex_);
    auto it = entries_.find(key);
    if (it == entries_.end()) {
      std::shared_ptr<const void> value = std::make_shared<const T>(compute());
      it = entries_.emplace(key, std::move(value)).first;
    }
    return *static_cast<const T*>(it->second.get());
  }

 private:
  mutable std::recursive_mutex mutex_;
  mutable std::unordered_map<std::string, std::shared_ptr<const void>> entries_;
};

}  // namespace semiring_lab::detail

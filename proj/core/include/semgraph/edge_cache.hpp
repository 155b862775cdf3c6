#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "semgraph/codec.hpp"
#include "semgraph/shard_store.hpp"

namespace semgraph {

struct CacheConfig {
  std::uint64_t budget_bytes = 0;  // 0 disables caching
  CacheMode mode = CacheMode::kUncompressed;
};

struct CacheEntry {
  std::uint64_t shard_id = 0;
  io::Bytes payload;  // compressed per mode
  std::uint64_t raw_bytes = 0;
  std::uint32_t raw_crc = 0;

  std::uint64_t stored_bytes() const { return payload.size(); }
};

enum class AdmitResult { kAdmitted, kRejectedFull, kAlreadyPresent };

// Budgeted shard payload cache. Entries are admitted while they fit and are
// never evicted, so a stable working set stays resident across iterations.
// get_or_load and admit may be called from any number of workers.
class EdgeCache {
 public:
  EdgeCache(CacheConfig config, std::uint64_t shard_count);

  const CacheConfig& config() const { return config_; }

  AdmitResult admit(std::uint64_t shard_id, std::span<const std::uint8_t> raw_payload);

  // Hit: decompress and decode, no disk read. Miss: read through the store,
  // then try to admit. A cached entry that fails its integrity check is
  // dropped and the shard is reloaded from disk once.
  Shard get_or_load(std::uint64_t shard_id, const ShardStore& store);

  bool contains(std::uint64_t shard_id) const;
  std::uint64_t used_bytes() const;
  std::uint64_t cached_raw_bytes() const;
  std::size_t entry_count() const;

  // Lets tests damage a stored entry to exercise the integrity path.
  void mutate_entry_for_testing(std::uint64_t shard_id, const std::function<void(io::Bytes&)>& fn);

 private:
  std::shared_ptr<const CacheEntry> find(std::uint64_t shard_id) const;
  void drop(std::uint64_t shard_id, const CacheEntry* expected);
  Shard load_from_disk(std::uint64_t shard_id, const ShardStore& store);

  CacheConfig config_;
  mutable std::mutex mu_;
  std::vector<std::shared_ptr<const CacheEntry>> entries_;
  std::uint64_t used_bytes_ = 0;
  std::uint64_t cached_raw_bytes_ = 0;
};

}  // namespace semgraph

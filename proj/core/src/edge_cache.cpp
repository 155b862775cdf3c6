#include "semgraph/edge_cache.hpp"

#include <cassert>
#include <string>

#include "semgraph/error.hpp"

namespace semgraph {

EdgeCache::EdgeCache(CacheConfig config, std::uint64_t shard_count)
    : config_(config), entries_(shard_count) {}

AdmitResult EdgeCache::admit(std::uint64_t shard_id, std::span<const std::uint8_t> raw_payload) {
  if (shard_id >= entries_.size()) {
    throw Error(ErrorCode::kInvalidArgument, "no shard " + std::to_string(shard_id));
  }
  {
    std::lock_guard lock(mu_);
    if (entries_[shard_id]) return AdmitResult::kAlreadyPresent;
    if (used_bytes_ >= config_.budget_bytes) return AdmitResult::kRejectedFull;
  }

  auto entry = std::make_shared<CacheEntry>();
  entry->shard_id = shard_id;
  entry->payload = compress(config_.mode, raw_payload);
  entry->raw_bytes = raw_payload.size();
  entry->raw_crc = crc32(raw_payload);

  std::lock_guard lock(mu_);
  if (entries_[shard_id]) return AdmitResult::kAlreadyPresent;
  if (entry->stored_bytes() > config_.budget_bytes - used_bytes_) return AdmitResult::kRejectedFull;
  used_bytes_ += entry->stored_bytes();
  cached_raw_bytes_ += entry->raw_bytes;
  entries_[shard_id] = std::move(entry);
  assert(used_bytes_ <= config_.budget_bytes);
  return AdmitResult::kAdmitted;
}

std::shared_ptr<const CacheEntry> EdgeCache::find(std::uint64_t shard_id) const {
  std::lock_guard lock(mu_);
  return shard_id < entries_.size() ? entries_[shard_id] : nullptr;
}

void EdgeCache::drop(std::uint64_t shard_id, const CacheEntry* expected) {
  std::lock_guard lock(mu_);
  if (entries_[shard_id].get() != expected) return;
  used_bytes_ -= expected->stored_bytes();
  cached_raw_bytes_ -= expected->raw_bytes;
  entries_[shard_id].reset();
}

Shard EdgeCache::load_from_disk(std::uint64_t shard_id, const ShardStore& store) {
  store.counters().add_cache_miss();
  const auto payload = store.load_payload(shard_id);
  auto shard = decode_payload(shard_id, store.meta().intervals[shard_id], payload,
                              store.meta().vertex_count);
  if (config_.budget_bytes > 0) admit(shard_id, payload);
  return shard;
}

Shard EdgeCache::get_or_load(std::uint64_t shard_id, const ShardStore& store) {
  if (shard_id >= entries_.size()) {
    throw Error(ErrorCode::kInvalidArgument, "no shard " + std::to_string(shard_id));
  }
  if (auto entry = find(shard_id)) {
    try {
      const auto raw = decompress(config_.mode, entry->payload, entry->raw_bytes);
      if (crc32(raw) != entry->raw_crc) throw Error(ErrorCode::kFormat, "cached payload checksum mismatch");
      store.counters().add_cache_hit();
      return decode_payload(shard_id, store.meta().intervals[shard_id], raw, store.meta().vertex_count);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kFormat) throw;
      drop(shard_id, entry.get());
    }
  }
  return load_from_disk(shard_id, store);
}

bool EdgeCache::contains(std::uint64_t shard_id) const { return find(shard_id) != nullptr; }

std::uint64_t EdgeCache::used_bytes() const {
  std::lock_guard lock(mu_);
  return used_bytes_;
}

std::uint64_t EdgeCache::cached_raw_bytes() const {
  std::lock_guard lock(mu_);
  return cached_raw_bytes_;
}

std::size_t EdgeCache::entry_count() const {
  std::lock_guard lock(mu_);
  std::size_t n = 0;
  for (const auto& e : entries_) n += e != nullptr;
  return n;
}

void EdgeCache::mutate_entry_for_testing(std::uint64_t shard_id,
                                         const std::function<void(io::Bytes&)>& fn) {
  std::lock_guard lock(mu_);
  auto& slot = entries_.at(shard_id);
  if (!slot) return;
  auto copy = std::make_shared<CacheEntry>(*slot);
  const auto before = copy->stored_bytes();
  fn(copy->payload);
  used_bytes_ = used_bytes_ - before + copy->stored_bytes();
  slot = std::move(copy);
}

}  // namespace semgraph

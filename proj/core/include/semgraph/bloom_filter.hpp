#pragma once

#include <cstdint>
#include <vector>

namespace semgraph {

// Bloom filter over vertex ids with double hashing
// h_i(x) = h1(x) + i * h2(x) mod m.
class BloomFilter {
 public:
  static constexpr double kDefaultBitsPerElement = 10.0;
  static constexpr std::uint64_t kMinBits = 64;

  // Sized for expected_elements distinct keys: m = ceil(bits * n),
  // k = round(m / n * ln 2) clamped to [1, 16].
  explicit BloomFilter(std::uint64_t expected_elements,
                       double bits_per_element = kDefaultBitsPerElement);

  void insert(std::uint64_t key);
  bool may_contain(std::uint64_t key) const;

  std::uint64_t bit_count() const { return bit_count_; }
  unsigned hash_count() const { return hash_count_; }
  std::uint64_t element_count() const { return element_count_; }

  // Standard estimate (1 - e^{-kn/m})^k for the current fill.
  double expected_false_positive_rate() const;

 private:
  std::vector<std::uint64_t> words_;
  std::uint64_t bit_count_;
  unsigned hash_count_;
  std::uint64_t element_count_ = 0;
};

}  // namespace semgraph

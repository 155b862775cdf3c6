#include "semgraph/bloom_filter.hpp"

#include <algorithm>
#include <cmath>

namespace semgraph {

namespace {

// splitmix64 finalizer
std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

BloomFilter::BloomFilter(std::uint64_t expected_elements, double bits_per_element) {
  if (expected_elements == 0) {
    bit_count_ = kMinBits;
    hash_count_ = 1;
  } else {
    bit_count_ = std::max<std::uint64_t>(
        1, static_cast<std::uint64_t>(std::ceil(bits_per_element * static_cast<double>(expected_elements))));
    const double k = std::round(static_cast<double>(bit_count_) / static_cast<double>(expected_elements) *
                                std::log(2.0));
    hash_count_ = static_cast<unsigned>(std::clamp(k, 1.0, 16.0));
  }
  words_.assign((bit_count_ + 63) / 64, 0);
}

void BloomFilter::insert(std::uint64_t key) {
  const auto h1 = mix64(key);
  const auto h2 = mix64(h1 ^ 0x6a09e667f3bcc909ULL) | 1;
  for (unsigned i = 0; i < hash_count_; ++i) {
    const auto bit = (h1 + i * h2) % bit_count_;
    words_[bit >> 6] |= std::uint64_t{1} << (bit & 63);
  }
  ++element_count_;
}

bool BloomFilter::may_contain(std::uint64_t key) const {
  const auto h1 = mix64(key);
  const auto h2 = mix64(h1 ^ 0x6a09e667f3bcc909ULL) | 1;
  for (unsigned i = 0; i < hash_count_; ++i) {
    const auto bit = (h1 + i * h2) % bit_count_;
    if ((words_[bit >> 6] & (std::uint64_t{1} << (bit & 63))) == 0) return false;
  }
  return true;
}

double BloomFilter::expected_false_positive_rate() const {
  if (element_count_ == 0) return 0.0;
  const double k = hash_count_;
  return std::pow(1.0 - std::exp(-k * static_cast<double>(element_count_) / static_cast<double>(bit_count_)), k);
}

}  // namespace semgraph

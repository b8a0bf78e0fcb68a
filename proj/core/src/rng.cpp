#include "plcover/rng.hpp"

#include <numeric>
#include <stdexcept>

namespace plcover {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

Rng::Rng(std::uint64_t seed) : seed_(seed) {
  std::uint64_t sm = seed;
  for (auto& w : s_) w = splitmix64(sm);
}

std::uint64_t Rng::next_u64() {
  std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below: n must be positive");
  // Rejection from the largest multiple of n below 2^64.
  std::uint64_t threshold = (0 - n) % n;
  for (;;) {
    std::uint64_t r = next_u64();
    if (r >= threshold) return r % n;
  }
}

Rng Rng::split(std::uint64_t tag) const {
  std::uint64_t sm = seed_ ^ (0x9e3779b97f4a7c15ULL * (tag + 1));
  return Rng(splitmix64(sm));
}

std::vector<std::pair<Point, Point>> sample_pairs(const PointSet& S,
                                                  std::int64_t x, Rng& rng) {
  const std::uint64_t n = S.size();
  if (n < 2) throw std::invalid_argument("sample_pairs: need at least 2 points");
  if (x < 1) throw std::invalid_argument("sample_pairs: x must be positive");
  std::vector<std::pair<Point, Point>> out;
  out.reserve(static_cast<std::size_t>(x));
  for (std::int64_t t = 0; t < x; ++t) {
    std::uint64_t i = rng.below(n);
    std::uint64_t j;
    do {
      j = rng.below(n);
    } while (j == i);
    out.emplace_back(S[i], S[j]);
  }
  return out;
}

PointSet sample_without_replacement(const PointSet& S, std::int64_t m, Rng& rng) {
  const std::int64_t n = static_cast<std::int64_t>(S.size());
  if (m < 1) throw std::invalid_argument("sample_without_replacement: m must be positive");
  if (m > n)
    throw std::invalid_argument("sample_without_replacement: m exceeds |S|");
  std::vector<std::uint32_t> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0u);
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(m));
  for (std::int64_t t = 0; t < m; ++t) {
    std::uint64_t j = static_cast<std::uint64_t>(t) +
                      rng.below(static_cast<std::uint64_t>(n - t));
    std::swap(idx[static_cast<std::size_t>(t)], idx[static_cast<std::size_t>(j)]);
    out.push_back(S[idx[static_cast<std::size_t>(t)]]);
  }
  return PointSet::unchecked(std::move(out));
}

}  // namespace plcover

#include "majperm/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace majperm {

void check_enumeration_limit(int n, int limit) {
  const int cap = std::min(limit, kMaxEnumerationN);
  if (n < 1 || n > cap) {
    throw SizeLimitError("n = " + std::to_string(n) + " is outside the enumeration limit 1.." +
                         std::to_string(cap));
  }
}

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const auto n = word_.size();
  std::vector<bool> seen(n + 1, false);
  for (int v : word_) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("not a permutation of [" + std::to_string(n) + "]");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(w), Unchecked{});
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> w;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c < '0' || c > '9') throw std::invalid_argument("bad permutation digit in '" + std::string(text) + "'");
      w.push_back(c - '0');
    }
  } else {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      auto comma = text.find(',', pos);
      if (comma == std::string_view::npos) comma = text.size();
      auto field = text.substr(pos, comma - pos);
      int v = 0;
      auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
      if (ec != std::errc() || ptr != field.data() + field.size() || field.empty()) {
        throw std::invalid_argument("bad permutation entry '" + std::string(field) + "'");
      }
      w.push_back(v);
      pos = comma + 1;
    }
  }
  return Permutation(std::move(w));
}

std::string Permutation::to_string() const {
  std::string out;
  if (word_.size() <= 9) {
    for (int v : word_) out.push_back(static_cast<char>('0' + v));
    return out;
  }
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(word_[i]);
  }
  return out;
}

int maj_of(std::span<const int> seq) {
  int total = 0;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    if (seq[i] > seq[i + 1]) total += static_cast<int>(i + 1);
  }
  return total;
}

int inv_of(std::span<const int> seq) {
  int total = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (seq[i] > seq[j]) ++total;
    }
  }
  return total;
}

int imaj_of(std::span<const int> seq) {
  // position of each value; values need not be contiguous
  int total = 0;
  for (std::size_t a = 0; a < seq.size(); ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      if (seq[b] == seq[a] + 1) total += seq[a];
    }
  }
  return total;
}

Permutation inverse(const Permutation& p) {
  std::vector<int> q(static_cast<std::size_t>(p.size()));
  for (int i = 1; i <= p.size(); ++i) q[static_cast<std::size_t>(p[i] - 1)] = i;
  return Permutation(std::move(q), Permutation::Unchecked{});
}

std::uint64_t factorial_u64(int n) {
  if (n < 0 || n > 20) throw std::out_of_range("factorial_u64 needs 0 <= n <= 20");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::vector<RankRange> partition_ranks(int n, std::size_t parts) {
  const auto total = factorial_u64(n);
  if (parts == 0) parts = 1;
  if (parts > total) parts = static_cast<std::size_t>(total);
  std::vector<RankRange> out;
  out.reserve(parts);
  const auto base = total / parts;
  const auto extra = total % parts;
  std::uint64_t at = 0;
  for (std::size_t i = 0; i < parts; ++i) {
    const auto len = base + (i < extra ? 1 : 0);
    out.push_back({at, at + len});
    at += len;
  }
  return out;
}

std::uint64_t rank(const Permutation& p) {
  const int n = p.size();
  std::uint64_t r = 0;
  for (int i = 1; i <= n; ++i) {
    std::uint64_t smaller_after = 0;
    for (int j = i + 1; j <= n; ++j) {
      if (p[j] < p[i]) ++smaller_after;
    }
    r += smaller_after * factorial_u64(n - i);
  }
  return r;
}

Permutation unrank(int n, std::uint64_t r) {
  if (r >= factorial_u64(n)) throw std::out_of_range("rank out of range for S_" + std::to_string(n));
  std::vector<int> pool(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
  std::vector<int> w;
  w.reserve(static_cast<std::size_t>(n));
  for (int i = n; i >= 1; --i) {
    const auto f = factorial_u64(i - 1);
    const auto idx = static_cast<std::size_t>(r / f);
    r %= f;
    w.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return Permutation(std::move(w), Permutation::Unchecked{});
}

PermutationStream::PermutationStream(int n, int limit)
    : PermutationStream(n, RankRange{0, 0}, limit) {
  range_ = {0, factorial_u64(n)};
}

PermutationStream::PermutationStream(int n, RankRange range, int limit) : n_(n), range_(range) {
  check_enumeration_limit(n, limit);
  if (range.first > range.last || range.last > factorial_u64(n)) {
    throw std::out_of_range("rank range outside [0, n!)");
  }
}

PermutationStream::iterator PermutationStream::begin() const {
  iterator it;
  if (range_.size() == 0) return it;
  it.current_ = unrank(n_, range_.first);
  it.remaining_ = range_.size();
  return it;
}

PermutationStream::iterator& PermutationStream::iterator::operator++() {
  if (--remaining_ > 0) std::next_permutation(current_.word_.begin(), current_.word_.end());
  return *this;
}

std::vector<Permutation> all_permutations(int n, int limit) {
  std::vector<Permutation> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  PermutationStream stream(n, limit);
  out.reserve(static_cast<std::size_t>(stream.range().size()));
  for (const auto& p : stream) out.push_back(p);
  return out;
}

}  // namespace majperm

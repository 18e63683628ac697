#include "majperm/syt.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace majperm {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t r = 0; r < parts_.size(); ++r) {
    if (parts_[r] < 1 || (r > 0 && parts_[r] > parts_[r - 1])) {
      throw std::invalid_argument("partition parts must be positive and weakly decreasing");
    }
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::uint64_t Partition::hook_length_count() const {
  const int n = size();
  if (n > 20) throw std::out_of_range("hook_length_count needs |lambda| <= 20");
  std::vector<int> column_height(parts_.empty() ? 0 : static_cast<std::size_t>(parts_[0]), 0);
  for (int len : parts_) {
    for (int c = 0; c < len; ++c) ++column_height[static_cast<std::size_t>(c)];
  }
  // multiply by n!/prod(hooks) incrementally to stay inside 64 bits
  std::uint64_t hooks = 1;
  for (std::size_t r = 0; r < parts_.size(); ++r) {
    for (int c = 0; c < parts_[r]; ++c) {
      const int arm = parts_[r] - c - 1;
      const int leg = column_height[static_cast<std::size_t>(c)] - static_cast<int>(r) - 1;
      hooks *= static_cast<std::uint64_t>(arm + leg + 1);
    }
  }
  return factorial_u64(n) / hooks;
}

std::vector<Partition> partitions(int n) {
  if (n < 1) throw std::invalid_argument("partitions needs n >= 1");
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      cur.push_back(part);
      self(self, remaining - part, part);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

namespace {

// Fills entries n, n-1, ..., 1 by repeatedly removing an outer corner of the
// remaining shape.
class SytWalker {
 public:
  SytWalker(const Partition& shape, const std::function<void(const Tableau&)>& visit)
      : visit_(visit), lengths_(shape.parts()), tableau_{shape, {}} {
    for (int len : lengths_) tableau_.rows.emplace_back(static_cast<std::size_t>(len), 0);
  }

  std::uint64_t run() {
    fill(tableau_.shape.size());
    return visited_;
  }

 private:
  void fill(int entry) {
    if (entry == 0) {
      ++visited_;
      visit_(tableau_);
      return;
    }
    for (std::size_t r = 0; r < lengths_.size(); ++r) {
      const int len = lengths_[r];
      const bool corner = len > 0 && (r + 1 == lengths_.size() || lengths_[r + 1] < len);
      if (!corner) continue;
      tableau_.rows[r][static_cast<std::size_t>(len - 1)] = entry;
      --lengths_[r];
      fill(entry - 1);
      ++lengths_[r];
    }
  }

  const std::function<void(const Tableau&)>& visit_;
  std::vector<int> lengths_;
  Tableau tableau_;
  std::uint64_t visited_ = 0;
};

}  // namespace

void syt_for_each(const Partition& shape, const std::function<void(const Tableau&)>& visit) {
  if (shape.size() > kMaxSytN) throw SizeLimitError("SYT enumeration limited to n <= " + std::to_string(kMaxSytN));
  const auto visited = SytWalker(shape, visit).run();
  if (visited != shape.hook_length_count()) {
    throw ExactnessError("SYT count " + std::to_string(visited) + " differs from hook-length count " +
                         std::to_string(shape.hook_length_count()));
  }
}

std::vector<Tableau> syt_enumerate(const Partition& shape) {
  std::vector<Tableau> out;
  syt_for_each(shape, [&](const Tableau& t) { out.push_back(t); });
  return out;
}

int maj_tableau(const Tableau& t) {
  const int n = t.shape.size();
  std::vector<int> row_of(static_cast<std::size_t>(n + 1), -1);
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    for (int v : t.rows[r]) row_of[static_cast<std::size_t>(v)] = static_cast<int>(r);
  }
  int total = 0;
  for (int i = 1; i < n; ++i) {
    if (row_of[static_cast<std::size_t>(i + 1)] > row_of[static_cast<std::size_t>(i)]) total += i;
  }
  return total;
}

std::vector<std::uint64_t> maj_histogram(const Partition& shape) {
  const int n = shape.size();
  std::vector<std::uint64_t> hist(static_cast<std::size_t>(n * (n - 1) / 2 + 1), 0);
  syt_for_each(shape, [&](const Tableau& t) { ++hist[static_cast<std::size_t>(maj_tableau(t))]; });
  return hist;
}

std::uint64_t f_multiplicity(const Partition& shape, int modulus, int i) {
  if (modulus < 1) throw std::invalid_argument("modulus must be positive");
  const int residue = ((i % modulus) + modulus) % modulus;
  const auto hist = maj_histogram(shape);
  std::uint64_t total = 0;
  for (std::size_t m = 0; m < hist.size(); ++m) {
    if (static_cast<int>(m) % modulus == residue) total += hist[m];
  }
  return total;
}

ResidueMatrix joint_matrix_syt(int n, int k, int l, const ForEach& for_each) {
  if (n < 1 || n > kMaxSytN) throw SizeLimitError("SYT oracle limited to 1 <= n <= " + std::to_string(kMaxSytN));
  if (k < 1 || l < 1) throw std::invalid_argument("moduli must be positive");
  const auto shapes = partitions(n);
  std::vector<ResidueMatrix> partial(shapes.size(), ResidueMatrix(n, k, l, StatPair::MajImaj));
  for_each(shapes.size(), [&](std::size_t s) {
    const auto hist = maj_histogram(shapes[s]);
    std::vector<BigInt> row(static_cast<std::size_t>(k), BigInt(0));
    std::vector<BigInt> col(static_cast<std::size_t>(l), BigInt(0));
    for (std::size_t m = 0; m < hist.size(); ++m) {
      row[m % static_cast<std::size_t>(k)] += hist[m];
      col[m % static_cast<std::size_t>(l)] += hist[m];
    }
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < l; ++j) {
        partial[s].at(i, j) = row[static_cast<std::size_t>(i)] * col[static_cast<std::size_t>(j)];
      }
    }
  });
  ResidueMatrix out(n, k, l, StatPair::MajImaj);
  for (const auto& p : partial) {
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < l; ++j) out.at(i, j) += p.at(i, j);
    }
  }
  return out;
}

}  // namespace majperm

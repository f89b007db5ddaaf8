#include "oracle.hpp"

#include <stdexcept>

#include "parallel.hpp"

namespace kingmesh {

namespace {

// Histogram of occurrence counts per pattern; merging is element-wise addition.
using Histogram = std::vector<std::vector<std::uint64_t>>;

void merge_into(Histogram& total, const Histogram& part) {
  for (std::size_t p = 0; p < part.size(); ++p) {
    if (total[p].size() < part[p].size()) total[p].resize(part[p].size(), 0);
    for (std::size_t c = 0; c < part[p].size(); ++c) total[p][c] += part[p][c];
  }
}

UPoly to_poly(const std::vector<std::uint64_t>& hist) {
  std::vector<Integer> coeffs;
  coeffs.reserve(hist.size());
  for (auto h : hist) coeffs.emplace_back(static_cast<unsigned long>(h));
  return UPoly(std::move(coeffs));
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

std::vector<UPoly> distributions_at(const OccurrenceCounter& counter, std::span<const int> lengths, int n, KingClass c,
                                    int jobs) {
  const std::size_t np = counter.size();
  auto histogram_for = [&](auto&& enumerate) {
    // A length-k pattern occurs at most C(n,k) times.
    Histogram h(np);
    for (std::size_t p = 0; p < np; ++p) h[p].assign(binomial(n, lengths[p]) + 1, 0);
    std::vector<std::uint64_t> counts(np);
    enumerate([&](std::span<const int> s) {
      counter.count(s, counts);
      for (std::size_t p = 0; p < np; ++p) {
        if (h[p].size() <= counts[p]) h[p].resize(counts[p] + 1, 0);
        ++h[p][counts[p]];
      }
    });
    return h;
  };

  Histogram total(np);
  if (n <= 1) {
    merge_into(total, histogram_for([&](auto&& visit) { for_each_king(n, c, visit); }));
  } else {
    const auto parts = detail::run_indexed<Histogram>(n, jobs, [&](int i) {
      return histogram_for([&](auto&& visit) { for_each_king_starting_with(n, c, i + 1, visit); });
    });
    for (const auto& part : parts) merge_into(total, part);
  }
  std::vector<UPoly> out;
  out.reserve(np);
  for (const auto& h : total) out.push_back(to_poly(h));
  return out;
}

void require_length(int n) {
  if (n < 0 || n > kMaxEnumerationLength) throw std::invalid_argument("oracle: length out of range");
}

}  // namespace

UPoly distribution(const MeshPattern& p, int n, KingClass c, int jobs) {
  require_length(n);
  const OccurrenceCounter counter({p});
  const int length = p.length();
  return distributions_at(counter, std::span<const int>(&length, 1), n, c, jobs).front();
}

DistributionTable distribution_table(const MeshPattern& p, int n_max, KingClass c, int jobs) {
  return distribution_tables(std::span<const MeshPattern>(&p, 1), n_max, c, jobs).front();
}

std::vector<DistributionTable> distribution_tables(std::span<const MeshPattern> patterns, int n_max, KingClass c,
                                                   int jobs) {
  require_length(n_max);
  const OccurrenceCounter counter(std::vector<MeshPattern>(patterns.begin(), patterns.end()));
  std::vector<DistributionTable> tables;
  std::vector<int> lengths;
  tables.reserve(patterns.size());
  for (const auto& p : patterns) {
    tables.push_back({p, c, {}});
    lengths.push_back(p.length());
  }
  for (int n = 0; n <= n_max; ++n) {
    auto rows = distributions_at(counter, lengths, n, c, jobs);
    for (std::size_t i = 0; i < tables.size(); ++i) tables[i].rows.push_back(std::move(rows[i]));
  }
  return tables;
}

}  // namespace kingmesh

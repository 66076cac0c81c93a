#include "oracles.hpp"

#include <deque>

namespace oracle {

namespace {

bool transitive(const Matrix& m) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m[i][j])
        for (std::size_t k = 0; k < n; ++k)
          if (m[j][k] && !m[i][k]) return false;
  return true;
}

bool antisymmetric(const Matrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (i != j && m[i][j] && m[j][i]) return false;
  return true;
}

Matrix from_bits(std::size_t n, unsigned long long bits, bool with_diagonal) {
  Matrix m(n, std::vector<bool>(n, false));
  std::size_t bit = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (with_diagonal && i == j) {
        m[i][j] = true;
        continue;
      }
      m[i][j] = (bits >> bit++) & 1;
    }
  }
  return m;
}

}  // namespace

Matrix to_matrix(const posetpart::Relation& r) {
  Matrix m(r.size(), std::vector<bool>(r.size(), false));
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r.size(); ++j) m[i][j] = r(i, j);
  return m;
}

posetpart::Relation from_matrix(const Matrix& m) {
  posetpart::Relation r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) r.set(i, j, m[i][j]);
  return r;
}

std::size_t count_quasiorders_raw(std::size_t n) {
  const std::size_t free_bits = n * n - n;
  std::size_t total = 0;
  for (unsigned long long bits = 0; bits < (1ULL << free_bits); ++bits) {
    if (transitive(from_bits(n, bits, true))) ++total;
  }
  return total;
}

std::vector<std::size_t> bell_numbers(std::size_t n) {
  std::vector<std::size_t> bell{1};
  std::vector<std::size_t> row{1};
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<std::size_t> next{row.back()};
    for (std::size_t v : row) next.push_back(next.back() + v);
    bell.push_back(next.front());
    row = std::move(next);
  }
  return bell;
}

std::vector<std::vector<std::size_t>> chain_interval_partitions(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  if (n == 0) return out;
  // Bit i set means a cut between i and i+1.
  for (unsigned long long cuts = 0; cuts < (1ULL << (n - 1)); ++cuts) {
    std::vector<std::size_t> tags(n);
    std::size_t block = 0;
    for (std::size_t i = 0; i < n; ++i) {
      tags[i] = block;
      if (i + 1 < n && ((cuts >> i) & 1)) ++block;
    }
    out.push_back(tags);
  }
  return out;
}

Matrix alternating_sequence_relation(const posetpart::Poset& poset,
                                     const std::vector<std::size_t>& block_of) {
  const std::size_t n = poset.size();
  Matrix result(n, std::vector<bool>(n, false));
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<bool> seen_x(n, false);
    std::deque<std::size_t> queue{x};
    seen_x[x] = true;
    while (!queue.empty()) {
      const std::size_t xi = queue.front();
      queue.pop_front();
      for (std::size_t yi = 0; yi < n; ++yi) {
        if (block_of[yi] != block_of[xi]) continue;
        result[x][yi] = true;
        for (std::size_t next = 0; next < n; ++next) {
          if (poset.leq(yi, next) && !seen_x[next]) {
            seen_x[next] = true;
            queue.push_back(next);
          }
        }
      }
    }
  }
  return result;
}

std::vector<Matrix> all_partial_orders_raw(std::size_t n) {
  std::vector<Matrix> out;
  const std::size_t free_bits = n * n - n;
  for (unsigned long long bits = 0; bits < (1ULL << free_bits); ++bits) {
    Matrix m = from_bits(n, bits, true);
    if (antisymmetric(m) && transitive(m)) out.push_back(m);
  }
  return out;
}

}  // namespace oracle

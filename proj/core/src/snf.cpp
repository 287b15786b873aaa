#include "segal/snf.hpp"

#include <utility>

namespace segal {

namespace {

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

SmithForm smith_normal_form(BigMatrix m, std::size_t cols, bool want_v) {
  const std::size_t rows = m.size();
  SmithForm out;
  out.rows = rows;
  out.cols = cols;
  BigMatrix v;
  if (want_v) {
    v.assign(cols, std::vector<BigInt>(cols, 0));
    for (std::size_t i = 0; i < cols; ++i) v[i][i] = 1;
  }
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (auto& r : m) std::swap(r[a], r[b]);
    if (want_v)
      for (auto& r : v) std::swap(r[a], r[b]);
  };
  // col[b] -= k * col[a]
  auto sub_col = [&](std::size_t b, std::size_t a, const BigInt& k) {
    if (k == 0) return;
    for (auto& r : m) r[b] -= k * r[a];
    if (want_v)
      for (auto& r : v) r[b] -= k * r[a];
  };
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // smallest nonzero entry of the remaining block
    std::size_t pr = rows, pc = cols;
    BigInt best = 0;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (m[i][j] != 0 && (best == 0 || abs(m[i][j]) < best)) {
          best = abs(m[i][j]);
          pr = i;
          pc = j;
        }
    if (pr == rows) break;
    std::swap(m[t], m[pr]);
    swap_cols(t, pc);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        BigInt k = floor_div(m[i][t], m[t][t]);
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= k * m[t][j];
        if (m[i][t] != 0) {
          std::swap(m[t], m[i]);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        BigInt k = floor_div(m[t][j], m[t][t]);
        sub_col(j, t, k);
        if (m[t][j] != 0) {
          swap_cols(t, j);
          clean = false;
        }
      }
      if (!clean) continue;
      // divisibility of the remaining block by the pivot
      for (std::size_t i = t + 1; i < rows && clean; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (m[i][j] % m[t][t] != 0) {
            for (std::size_t c = t; c < cols; ++c) m[t][c] += m[i][c];
            clean = false;
            break;
          }
    }
    if (m[t][t] < 0) m[t][t] = -m[t][t];
    out.diagonal.push_back(m[t][t]);
    ++t;
  }
  if (want_v) out.col_transform = std::move(v);
  return out;
}

}  // namespace segal

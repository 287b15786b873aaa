#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace segal {

using BigInt = boost::multiprecision::cpp_int;
using BigMatrix = std::vector<std::vector<BigInt>>;  // row-major, rows × cols

struct SmithForm {
  std::vector<BigInt> diagonal;  // nonzero invariant factors, each dividing the next
  std::size_t rows = 0, cols = 0;
  // U M V = D with V unimodular (cols × cols); only filled when requested.
  BigMatrix col_transform;
};

SmithForm smith_normal_form(BigMatrix m, std::size_t cols, bool want_col_transform = false);

}  // namespace segal

//  Copyright 2026 The emalp Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#ifndef EMALP_SRC_PRODUCT_GRID_HPP_
#define EMALP_SRC_PRODUCT_GRID_HPP_

#include <cstddef>
#include <vector>

namespace emalp::detail {

// Number of points of a product of per-atom candidate lists, saturating at
// limit + 1.
inline std::size_t product_size(
    const std::vector<std::vector<double>>& choices, std::size_t limit) {
  std::size_t total = 1;
  for (const auto& c : choices) {
    if (c.empty()) return 0;
    if (total > (limit + 1) / c.size()) return limit + 1;
    total *= c.size();
  }
  return total;
}

// Calls visit(point) for every element of the product, last atom fastest.
// Returns early when visit returns false.
template <typename Visit>
void for_each_point(const std::vector<std::vector<double>>& choices,
                    Visit&& visit) {
  const std::size_t n = choices.size();
  for (const auto& c : choices) {
    if (c.empty()) return;
  }
  std::vector<std::size_t> digits(n, 0);
  std::vector<double> point(n);
  for (std::size_t i = 0; i < n; ++i) point[i] = choices[i][0];
  for (;;) {
    if (!visit(point)) return;
    std::size_t i = n;
    for (;;) {
      if (i == 0) return;
      --i;
      if (++digits[i] < choices[i].size()) {
        point[i] = choices[i][digits[i]];
        break;
      }
      digits[i] = 0;
      point[i] = choices[i][0];
    }
  }
}

}  // namespace emalp::detail

#endif  // EMALP_SRC_PRODUCT_GRID_HPP_

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

#include "emalp/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace emalp {

TruthValue eval_conjunctor(AdjointPair kind, TruthValue x, TruthValue y) {
  switch (kind) {
    case AdjointPair::kGodel:
      return std::min(x, y);
    case AdjointPair::kProduct:
      return x * y;
    case AdjointPair::kLukasiewicz: {
      // lo - (1 - hi) rounds once: 1 - hi is exact whenever the result is
      // positive, which keeps top an exact identity.
      const double hi = std::max(x, y);
      const double lo = std::min(x, y);
      return std::max(0.0, lo - (1.0 - hi));
    }
  }
  return 0.0;
}

TruthValue eval_implication(AdjointPair kind, TruthValue z, TruthValue y,
                            double tol) {
  switch (kind) {
    case AdjointPair::kGodel:
      return y <= z + tol ? kTop : z;
    case AdjointPair::kProduct:
      if (y <= z + tol || y <= 0.0) return kTop;
      return std::min(1.0, z / y);
    case AdjointPair::kLukasiewicz:
      return std::min(1.0, 1.0 - y + z);
  }
  return 0.0;
}

TruthValue eval_negation(Negation kind, TruthValue x) {
  switch (kind) {
    case Negation::kNeg1:
      return 1.0 - x;
    case Negation::kNeg2:
      return std::sqrt(std::max(0.0, 1.0 - x * x));
  }
  return 0.0;
}

TruthValue eval_threshold(const Threshold& t, TruthValue x, double tol) {
  switch (t.kind) {
    case Threshold::Kind::kF:
      return x <= t.c + tol ? kBottom : kTop;
    case Threshold::Kind::kG:
      return x > t.c + tol ? kTop : kBottom;
  }
  return kBottom;
}

bool is_involutive(Negation kind) { return kind == Negation::kNeg1; }

std::string_view to_string(AdjointPair kind) {
  switch (kind) {
    case AdjointPair::kGodel:
      return "godel";
    case AdjointPair::kProduct:
      return "product";
    case AdjointPair::kLukasiewicz:
      return "lukasiewicz";
  }
  return "?";
}

std::string_view to_string(Negation kind) {
  return kind == Negation::kNeg1 ? "neg1" : "neg2";
}

char tag_of(AdjointPair kind) {
  switch (kind) {
    case AdjointPair::kGodel:
      return 'g';
    case AdjointPair::kProduct:
      return 'p';
    case AdjointPair::kLukasiewicz:
      return 'l';
  }
  return '?';
}

std::optional<AdjointPair> adjoint_pair_from_tag(std::string_view tag) {
  if (tag == "g" || tag == "godel") return AdjointPair::kGodel;
  if (tag == "p" || tag == "product") return AdjointPair::kProduct;
  if (tag == "l" || tag == "lukasiewicz") return AdjointPair::kLukasiewicz;
  return std::nullopt;
}

std::optional<Negation> negation_from_name(std::string_view name) {
  if (name == "neg1") return Negation::kNeg1;
  if (name == "neg2") return Negation::kNeg2;
  return std::nullopt;
}

std::vector<TruthValue> unit_grid(double step) {
  if (!(step > 0.0) || step > 1.0) {
    throw std::invalid_argument("grid step must lie in (0, 1]");
  }
  const double steps = 1.0 / step;
  const auto n = static_cast<long>(std::llround(steps));
  if (n < 1 || std::abs(steps - static_cast<double>(n)) > 1e-6 * steps) {
    throw std::invalid_argument("grid step must divide 1");
  }
  std::vector<TruthValue> grid;
  grid.reserve(static_cast<std::size_t>(n) + 1);
  for (long i = 0; i <= n; ++i) {
    grid.push_back(static_cast<double>(i) / static_cast<double>(n));
  }
  return grid;
}

namespace {

std::string triple(double x, double y, double z) {
  std::ostringstream os;
  os << "x=" << x << " y=" << y << " z=" << z;
  return os.str();
}

}  // namespace

PropertyReport check_adjoint_pair(AdjointPair kind, double grid_step,
                                  double tol) {
  const auto grid = unit_grid(grid_step);
  PropertyReport report;
  report.subject = std::string(to_string(kind));
  auto conj = [kind](double a, double b) { return eval_conjunctor(kind, a, b); };
  auto imp = [kind, tol](double a, double b) {
    return eval_implication(kind, a, b, tol);
  };
  auto fail = [&report](std::string property, std::string detail) {
    report.violations.push_back({std::move(property), std::move(detail)});
  };

  for (double v : grid) {
    if (conj(kTop, v) != v || conj(v, kTop) != v) {
      fail("top-identity", "v=" + std::to_string(v));
    }
  }

  const std::size_t n = grid.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const double x = grid[i], y = grid[j], z = grid[k];
        ++report.checked;
        const double r = imp(z, y);
        const double c = conj(x, y);
        if (r < -tol || r > 1.0 + tol || c < -tol || c > 1.0 + tol) {
          fail("range", triple(x, y, z));
        }
        if (leq(x, r, tol) != leq(c, z, tol)) {
          fail("adjoint-property", triple(x, y, z));
        }
        // (i, j, k) doubles as an ordered pair (grid[i] <= grid[k]) with a
        // free third coordinate grid[j].
        if (i <= k) {
          const double lo = grid[i], hi = grid[k], w = grid[j];
          if (!leq(conj(lo, w), conj(hi, w), tol) ||
              !leq(conj(w, lo), conj(w, hi), tol)) {
            fail("conjunctor-monotone", triple(lo, w, hi));
          }
          if (!leq(imp(lo, w), imp(hi, w), tol)) {
            fail("implication-monotone-consequent", triple(lo, w, hi));
          }
          if (!leq(imp(w, hi), imp(w, lo), tol)) {
            fail("implication-antitone-antecedent", triple(lo, w, hi));
          }
        }
      }
    }
  }
  return report;
}

PropertyReport check_negation(Negation kind, double grid_step) {
  const auto grid = unit_grid(grid_step);
  PropertyReport report;
  report.subject = std::string(to_string(kind));
  if (eval_negation(kind, kBottom) != kTop ||
      eval_negation(kind, kTop) != kBottom) {
    report.violations.push_back({"boundary", "neg(0)=1 and neg(1)=0"});
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = i; j < grid.size(); ++j) {
      ++report.checked;
      if (eval_negation(kind, grid[j]) > eval_negation(kind, grid[i])) {
        report.violations.push_back(
            {"antitone", std::to_string(grid[i]) + " <= " +
                             std::to_string(grid[j])});
      }
    }
  }
  if (is_involutive(kind)) {
    // 1 - (1 - x) is off by an ulp for some x, so "exact" means 1e-15.
    for (double x : grid) {
      ++report.checked;
      if (std::abs(eval_negation(kind, eval_negation(kind, x)) - x) >
          kInvolutionTolerance) {
        report.violations.push_back({"involutive", std::to_string(x)});
      }
    }
  }
  return report;
}

PropertyReport check_thresholds(double grid_step, double tol) {
  const auto grid = unit_grid(grid_step);
  PropertyReport report;
  report.subject = "thresholds";
  for (double c : grid) {
    for (auto kind : {Threshold::Kind::kF, Threshold::Kind::kG}) {
      const Threshold t{kind, c};
      for (std::size_t i = 0; i < grid.size(); ++i) {
        for (std::size_t j = i; j < grid.size(); ++j) {
          ++report.checked;
          if (eval_threshold(t, grid[i], tol) > eval_threshold(t, grid[j], tol)) {
            report.violations.push_back(
                {"order-preserving",
                 std::string(kind == Threshold::Kind::kF ? "f" : "g") +
                     "(" + std::to_string(c) + ")"});
          }
        }
      }
    }
  }
  return report;
}

}  // namespace emalp

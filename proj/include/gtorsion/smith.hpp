#pragma once

// Exact Smith normal form over the integers.

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gtorsion {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<BigInt>>;

struct SmithForm {
  // Non-zero invariant factors d1 | d2 | ... , all positive.
  std::vector<BigInt> invariants;
  // Unimodular column transform V with A V = U^-1 D for some unimodular U;
  // the last (cols - rank) columns of V span the integer kernel of A.
  IntMatrix column_transform;
  std::size_t rank = 0;
};

namespace detail {

inline void swap_columns(IntMatrix& m, std::size_t i, std::size_t j) {
  for (auto& row : m) {
    std::swap(row[i], row[j]);
  }
}

// column j -= q * column i
inline void axpy_column(IntMatrix& m, std::size_t j, std::size_t i,
                        BigInt const& q) {
  for (auto& row : m) {
    row[j] -= q * row[i];
  }
}

inline BigInt floor_div(BigInt const& a, BigInt const& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) {
    --q;
  }
  return q;
}

}  // namespace detail

inline SmithForm smith_normal_form(IntMatrix a, std::size_t cols) {
  std::size_t const rows = a.size();
  IntMatrix v(cols, std::vector<BigInt>(cols, 0));
  for (std::size_t i = 0; i < cols; ++i) {
    v[i][i] = 1;
  }

  std::size_t t = 0;
  for (; t < rows && t < cols; ++t) {
    for (;;) {
      // Pivot: smallest non-zero absolute value in the trailing block.
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (a[i][j] != 0
              && (pr == rows || abs(a[i][j]) < abs(a[pr][pc]))) {
            pr = i;
            pc = j;
          }
        }
      }
      if (pr == rows) {
        goto done;
      }
      std::swap(a[t], a[pr]);
      detail::swap_columns(a, t, pc);
      detail::swap_columns(v, t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        BigInt q = detail::floor_div(a[i][t], a[t][t]);
        if (q != 0) {
          for (std::size_t j = t; j < cols; ++j) {
            a[i][j] -= q * a[t][j];
          }
        }
        clean = clean && a[i][t] == 0;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        BigInt q = detail::floor_div(a[t][j], a[t][t]);
        if (q != 0) {
          detail::axpy_column(a, j, t, q);
          detail::axpy_column(v, j, t, q);
        }
        clean = clean && a[t][j] == 0;
      }
      if (!clean) {
        continue;
      }
      // Divisibility: fold an offending row into row t and retry.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) {
              a[t][k] += a[i][k];
            }
            divides = false;
            break;
          }
        }
      }
      if (divides) {
        break;
      }
    }
    if (a[t][t] < 0) {
      a[t][t] = -a[t][t];
    }
  }
done:
  SmithForm out;
  out.rank = t;
  for (std::size_t i = 0; i < t; ++i) {
    out.invariants.push_back(a[i][i]);
  }
  out.column_transform = std::move(v);
  return out;
}

}  // namespace gtorsion

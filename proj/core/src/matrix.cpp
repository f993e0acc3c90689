#include "rayleigh/matrix.hpp"

#include <algorithm>

#include "rayleigh/error.hpp"

namespace rayleigh {

RationalSymMatrix::RationalSymMatrix(int dimension) : n_(dimension) {
  if (dimension < 0) {
    throw Error("matrix dimension must be nonnegative");
  }
  entries_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_),
                  Rational(0));
}

const Rational& RationalSymMatrix::at(int i, int j) const {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) {
    throw Error("matrix index out of range");
  }
  return entries_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
                  static_cast<std::size_t>(j)];
}

void RationalSymMatrix::set(int i, int j, Rational value) {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) {
    throw Error("matrix index out of range");
  }
  entries_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(j)] = value;
  entries_[static_cast<std::size_t>(j) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(i)] = std::move(value);
}

Rational RationalSymMatrix::row_sum(int i) const {
  Rational total(0);
  for (int j = 0; j < n_; ++j) {
    total += at(i, j);
  }
  return total;
}

RationalSymMatrix LDLFactorization::reconstruct() const {
  const int n = static_cast<int>(perm.size());
  RationalSymMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      Rational sum(0);
      for (int k = 0; k <= j; ++k) {
        sum += unit_lower[static_cast<std::size_t>(i)]
                         [static_cast<std::size_t>(k)] *
               diag[static_cast<std::size_t>(k)] *
               unit_lower[static_cast<std::size_t>(j)]
                         [static_cast<std::size_t>(k)];
      }
      out.set(i, j, sum);
    }
  }
  return out;
}

std::pair<bool, LDLFactorization> ldl_psd_check(const RationalSymMatrix& m) {
  const int n = m.dim();
  // working copy of the reduced matrix
  std::vector<std::vector<Rational>> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    w[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m.at(i, j);
    }
  }

  LDLFactorization fact;
  // columns[k][i] = multiplier of original row i in pivot column k
  std::vector<std::vector<Rational>> columns;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::vector<int> active;
  for (int i = 0; i < n; ++i) active.push_back(i);

  bool psd = true;
  while (!active.empty()) {
    // greatest absolute diagonal entry, smallest index on ties
    int pivot = active.front();
    Rational best = abs(w[static_cast<std::size_t>(pivot)]
                         [static_cast<std::size_t>(pivot)]);
    for (int i : active) {
      Rational candidate =
          abs(w[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)]);
      if (candidate > best) {
        best = std::move(candidate);
        pivot = i;
      }
    }
    const Rational d = w[static_cast<std::size_t>(pivot)]
                        [static_cast<std::size_t>(pivot)];

    if (d == 0) {
      // all remaining diagonal entries vanish; PSD iff the whole reduced
      // block vanishes
      bool all_zero = true;
      for (int i : active) {
        for (int j : active) {
          if (w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
              0) {
            all_zero = false;
            break;
          }
        }
        if (!all_zero) break;
      }
      if (!all_zero) {
        psd = false;
        break;
      }
      for (int i : active) {
        fact.perm.push_back(i);
        fact.diag.emplace_back(0);
        columns.emplace_back(static_cast<std::size_t>(n), Rational(0));
      }
      active.clear();
      break;
    }

    fact.perm.push_back(pivot);
    fact.diag.push_back(d);
    active.erase(std::find(active.begin(), active.end(), pivot));

    if (d < 0) {
      psd = false;
      break;
    }

    columns.emplace_back(static_cast<std::size_t>(n), Rational(0));
    auto& col = columns.back();
    for (int i : active) {
      col[static_cast<std::size_t>(i)] =
          w[static_cast<std::size_t>(i)][static_cast<std::size_t>(pivot)] / d;
    }
    for (int i : active) {
      const Rational& li = col[static_cast<std::size_t>(i)];
      if (li == 0) continue;
      for (int j : active) {
        w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
            li * w[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(j)];
      }
    }
    // also reduce the pivot row/column for the symmetric remainder
    for (int j : active) {
      w[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(j)] =
          Rational(0);
      w[static_cast<std::size_t>(j)][static_cast<std::size_t>(pivot)] =
          Rational(0);
    }
  }

  // assemble L in pivot order
  const std::size_t steps = fact.perm.size();
  std::vector<int> position(static_cast<std::size_t>(n), -1);
  for (std::size_t k = 0; k < steps; ++k) {
    position[static_cast<std::size_t>(fact.perm[k])] = static_cast<int>(k);
  }
  fact.unit_lower.assign(steps, std::vector<Rational>(steps, Rational(0)));
  for (std::size_t r = 0; r < steps; ++r) {
    fact.unit_lower[r][r] = Rational(1);
  }
  for (std::size_t k = 0; k < columns.size(); ++k) {
    for (int i = 0; i < n; ++i) {
      const Rational& value = columns[k][static_cast<std::size_t>(i)];
      if (value == 0) continue;
      const int row = position[static_cast<std::size_t>(i)];
      if (row > static_cast<int>(k)) {
        fact.unit_lower[static_cast<std::size_t>(row)][k] = value;
      }
    }
  }
  return {psd, std::move(fact)};
}

}  // namespace rayleigh

#include "toricvol/normal_form.hpp"

#include <algorithm>
#include <set>

#include "toricvol/error.hpp"

namespace toricvol {

namespace {

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::InvalidArgument, "normal form overflow");
  return r;
}

long long checked_sub(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorCode::InvalidArgument, "normal form overflow");
  return r;
}

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

struct State {
  IntMatrix rows;           // transformed configuration, d x k
  std::vector<bool> used;
  std::size_t rank = 0;

  friend bool operator<(const State& a, const State& b) {
    if (a.used != b.used) return a.used < b.used;
    return a.rows < b.rows;
  }
};

void row_axpy(IntMatrix& rows, std::size_t target, std::size_t source, long long factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < rows[target].size(); ++j)
    rows[target][j] = checked_sub(rows[target][j], checked_mul(factor, rows[source][j]));
}

// Appends column c to the Hermite-reduced prefix and returns the new state.
State extend(const State& s, std::size_t c) {
  State t = s;
  t.used[c] = true;
  const std::size_t d = t.rows.size();
  const std::size_t r = t.rank;
  if (r < d) {
    for (std::size_t i = r + 1; i < d; ++i) {
      while (t.rows[i][c] != 0) {
        long long q = t.rows[r][c] / t.rows[i][c];
        row_axpy(t.rows, r, i, q);
        std::swap(t.rows[r], t.rows[i]);
      }
    }
    if (t.rows[r][c] != 0) {
      if (t.rows[r][c] < 0)
        for (auto& x : t.rows[r]) x = -x;
      const long long pivot = t.rows[r][c];
      for (std::size_t i = 0; i < r; ++i) row_axpy(t.rows, i, r, floor_div(t.rows[i][c], pivot));
      t.rank = r + 1;
    }
  }
  return t;
}

IntVector column(const State& s, std::size_t c) {
  IntVector col(s.rows.size());
  for (std::size_t i = 0; i < s.rows.size(); ++i) col[i] = s.rows[i][c];
  return col;
}

}  // namespace

std::string linear_normal_form(const std::vector<IntVector>& vectors) {
  if (vectors.empty()) return "0|0|";
  const std::size_t d = vectors[0].size();
  const std::size_t k = vectors.size();

  State start;
  start.rows.assign(d, IntVector(k, 0));
  for (std::size_t j = 0; j < k; ++j) {
    if (vectors[j].size() != d) throw Error(ErrorCode::InvalidArgument, "vectors of mixed dimension");
    for (std::size_t i = 0; i < d; ++i) start.rows[i][j] = vectors[j][i];
  }
  start.used.assign(k, false);

  std::vector<State> frontier{start};
  std::vector<IntVector> canonical;
  for (std::size_t step = 0; step < k; ++step) {
    std::set<State> next;
    IntVector best;
    bool have_best = false;
    for (const auto& s : frontier) {
      for (std::size_t c = 0; c < k; ++c) {
        if (s.used[c]) continue;
        State t = extend(s, c);
        IntVector col = column(t, c);
        if (!have_best || col < best) {
          best = col;
          have_best = true;
          next.clear();
        }
        if (col == best) next.insert(std::move(t));
      }
    }
    canonical.push_back(best);
    frontier.assign(next.begin(), next.end());
  }

  std::string key = std::to_string(d) + "|" + std::to_string(k) + "|";
  for (std::size_t j = 0; j < canonical.size(); ++j) {
    if (j) key += ";";
    for (std::size_t i = 0; i < d; ++i) {
      if (i) key += ",";
      key += std::to_string(canonical[j][i]);
    }
  }
  return key;
}

std::string normal_form(const Polytope& p) {
  if (!p.is_lattice()) throw Error(ErrorCode::NotLattice, "normal form requires a lattice polytope");
  std::vector<IntVector> lifted;
  lifted.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) {
    IntVector w = to_int(v);
    w.push_back(1);
    lifted.push_back(std::move(w));
  }
  return linear_normal_form(lifted);
}

}  // namespace toricvol

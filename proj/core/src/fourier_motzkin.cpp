#include "k3chambers/fourier_motzkin.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "k3chambers/error.hpp"

namespace k3chambers {

namespace {

// Input rows a derived row was combined from.
struct History {
  std::vector<std::uint64_t> words;

  static History single(std::size_t index, std::size_t total) {
    History h;
    h.words.assign((total + 63) / 64, 0);
    h.words[index / 64] |= std::uint64_t{1} << (index % 64);
    return h;
  }
  History operator|(const History& other) const {
    History h = *this;
    for (std::size_t i = 0; i < words.size(); ++i) h.words[i] |= other.words[i];
    return h;
  }
  std::size_t size() const {
    std::size_t n = 0;
    for (auto w : words) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
};

// coeffs . x + constant (< 0 if strict, <= 0 otherwise)
struct Row {
  RatVector coeffs;
  Rational constant;
  bool strict = false;
  History history;
};

struct Stage {
  std::size_t variable;
  std::vector<Row> rows;
};

// Scale so the first nonzero coefficient has absolute value one.
void normalize(Row& row) {
  auto it = std::find_if(row.coeffs.begin(), row.coeffs.end(),
                         [](const Rational& c) { return c != 0; });
  if (it == row.coeffs.end()) return;
  const Rational scale = abs(*it);
  if (scale == 1) return;
  for (auto& c : row.coeffs) c /= scale;
  row.constant /= scale;
}

bool constant_row_holds(const Row& row) {
  return row.strict ? sign(row.constant) < 0 : sign(row.constant) <= 0;
}

bool is_constant(const Row& row) {
  return std::all_of(row.coeffs.begin(), row.coeffs.end(),
                     [](const Rational& c) { return c == 0; });
}

// Drops satisfied constant rows and exact duplicates (keeping the
// shortest history). Returns false if a constant row is violated.
bool tidy(std::vector<Row>& rows) {
  std::map<std::pair<RatVector, std::pair<Rational, bool>>, Row> unique;
  for (auto& row : rows) {
    if (is_constant(row)) {
      if (!constant_row_holds(row)) return false;
      continue;
    }
    normalize(row);
    auto key = std::make_pair(row.coeffs, std::make_pair(row.constant, row.strict));
    auto [it, inserted] = unique.try_emplace(std::move(key), row);
    if (!inserted && row.history.size() < it->second.history.size()) it->second = std::move(row);
  }
  rows.clear();
  rows.reserve(unique.size());
  for (auto& [key, row] : unique) rows.push_back(std::move(row));
  return true;
}

std::optional<std::size_t> pick_variable(const std::vector<Row>& rows, std::size_t n) {
  std::vector<std::size_t> count(n, 0);
  for (const auto& row : rows) {
    for (std::size_t v = 0; v < n; ++v) {
      if (row.coeffs[v] != 0) ++count[v];
    }
  }
  std::optional<std::size_t> best;
  for (std::size_t v = 0; v < n; ++v) {
    if (count[v] == 0) continue;
    if (!best || count[v] > count[*best]) best = v;
  }
  return best;
}

// Drops combinations of more than eliminated + 1 input rows; these are
// implied by the remaining rows (Chernikov's rule).
std::vector<Row> eliminate(const std::vector<Row>& rows, std::size_t v, std::size_t eliminated) {
  std::vector<const Row*> upper, lower;
  std::vector<Row> next;
  for (const auto& row : rows) {
    const int s = sign(row.coeffs[v]);
    if (s > 0) {
      upper.push_back(&row);
    } else if (s < 0) {
      lower.push_back(&row);
    } else {
      next.push_back(row);
    }
  }
  for (const Row* up : upper) {
    for (const Row* lo : lower) {
      History history = up->history | lo->history;
      if (history.size() > eliminated + 1) continue;
      const Rational wu = -lo->coeffs[v];
      const Rational wl = up->coeffs[v];
      Row combo;
      combo.coeffs.resize(up->coeffs.size());
      for (std::size_t j = 0; j < combo.coeffs.size(); ++j) {
        combo.coeffs[j] = wu * up->coeffs[j] + wl * lo->coeffs[j];
      }
      combo.coeffs[v] = 0;
      combo.constant = wu * up->constant + wl * lo->constant;
      combo.strict = up->strict || lo->strict;
      combo.history = std::move(history);
      next.push_back(std::move(combo));
    }
  }
  return next;
}

Rational pick_in_interval(const std::optional<Rational>& lo, bool lo_strict,
                          const std::optional<Rational>& hi, bool hi_strict) {
  if (lo && hi) {
    if (*lo == *hi && !lo_strict && !hi_strict) return *lo;
    return (*lo + *hi) / 2;
  }
  if (lo) return *lo + 1;
  if (hi) return *hi - 1;
  return Rational(0);
}

}  // namespace

bool satisfies(const LinearSystemFeasibility& problem, const RatVector& point) {
  if (point.size() != problem.variable_count) return false;
  for (const auto& row : problem.strict_rows) {
    const Rational value = dot(row.coeffs, point) + row.constant;
    if (row.sense == Sense::Negative ? sign(value) >= 0 : sign(value) <= 0) return false;
  }
  return std::all_of(problem.nonneg_vars.begin(), problem.nonneg_vars.end(),
                     [&](std::size_t v) { return sign(point[v]) >= 0; });
}

FeasibilityResult fm_feasible(const LinearSystemFeasibility& problem) {
  const std::size_t n = problem.variable_count;
  std::vector<Row> rows;
  const std::size_t total = problem.strict_rows.size() + problem.nonneg_vars.size();
  rows.reserve(total);
  for (const auto& src : problem.strict_rows) {
    if (src.coeffs.size() != n) {
      throw Error(ErrorCode::DimensionMismatch,
                  "constraint row has " + std::to_string(src.coeffs.size()) +
                      " coefficients for " + std::to_string(n) + " variables");
    }
    Row row{src.coeffs, src.constant, true, History::single(rows.size(), total)};
    if (src.sense == Sense::Positive) {
      for (auto& c : row.coeffs) c = -c;
      row.constant = -row.constant;
    }
    rows.push_back(std::move(row));
  }
  for (std::size_t v : problem.nonneg_vars) {
    if (v >= n) throw Error(ErrorCode::IndexOutOfRange, "nonnegative variable out of range");
    Row row{RatVector(n), Rational(0), false, History::single(rows.size(), total)};
    row.coeffs[v] = -1;
    rows.push_back(std::move(row));
  }

  if (!tidy(rows)) return {};
  std::vector<Stage> stages;
  while (auto v = pick_variable(rows, n)) {
    stages.push_back({*v, rows});
    rows = eliminate(rows, *v, stages.size());
    if (!tidy(rows)) return {};
  }

  RatVector x(n);
  for (auto stage = stages.rbegin(); stage != stages.rend(); ++stage) {
    const std::size_t v = stage->variable;
    std::optional<Rational> lo, hi;
    bool lo_strict = false, hi_strict = false;
    for (const auto& row : stage->rows) {
      const Rational& c = row.coeffs[v];
      if (c == 0) continue;
      Rational rest = row.constant;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != v && row.coeffs[j] != 0) rest += row.coeffs[j] * x[j];
      }
      const Rational bound = -rest / c;
      if (sign(c) > 0) {
        if (!hi || bound < *hi || (bound == *hi && row.strict)) {
          hi_strict = row.strict || (hi && bound == *hi && hi_strict);
          hi = bound;
        }
      } else {
        if (!lo || bound > *lo || (bound == *lo && row.strict)) {
          lo_strict = row.strict || (lo && bound == *lo && lo_strict);
          lo = bound;
        }
      }
    }
    x[v] = pick_in_interval(lo, lo_strict, hi, hi_strict);
  }
  if (!satisfies(problem, x)) {
    throw Error(ErrorCode::InternalInvariant, "Fourier-Motzkin sample violates the system");
  }
  return {true, std::move(x)};
}

}  // namespace k3chambers

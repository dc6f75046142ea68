#include "grt/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace grt {

void axpy(SparseVector& a, const Rational& s, const SparseVector& b) {
  if (s == 0 || b.empty()) return;
  SparseVector out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      out.push_back(std::move(*ia++));
    } else if (ia == a.end() || ib->first < ia->first) {
      out.emplace_back(ib->first, s * ib->second);
      ++ib;
    } else {
      Rational v = ia->second + s * ib->second;
      if (v != 0) out.emplace_back(ia->first, std::move(v));
      ++ia;
      ++ib;
    }
  }
  a = std::move(out);
}

SparseVector RowEchelon::reduce(const SparseVector& v) const {
  SparseVector out = v;
  for (const auto& [col, val] : v) {
    auto it = rows_.find(col);
    if (it != rows_.end()) axpy(out, -val, it->second);
  }
  return out;
}

bool RowEchelon::insert(const SparseVector& v) {
  for (const auto& [col, val] : v)
    if (col < 0 || col >= columns_) throw std::out_of_range("RowEchelon: column out of range");
  SparseVector r = reduce(v);
  if (r.empty()) return false;
  const int pivot = r.front().first;
  const Rational lead = r.front().second;
  if (lead != 1)
    for (auto& entry : r) entry.second /= lead;
  for (auto& [p, row] : rows_) {
    auto it = std::lower_bound(row.begin(), row.end(), pivot,
                               [](const auto& e, int c) { return e.first < c; });
    if (it != row.end() && it->first == pivot) {
      Rational factor = -it->second;
      axpy(row, factor, r);
    }
  }
  rows_.emplace(pivot, std::move(r));
  return true;
}

std::vector<int> RowEchelon::free_columns() const {
  std::vector<int> out;
  for (int c = 0; c < columns_; ++c)
    if (!rows_.count(c)) out.push_back(c);
  return out;
}

std::vector<SparseVector> RowEchelon::nullspace() const {
  std::vector<SparseVector> out;
  for (int f : free_columns()) {
    SparseVector x;
    for (const auto& [p, row] : rows_) {
      auto it = std::lower_bound(row.begin(), row.end(), f,
                                 [](const auto& e, int c) { return e.first < c; });
      if (it != row.end() && it->first == f) x.emplace_back(p, -it->second);
    }
    x.emplace_back(f, 1);
    std::sort(x.begin(), x.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace grt

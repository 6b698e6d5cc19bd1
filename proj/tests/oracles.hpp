#pragma once

// Brute-force reference computations used only by the tests. They avoid the
// library's search code and check structure directly from the definitions.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "finbound/cats.hpp"

namespace oracle {

using finbound::cats::Obj;
using Maps = std::vector<std::vector<int>>;

inline bool preserves(const Obj& x, const Obj& y, const Maps& m) {
  for (std::size_t a = 0; a < x.ops.size(); ++a)
    for (int i = 0; i < x.sizes[x.ops[a].from]; ++i)
      if (m[x.ops[a].to][x.ops[a].table[i]] != y.ops[a].table[m[x.ops[a].from][i]]) return false;
  for (auto [u, v] : x.edges)
    if (std::find(y.edges.begin(), y.edges.end(), std::make_pair(m[0][u], m[0][v])) == y.edges.end()) return false;
  return true;
}

/// Every carrier map X -> Y (odometer over all sorts), filtered.
inline std::vector<Maps> homs(const Obj& x, const Obj& y) {
  std::vector<Maps> out;
  std::vector<std::pair<int, int>> slots;
  for (int s = 0; s < x.sort_count(); ++s)
    for (int i = 0; i < x.sizes[s]; ++i) slots.emplace_back(s, i);
  for (auto [s, i] : slots)
    if (y.sizes[s] == 0) return out;
  Maps m(x.sort_count());
  for (int s = 0; s < x.sort_count(); ++s) m[s].assign(x.sizes[s], 0);
  while (true) {
    if (preserves(x, y, m)) out.push_back(m);
    std::size_t k = 0;
    for (; k < slots.size(); ++k) {
      auto [s, i] = slots[k];
      if (++m[s][i] < y.sizes[s]) break;
      m[s][i] = 0;
    }
    if (k == slots.size()) break;
  }
  return out;
}

/// Isomorphism as a bijective structure-preserving map.
inline bool isomorphic(const Obj& x, const Obj& y) {
  if (x.sizes != y.sizes || x.edges.size() != y.edges.size()) return false;
  for (const auto& m : homs(x, y)) {
    bool bij = true;
    for (std::size_t s = 0; s < m.size() && bij; ++s) {
      std::set<int> img(m[s].begin(), m[s].end());
      bij = img.size() == m[s].size();
    }
    if (bij) return true;
  }
  return false;
}

/// Every congruence of x (one partition per sort, compatible with every op),
/// returned as the quotient objects, duplicates by isomorphism removed.
inline std::vector<Obj> quotients(const Obj& x) {
  const int n = x.total_size();
  std::vector<int> sort_of;
  for (int s = 0; s < x.sort_count(); ++s) sort_of.insert(sort_of.end(), x.sizes[s], s);
  std::vector<Obj> out;
  std::vector<int> block(n, -1);
  std::vector<int> blocks_in_sort(x.sort_count(), 0);
  auto emit = [&] {
    for (const auto& op : x.ops)
      for (int i = 0; i < x.sizes[op.from]; ++i)
        for (int j = 0; j < x.sizes[op.from]; ++j)
          if (block[x.offset(op.from) + i] == block[x.offset(op.from) + j] &&
              block[x.offset(op.to) + op.table[i]] != block[x.offset(op.to) + op.table[j]])
            return;
    Obj q = x;
    for (int s = 0; s < x.sort_count(); ++s) q.sizes[s] = blocks_in_sort[s];
    for (auto& op : q.ops) {
      std::vector<int> t(q.sizes[op.from]);
      for (int i = 0; i < x.sizes[op.from]; ++i)
        t[block[x.offset(op.from) + i]] = block[x.offset(op.to) + op.table[i]];
      op.table = t;
    }
    for (const auto& o : out)
      if (oracle::isomorphic(o, q)) return;
    out.push_back(q);
  };
  // Restricted growth strings, sort by sort.
  auto rec = [&](auto&& self, int g) -> void {
    if (g == n) {
      emit();
      return;
    }
    const int s = sort_of[g];
    const int limit = blocks_in_sort[s];
    for (int b = 0; b <= limit; ++b) {
      block[g] = b;
      if (b == limit) ++blocks_in_sort[s];
      self(self, g + 1);
      if (b == limit) --blocks_in_sort[s];
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace oracle

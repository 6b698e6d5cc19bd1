#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace finbound {

/// Raised when an operation is called outside its documented domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw PreconditionError(what);
}

/// Union-find with path halving and union by size.
class DisjointSet {
 public:
  explicit DisjointSet(std::size_t n = 0) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  std::size_t size() const { return parent_.size(); }

  int find(int i) {
    while (parent_[i] != i) {
      parent_[i] = parent_[parent_[i]];
      i = parent_[i];
    }
    return i;
  }

  /// Returns true if a union was performed.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

  bool same(int a, int b) { return find(a) == find(b); }

  /// Dense class labels, numbered by first occurrence.
  std::vector<int> labels() {
    std::vector<int> label(parent_.size(), -1), root_label(parent_.size(), -1);
    int next = 0;
    for (std::size_t i = 0; i < parent_.size(); ++i) {
      int r = find(static_cast<int>(i));
      if (root_label[r] < 0) root_label[r] = next++;
      label[i] = root_label[r];
    }
    return label;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
};

inline bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline std::vector<int> primes_up_to(int bound) {
  std::vector<int> out;
  for (int p = 2; p <= bound; ++p)
    if (is_prime(p)) out.push_back(p);
  return out;
}

inline std::vector<int> first_primes(std::size_t count) {
  std::vector<int> out;
  for (int p = 2; out.size() < count; ++p)
    if (is_prime(p)) out.push_back(p);
  return out;
}

/// A function k -> k' between finite cardinals, as its value table.
using FinFn = std::vector<int>;

/// All functions dom -> cod in lexicographic order of value tables.
inline std::vector<FinFn> all_functions(int dom, int cod) {
  std::vector<FinFn> out;
  if (dom == 0) {
    out.emplace_back();
    return out;
  }
  if (cod == 0) return out;
  FinFn f(dom, 0);
  while (true) {
    out.push_back(f);
    int pos = dom - 1;
    while (pos >= 0 && f[pos] == cod - 1) f[pos--] = 0;
    if (pos < 0) break;
    ++f[pos];
  }
  return out;
}

/// Index of a function dom -> cod in the order produced by all_functions.
inline std::size_t function_index(const FinFn& f, int cod) {
  std::size_t idx = 0;
  for (int v : f) idx = idx * static_cast<std::size_t>(cod) + static_cast<std::size_t>(v);
  return idx;
}

inline FinFn compose_fn(const FinFn& g, const FinFn& f) {
  FinFn out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = g[f[i]];
  return out;
}

inline std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp--) r *= base;
  return r;
}

}  // namespace finbound

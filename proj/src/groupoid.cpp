#include "finbound/groupoid.hpp"

#include <algorithm>
#include <numeric>

#include "finbound/util.hpp"

namespace finbound {

FiniteGroupoid::FiniteGroupoid(std::string name, int objects, std::vector<Arrow> arrows,
                               std::vector<std::vector<int>> compose)
    : name_(std::move(name)), objects_(objects), arrows_(std::move(arrows)), compose_(std::move(compose)) {
  const int n = arrow_count();
  require(static_cast<int>(compose_.size()) == n, "groupoid: composition table size");
  for (int g = 0; g < n; ++g) {
    require(static_cast<int>(compose_[g].size()) == n, "groupoid: composition table row size");
    for (int h = 0; h < n; ++h) {
      int gh = compose_[g][h];
      if (dst(h) == src(g)) {
        require(gh >= 0 && gh < n, "groupoid: composite missing");
        require(src(gh) == src(h) && dst(gh) == dst(g), "groupoid: composite has wrong endpoints");
      } else {
        require(gh == -1, "groupoid: composite of non-composable arrows");
      }
    }
  }
  for (int f = 0; f < n; ++f)
    for (int g = 0; g < n; ++g)
      for (int h = 0; h < n; ++h)
        if (dst(h) == src(g) && dst(g) == src(f))
          require(compose_[f][compose_[g][h]] == compose_[compose_[f][g]][h], "groupoid: not associative");

  identity_.assign(objects_, -1);
  for (int x = 0; x < objects_; ++x) {
    for (int e = 0; e < n && identity_[x] < 0; ++e) {
      if (src(e) != x || dst(e) != x) continue;
      bool ok = true;
      for (int g = 0; g < n && ok; ++g) {
        if (src(g) == x && compose_[g][e] != g) ok = false;
        if (dst(g) == x && compose_[e][g] != g) ok = false;
      }
      if (ok) identity_[x] = e;
    }
    require(identity_[x] >= 0, "groupoid: object without identity");
  }
  inverse_.assign(n, -1);
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) {
      if (src(h) == dst(g) && dst(h) == src(g) && compose_[h][g] == identity_[src(g)] &&
          compose_[g][h] == identity_[dst(g)]) {
        inverse_[g] = h;
        break;
      }
    }
    require(inverse_[g] >= 0, "groupoid: arrow without inverse");
  }
}

std::shared_ptr<const FiniteGroupoid> FiniteGroupoid::from_group(std::string name,
                                                                 const std::vector<std::vector<int>>& mult) {
  const int n = static_cast<int>(mult.size());
  std::vector<Arrow> arrows(n, Arrow{0, 0});
  return std::make_shared<const FiniteGroupoid>(std::move(name), 1, std::move(arrows), mult);
}

std::shared_ptr<const FiniteGroupoid> FiniteGroupoid::trivial() { return from_group("1", {{0}}); }

std::shared_ptr<const FiniteGroupoid> FiniteGroupoid::cyclic(int n) {
  require(n >= 1, "cyclic group order must be positive");
  std::vector<std::vector<int>> mult(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mult[a][b] = (a + b) % n;
  return from_group("Z" + std::to_string(n), mult);
}

std::shared_ptr<const FiniteGroupoid> FiniteGroupoid::symmetric3() {
  std::vector<std::vector<int>> perms;
  std::vector<int> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const int n = static_cast<int>(perms.size());
  std::vector<std::vector<int>> mult(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      std::vector<int> ab(3);
      for (int i = 0; i < 3; ++i) ab[i] = perms[a][perms[b][i]];
      mult[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), ab) - perms.begin());
    }
  }
  return from_group("S3", mult);
}

std::shared_ptr<const FiniteGroupoid> FiniteGroupoid::codiscrete(int k) {
  require(k >= 1, "codiscrete groupoid needs an object");
  std::vector<Arrow> arrows;
  for (int s = 0; s < k; ++s)
    for (int d = 0; d < k; ++d) arrows.push_back({s, d});
  const int n = k * k;
  std::vector<std::vector<int>> comp(n, std::vector<int>(n, -1));
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      if (arrows[h].dst == arrows[g].src) comp[g][h] = arrows[h].src * k + arrows[g].dst;
  return std::make_shared<const FiniteGroupoid>("Codisc" + std::to_string(k), k, std::move(arrows), comp);
}

std::vector<int> FiniteGroupoid::arrows(int from, int to) const {
  std::vector<int> out;
  for (int g = 0; g < arrow_count(); ++g)
    if (src(g) == from && dst(g) == to) out.push_back(g);
  return out;
}

}  // namespace finbound

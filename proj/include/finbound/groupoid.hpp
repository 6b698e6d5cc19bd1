#pragma once

#include <memory>
#include <string>
#include <vector>

namespace finbound {

/// A finite groupoid given by its morphisms and a composition table.
///
/// Morphism g has source src(g) and target dst(g). compose(g, h) is g after h
/// and is defined when dst(h) == src(g). The constructor checks the groupoid
/// axioms (associativity, identities, inverses).
class FiniteGroupoid {
 public:
  struct Arrow {
    int src;
    int dst;
    bool operator==(const Arrow&) const = default;
  };

  FiniteGroupoid(std::string name, int objects, std::vector<Arrow> arrows,
                 std::vector<std::vector<int>> compose);

  /// One-object groupoid from a group multiplication table mult[a][b] = a*b.
  static std::shared_ptr<const FiniteGroupoid> from_group(std::string name,
                                                          const std::vector<std::vector<int>>& mult);
  static std::shared_ptr<const FiniteGroupoid> trivial();
  static std::shared_ptr<const FiniteGroupoid> cyclic(int n);
  static std::shared_ptr<const FiniteGroupoid> symmetric3();
  /// k objects, exactly one arrow between any ordered pair.
  static std::shared_ptr<const FiniteGroupoid> codiscrete(int k);

  const std::string& name() const { return name_; }
  int object_count() const { return objects_; }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  int src(int g) const { return arrows_[g].src; }
  int dst(int g) const { return arrows_[g].dst; }
  int compose(int g, int h) const { return compose_[g][h]; }
  int identity(int x) const { return identity_[x]; }
  int inverse(int g) const { return inverse_[g]; }
  /// Arrows with the given source and target, in index order.
  std::vector<int> arrows(int from, int to) const;

  bool operator==(const FiniteGroupoid& other) const {
    return objects_ == other.objects_ && arrows_ == other.arrows_ && compose_ == other.compose_;
  }

 private:
  std::string name_;
  int objects_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<int>> compose_;
  std::vector<int> identity_;
  std::vector<int> inverse_;
};

}  // namespace finbound

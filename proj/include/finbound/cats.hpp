#pragma once

// Computable categories with finite objects: FinSet, graphs, unary algebras
// and presheaves on a finite groupoid. Every object is a finite sorted
// carrier with unary operations (possibly between sorts) and, for graphs, an
// edge relation. Morphisms are carrier maps per sort.

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "finbound/groupoid.hpp"
#include "finbound/util.hpp"

namespace finbound::cats {

enum class CatKind { FinSet, Graph, Unary, Presheaf };

/// Handle naming one of the supported categories.
class Category {
 public:
  static Category finset() { return Category(CatKind::FinSet, nullptr); }
  static Category graph() { return Category(CatKind::Graph, nullptr); }
  static Category unary() { return Category(CatKind::Unary, nullptr); }
  static Category presheaf(std::shared_ptr<const FiniteGroupoid> g);

  CatKind kind() const { return kind_; }
  const std::shared_ptr<const FiniteGroupoid>& groupoid() const { return groupoid_; }
  int sort_count() const;
  /// Number of unary operation symbols every object carries.
  int op_count() const;
  std::string name() const;

  bool operator==(const Category& other) const;

 private:
  Category(CatKind kind, std::shared_ptr<const FiniteGroupoid> g) : kind_(kind), groupoid_(std::move(g)) {}
  CatKind kind_;
  std::shared_ptr<const FiniteGroupoid> groupoid_;
};

/// Unary operation from sort `from` to sort `to`.
struct UnaryOp {
  int from = 0;
  int to = 0;
  std::vector<int> table;
  bool operator==(const UnaryOp&) const = default;
};

using Edge = std::pair<int, int>;

/// A finite object. For presheaves, op g (an arrow x -> y of the groupoid)
/// acts from sort y to sort x.
struct Obj {
  Category cat = Category::finset();
  std::vector<int> sizes;
  std::vector<UnaryOp> ops;
  std::vector<Edge> edges;  // sorted, unique; graphs only

  int sort_count() const { return static_cast<int>(sizes.size()); }
  int size(int sort = 0) const { return sizes[sort]; }
  int total_size() const;
  bool has_edge(int u, int v) const;
  /// Offset of sort s in the flattened element numbering.
  int offset(int sort) const;

  bool operator==(const Obj& other) const {
    return cat == other.cat && sizes == other.sizes && ops == other.ops && edges == other.edges;
  }
};

/// Throws PreconditionError unless the object satisfies its category's laws.
void validate(const Obj& x);

Obj finset(int n);
Obj graph(int vertices, std::vector<Edge> edges);
/// Unary algebra with operation table `op`.
Obj unary(std::vector<int> op);
/// C_p: p elements whose operation forms a cycle.
Obj cycle(int p);
/// Directed path with k vertices 0 -> 1 -> ... -> k-1.
Obj path(int k);
/// Terminal graph: one vertex with a loop.
Obj terminal_graph();
/// Presheaf on g; tables[a] is the action of arrow a, from sort dst(a) to src(a).
Obj presheaf(std::shared_ptr<const FiniteGroupoid> g, std::vector<int> sizes, std::vector<std::vector<int>> tables);
/// The representable presheaf G(-, x): sort y holds the arrows y -> x.
Obj representable(std::shared_ptr<const FiniteGroupoid> g, int x);
Obj empty_object(const Category& c);
Obj terminal_object(const Category& c);

using Maps = std::vector<std::vector<int>>;

struct Mor {
  Obj dom;
  Obj cod;
  Maps maps;

  int operator()(int sort, int i) const { return maps[sort][i]; }
  bool operator==(const Mor& other) const = default;
};

bool is_morphism(const Obj& dom, const Obj& cod, const Maps& maps);
/// Checked construction.
Mor make_mor(Obj dom, Obj cod, Maps maps);
Mor identity(const Obj& x);
/// g after f.
Mor compose(const Mor& g, const Mor& f);
/// The unique morphism into a terminal object.
Mor to_terminal(const Obj& x, const Obj& terminal);
/// The unique morphism out of the empty object.
Mor from_empty(const Obj& x);

/// All structure-preserving maps X -> Y, in lexicographic order of the
/// flattened value tables. OpenMP-parallel over the first branching element.
std::vector<Mor> hom_set(const Obj& x, const Obj& y);
bool hom_exists(const Obj& x, const Obj& y);
std::size_t hom_count(const Obj& x, const Obj& y);
/// First hom agreeing with `partial` wherever it is >= 0.
std::optional<Mor> find_extension(const Obj& x, const Obj& y, const Maps& partial);

namespace serial {
/// Reference implementation of hom_set: one backtracking pass, no threads.
std::vector<Mor> hom_set(const Obj& x, const Obj& y);
}  // namespace serial

/// (strong epi, mono)-factorization through the image.
struct Factorization {
  Mor epi;
  Mor mono;
};
Factorization factorize(const Mor& f);

/// Declared characterizations: mono = injective on every sort; epi =
/// surjective on every sort; strong epi additionally surjective on edges.
bool is_mono(const Mor& f);
bool is_epi(const Mor& f);
bool is_strong_epi(const Mor& f);
bool is_iso(const Mor& f);

/// Cancellation-probe versions used to cross-check the declared answers.
/// The probe family is the kernel pair (resp. cokernel pair) of f together
/// with every object of carrier size <= probe_size the category can list.
bool is_mono_by_probe(const Mor& f, int probe_size = 3);
bool is_epi_by_probe(const Mor& f, int probe_size = 3);

struct Coproduct {
  Obj object;
  std::vector<Mor> injections;
};
Coproduct coproduct(const Category& c, const std::vector<Obj>& objs);
/// Copairing [fs...] out of a coproduct.
Mor copair(const Coproduct& sum, const std::vector<Mor>& fs);

/// Quotient map cod(f) -> Q for the congruence generated by f(x) ~ g(x).
Mor coequalizer(const Mor& f, const Mor& g);

struct KernelPair {
  Obj object;
  Mor p1;
  Mor p2;
};
KernelPair kernel_pair(const Mor& f);

struct CokernelPair {
  Obj object;
  Mor i1;
  Mor i2;
};
CokernelPair cokernel_pair(const Mor& f);

/// Subobject of X on the given element subsets (per sort); graph edges are
/// those listed in `edges` (all induced edges when nullopt).
Mor subobject(const Obj& x, const std::vector<std::vector<int>>& elements,
              std::optional<std::vector<Edge>> edges = std::nullopt);
/// Smallest subobject containing the given elements (sort, index).
Mor generated_subobject(const Obj& x, const std::vector<std::pair<int, int>>& generators);
/// Image subobject of f, as a mono into cod(f).
Mor image(const Mor& f);

/// Every subobject of a finite X with at most `bound` elements, one
/// representative per subobject (graphs: not necessarily induced).
std::vector<Mor> subobjects(const Obj& x, int bound);

std::optional<Mor> find_isomorphism(const Obj& x, const Obj& y);
bool isomorphic(const Obj& x, const Obj& y);

/// All objects of carrier size <= max_size (FinSet, graphs, unary algebras;
/// presheaves return the representables plus empty and terminal objects).
std::vector<Obj> small_objects(const Category& c, int max_size);

/// Lengths of the cycles of a unary algebra, one per connected component.
std::vector<int> cycle_lengths(const Obj& x);
/// Directed-cycle detection (self-loops count).
bool has_directed_cycle(const Obj& x);

}  // namespace finbound::cats

#include "finbound/colimit.hpp"

#include <set>

namespace finbound::colimit {

using namespace cats;

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::PassProbeLimited:
      return "PASS(probe-limited)";
    case Verdict::FailCertified:
      return "FAIL(certified)";
    case Verdict::Exhausted:
      return "EXHAUSTED";
  }
  return "?";
}

Verdict verdict_from_string(const std::string& s) {
  if (s == "PASS(probe-limited)") return Verdict::PassProbeLimited;
  if (s == "FAIL(certified)") return Verdict::FailCertified;
  if (s == "EXHAUSTED") return Verdict::Exhausted;
  throw PreconditionError("unknown verdict '" + s + "'");
}

bool cocone_commutes(const Cocone& c) {
  if (c.legs.size() != c.chain.objects.size()) return false;
  for (std::size_t i = 0; i < c.chain.links.size(); ++i)
    if (!(compose(c.legs[i + 1], c.chain.links[i]) == c.legs[i])) return false;
  return true;
}

ColimitTestResult reflect_colimit_test(const Cocone& c, const std::vector<Obj>& probes) {
  require(cocone_commutes(c), "reflect_colimit_test: cocone does not commute");
  const bool symbolic = std::holds_alternative<SymbolicObject>(c.apex);
  const Obj target = leg_target_copy(c);
  const int last = static_cast<int>(c.chain.objects.size()) - 1;
  ColimitTestResult res;
  for (const Obj& a : probes) {
    std::vector<Mor> fs;
    if (symbolic) {
      auto w = hom_into(a, std::get<SymbolicObject>(c.apex));
      res.window_exhausted = res.window_exhausted || w.exhausted;
      fs = std::move(w.items);
    } else {
      fs = hom_set(a, target);
    }
    for (const Mor& f : fs) {
      ++res.morphisms_checked;
      std::optional<Mor> first;
      for (int i = 0; i <= last; ++i) {
        const Mor to_end = chain_map(c.chain, i, last);
        for (const Mor& g : hom_set(a, c.chain.objects[i])) {
          if (!(compose(c.legs[i], g) == f)) continue;
          Mor pushed = compose(to_end, g);
          if (!first) {
            first = pushed;
          } else if (!(pushed == *first)) {
            res.verdict = Verdict::FailCertified;
            res.unmerged = std::make_pair(*first, pushed);
            return res;
          }
        }
      }
      if (!first) {
        res.unfactorized = f;
        res.verdict = symbolic ? Verdict::Exhausted : Verdict::FailCertified;
        return res;
      }
    }
  }
  return res;
}

bool union_test(const std::vector<Mor>& subobjects, const Obj& target) {
  std::vector<std::vector<char>> hit(target.sort_count());
  for (int s = 0; s < target.sort_count(); ++s) hit[s].assign(target.sizes[s], 0);
  std::set<Edge> edges;
  for (const Mor& m : subobjects) {
    require(m.cod == target, "union_test: subobject of a different object");
    require(is_mono(m), "union_test: not a mono");
    for (int s = 0; s < target.sort_count(); ++s)
      for (int v : m.maps[s]) hit[s][v] = 1;
    for (auto [u, v] : m.dom.edges) edges.emplace(m.maps[0][u], m.maps[0][v]);
  }
  for (const auto& h : hit)
    for (char c : h)
      if (!c) return false;
  return edges.size() == target.edges.size();
}

ImageUnion image_union(const Cocone& c, const Mor& f) {
  const Obj target = leg_target_copy(c);
  require(f.dom == target, "image_union: f must start at the cocone's apex");
  ImageUnion out{{}, image(f), false};
  for (const Mor& leg : c.legs) out.images.push_back(image(compose(f, leg)));
  // Compare as element sets (plus edge sets) inside cod(f).
  auto footprint = [](const Mor& m) {
    std::set<std::pair<int, int>> els;
    for (int s = 0; s < m.dom.sort_count(); ++s)
      for (int v : m.maps[s]) els.emplace(s, v);
    std::set<Edge> edges;
    for (auto [u, v] : m.dom.edges) edges.emplace(m.maps[0][u], m.maps[0][v]);
    return std::make_pair(els, edges);
  };
  std::set<std::pair<int, int>> els;
  std::set<Edge> edges;
  for (const Mor& m : out.images) {
    auto [e, g] = footprint(m);
    els.insert(e.begin(), e.end());
    edges.insert(g.begin(), g.end());
  }
  out.equal = footprint(out.image_f) == std::make_pair(els, edges);
  return out;
}

}  // namespace finbound::colimit

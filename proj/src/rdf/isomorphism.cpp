#include "dmcc/rdf/isomorphism.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

namespace dmcc::rdf {
namespace {

using Color = std::size_t;

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

struct BlankIndex {
  std::vector<Term> nodes;
  std::map<Term, std::size_t> id;
  std::vector<std::vector<const Triple*>> incident;
  std::vector<Color> color;

  explicit BlankIndex(const Graph& g) {
    for (const auto& b : g.blank_nodes()) {
      id.emplace(b, nodes.size());
      nodes.push_back(b);
    }
    incident.resize(nodes.size());
    for (const auto& t : g) {
      if (t.subject.is_blank()) incident[id.at(t.subject)].push_back(&t);
      if (t.object.is_blank() && t.object != t.subject) incident[id.at(t.object)].push_back(&t);
    }
    color.assign(nodes.size(), 0);
  }

  // Hash of one neighbour as seen from `self`; blank neighbours contribute
  // their current colour, ground terms their text.
  std::size_t term_signature(const Term& t, const Term& self) const {
    if (t == self) return 1;
    if (t.is_blank()) return mix(2, color[id.at(t)]);
    return mix(3, std::hash<std::string>{}(t.to_ntriples()));
  }

  void refine() {
    std::vector<Color> next(nodes.size());
    std::hash<std::string> h;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      std::vector<std::size_t> parts;
      for (const Triple* t : incident[i]) {
        std::size_t s = h(t->predicate.as_iri().value());
        s = mix(s, t->subject == nodes[i] ? 11 : 13);
        s = mix(s, term_signature(t->subject, nodes[i]));
        s = mix(s, term_signature(t->object, nodes[i]));
        parts.push_back(s);
      }
      std::sort(parts.begin(), parts.end());
      std::size_t c = mix(color[i], parts.size());
      for (auto p : parts) c = mix(c, p);
      next[i] = c;
    }
    color = std::move(next);
  }

  std::size_t distinct_colors() const { return std::set<Color>(color.begin(), color.end()).size(); }
};

class Matcher {
 public:
  Matcher(const Graph& b, const BlankIndex& ia, const BlankIndex& ib)
      : b_(b), ia_(ia), ib_(ib), mapping_(ia.nodes.size(), kUnset), used_(ib.nodes.size(), false) {
    order_.resize(ia.nodes.size());
    for (std::size_t i = 0; i < order_.size(); ++i) order_[i] = i;
    std::map<Color, std::size_t> class_size;
    for (auto c : ib.color) ++class_size[c];
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t x, std::size_t y) {
      return class_size[ia.color[x]] < class_size[ia.color[y]];
    });
  }

  bool solve(std::size_t depth = 0) {
    if (depth == order_.size()) return true;
    const std::size_t x = order_[depth];
    for (std::size_t y = 0; y < ib_.nodes.size(); ++y) {
      if (used_[y] || ib_.color[y] != ia_.color[x]) continue;
      mapping_[x] = y;
      used_[y] = true;
      if (consistent(x) && solve(depth + 1)) return true;
      used_[y] = false;
      mapping_[x] = kUnset;
    }
    return false;
  }

  BlankMapping result() const {
    BlankMapping out;
    for (std::size_t i = 0; i < mapping_.size(); ++i) out.emplace(ia_.nodes[i], ib_.nodes[mapping_[i]]);
    return out;
  }

 private:
  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  const Graph& b_;
  const BlankIndex& ia_;
  const BlankIndex& ib_;
  std::vector<std::size_t> mapping_;
  std::vector<bool> used_;
  std::vector<std::size_t> order_;

  std::optional<Term> image(const Term& t) const {
    if (!t.is_blank()) return t;
    const std::size_t m = mapping_[ia_.id.at(t)];
    if (m == kUnset) return std::nullopt;
    return ib_.nodes[m];
  }

  bool consistent(std::size_t x) const {
    for (const Triple* t : ia_.incident[x]) {
      auto s = image(t->subject);
      auto o = image(t->object);
      if (!s || !o) continue;
      if (!b_.contains(Triple(*s, t->predicate, *o))) return false;
    }
    return true;
  }
};

}  // namespace

std::optional<BlankMapping> find_isomorphism(const Graph& a, const Graph& b) {
  if (a.size() != b.size()) return std::nullopt;
  std::size_t ground = 0;
  for (const auto& t : a) {
    if (t.subject.is_blank() || t.object.is_blank()) continue;
    if (!b.contains(t)) return std::nullopt;
    ++ground;
  }
  std::size_t ground_b = 0;
  for (const auto& t : b)
    if (!t.subject.is_blank() && !t.object.is_blank()) ++ground_b;
  if (ground != ground_b) return std::nullopt;

  BlankIndex ia(a);
  BlankIndex ib(b);
  if (ia.nodes.size() != ib.nodes.size()) return std::nullopt;

  auto histogram = [](const BlankIndex& idx) {
    std::multiset<Color> h(idx.color.begin(), idx.color.end());
    return h;
  };
  std::size_t prev = 0;
  for (std::size_t round = 0; round <= ia.nodes.size(); ++round) {
    ia.refine();
    ib.refine();
    if (histogram(ia) != histogram(ib)) return std::nullopt;
    const std::size_t now = ia.distinct_colors();
    if (now == prev) break;
    prev = now;
  }

  Matcher m(b, ia, ib);
  if (!m.solve()) return std::nullopt;
  return m.result();
}

}  // namespace dmcc::rdf

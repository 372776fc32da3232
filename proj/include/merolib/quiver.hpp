#pragma once

// Quivers, truncated path algebras and their trace spaces: Hochschild
// 0-chains are spanned by vertex idempotents and rotation classes of closed
// arrow walks. Any path with distinct endpoints is a commutator, hence zero
// in the trace space.

#include "merolib/caps.hpp"
#include "merolib/scalar.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace mero::quiverhh {

using exactalg::CapExceededError;
using exactalg::PreconditionError;
using exactalg::Scalar;

struct Arrow {
  int src = 0;  // 1-based
  int tgt = 0;
  std::string label;
};

struct Quiver {
  int n = 0;
  std::vector<Arrow> arrows;

  void validate() const {
    if (n <= 0) throw PreconditionError("Quiver: need at least one vertex");
    std::set<std::string> labels;
    for (const auto& a : arrows) {
      if (a.src < 1 || a.src > n || a.tgt < 1 || a.tgt > n)
        throw PreconditionError("Quiver: arrow endpoint out of range");
      if (!labels.insert(a.label).second)
        throw PreconditionError("Quiver: duplicate arrow label " + a.label);
    }
  }

  // Cyclic quiver: arrows v_i -> v_{i+1 mod n}, labels <prefix>1..<prefix>n.
  static Quiver cyclic(int n, const std::string& prefix = "a") {
    if (n < 1) throw PreconditionError("cyclic quiver needs n >= 1");
    Quiver q;
    q.n = n;
    for (int i = 1; i <= n; ++i)
      q.arrows.push_back({i, i % n + 1, prefix + std::to_string(i)});
    return q;
  }

  // Cyclic quiver with explicit arrow labels, one per vertex.
  static Quiver cyclic_labeled(const std::vector<std::string>& labels) {
    Quiver q;
    q.n = static_cast<int>(labels.size());
    if (q.n < 1) throw PreconditionError("cyclic quiver needs n >= 1");
    for (int i = 1; i <= q.n; ++i) q.arrows.push_back({i, i % q.n + 1, labels[i - 1]});
    return q;
  }

  // One vertex with a single loop.
  static Quiver loop(const std::string& label = "t") {
    Quiver q;
    q.n = 1;
    q.arrows.push_back({1, 1, label});
    return q;
  }

  // First line: vertex count. Then one "src tgt label" triple per line.
  static Quiver parse(const std::string& text) {
    std::istringstream in(text);
    Quiver q;
    if (!(in >> q.n)) throw PreconditionError("quiver file: missing vertex count");
    int src, tgt;
    std::string label;
    while (in >> src >> tgt >> label) q.arrows.push_back({src, tgt, label});
    q.validate();
    return q;
  }

  static Quiver from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot open quiver file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
  }

  int arrow_index(const std::string& label) const {
    for (size_t i = 0; i < arrows.size(); ++i)
      if (arrows[i].label == label) return static_cast<int>(i);
    throw PreconditionError("unknown arrow label: " + label);
  }
};

// Either the idempotent at a vertex or the rotation class of a closed walk,
// stored as the lexicographically least rotation of its label sequence.
struct PathClass {
  int vertex = 0;           // >0 for idempotents
  std::vector<int> arrows;  // arrow indices, canonical rotation

  bool is_idempotent() const { return arrows.empty(); }
  size_t length() const { return arrows.size(); }

  std::string str(const Quiver& q) const {
    if (is_idempotent()) return "e" + std::to_string(vertex);
    std::string out = "[";
    for (size_t i = 0; i < arrows.size(); ++i) {
      if (i) out += ",";
      out += q.arrows[arrows[i]].label;
    }
    return out + "]";
  }

  bool operator==(const PathClass& o) const {
    return vertex == o.vertex && arrows == o.arrows;
  }
  bool operator<(const PathClass& o) const {
    if (arrows.empty() != o.arrows.empty()) return arrows.empty();
    if (arrows.empty()) return vertex < o.vertex;
    if (arrows.size() != o.arrows.size()) return arrows.size() < o.arrows.size();
    return arrows < o.arrows;
  }
};

inline PathClass idempotent(int vertex) {
  PathClass p;
  p.vertex = vertex;
  return p;
}

namespace detail {

inline std::vector<std::string> labels_of(const Quiver& q, const std::vector<int>& walk) {
  std::vector<std::string> out;
  out.reserve(walk.size());
  for (int a : walk) out.push_back(q.arrows[static_cast<size_t>(a)].label);
  return out;
}

inline std::vector<int> least_rotation(const Quiver& q, const std::vector<int>& walk) {
  auto labels = labels_of(q, walk);
  size_t best = 0;
  std::vector<std::string> best_labels = labels;
  for (size_t r = 1; r < walk.size(); ++r) {
    std::vector<std::string> rot(labels.begin() + r, labels.end());
    rot.insert(rot.end(), labels.begin(), labels.begin() + r);
    if (rot < best_labels) {
      best_labels = std::move(rot);
      best = r;
    }
  }
  std::vector<int> out(walk.begin() + best, walk.end());
  out.insert(out.end(), walk.begin(), walk.begin() + best);
  return out;
}

}  // namespace detail

// Rotation-minimal representative of a closed walk; two rotations of the
// same walk canonicalize identically.
inline PathClass canonicalize_cycle(const Quiver& q, const std::vector<int>& walk) {
  if (walk.empty()) throw PreconditionError("canonicalize_cycle: empty walk");
  for (size_t i = 0; i < walk.size(); ++i) {
    if (walk[i] < 0 || walk[i] >= static_cast<int>(q.arrows.size()))
      throw PreconditionError("canonicalize_cycle: arrow index out of range");
    int next = walk[(i + 1) % walk.size()];
    if (q.arrows[static_cast<size_t>(walk[i])].tgt != q.arrows[static_cast<size_t>(next)].src)
      throw PreconditionError("canonicalize_cycle: not a closed walk");
  }
  PathClass p;
  p.vertex = q.arrows[static_cast<size_t>(walk.front())].src;
  p.arrows = detail::least_rotation(q, walk);
  p.vertex = q.arrows[static_cast<size_t>(p.arrows.front())].src;
  return p;
}

inline PathClass canonicalize_cycle(const Quiver& q, const std::vector<std::string>& labels) {
  std::vector<int> walk;
  walk.reserve(labels.size());
  for (const auto& l : labels) walk.push_back(q.arrow_index(l));
  return canonicalize_cycle(q, walk);
}

struct TraceSpace {
  Quiver quiver;
  int max_len = 0;
  std::vector<PathClass> basis;  // idempotents first, then cycles by (length, labels)

  size_t dimension() const { return basis.size(); }
};

// Basis of the trace space truncated at walk length L: idempotents plus one
// representative per rotation class of closed walks of length 1..L.
inline TraceSpace trace_space(const Quiver& quiver, int max_len,
                              std::uint64_t walk_cap = Caps().walk) {
  if (max_len < 0) throw PreconditionError("trace_space: negative length cap");
  quiver.validate();

  TraceSpace ts;
  ts.quiver = quiver;
  ts.max_len = max_len;
  for (int v = 1; v <= quiver.n; ++v) ts.basis.push_back(idempotent(v));

  std::vector<std::vector<int>> out_arrows(static_cast<size_t>(quiver.n) + 1);
  for (size_t i = 0; i < quiver.arrows.size(); ++i)
    out_arrows[static_cast<size_t>(quiver.arrows[i].src)].push_back(static_cast<int>(i));

  std::set<std::vector<std::string>> seen;
  std::vector<PathClass> cycles;
  std::uint64_t visited = 0;

  std::vector<int> walk;
  std::function<void(int, int, int)> dfs = [&](int start, int at, int len) {
    if (++visited > walk_cap)
      throw CapExceededError("trace_space: walk cap exceeded");
    if (len > 0 && at == start) {
      PathClass c = canonicalize_cycle(quiver, walk);
      auto key = detail::labels_of(quiver, c.arrows);
      if (seen.insert(key).second) cycles.push_back(c);
    }
    if (len == max_len) return;
    for (int a : out_arrows[static_cast<size_t>(at)]) {
      walk.push_back(a);
      dfs(start, quiver.arrows[static_cast<size_t>(a)].tgt, len + 1);
      walk.pop_back();
    }
  };
  for (int v = 1; v <= quiver.n; ++v) dfs(v, v, 0);

  std::sort(cycles.begin(), cycles.end());
  ts.basis.insert(ts.basis.end(), cycles.begin(), cycles.end());
  return ts;
}

// Formal scalar combination of path classes.
struct TraceChain {
  std::vector<std::pair<Scalar, PathClass>> terms;

  static TraceChain single(const PathClass& p, const Scalar& c = Scalar(1)) {
    TraceChain ch;
    ch.terms.push_back({c, p});
    return ch;
  }
};

}  // namespace mero::quiverhh

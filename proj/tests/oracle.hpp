#pragma once

// Brute-force reference computations on arrow-name words. Nothing here uses
// the library's path, relation or cycle code; only names and incidences are
// read from a parsed Quiver.

#include <algorithm>
#include <cstddef>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "strandalg/qz_format.hpp"

namespace oracle {

using Word = std::vector<std::string>;  // written order, leftmost applied last

struct Arrow {
  std::string name, tail, head;
};

struct Pair {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::vector<Word> z;
  std::map<std::string, Arrow> by_name;

  void add_arrow(const std::string& n, const std::string& t, const std::string& h) {
    arrows.push_back({n, t, h});
    by_name[n] = arrows.back();
  }
};

struct Walk {
  std::string head, tail;
  Word arrows;
};

inline Word split_word(const std::string& s) {
  Word out;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, '*')) out.push_back(part);
  return out;
}

inline Pair from_file(const strandalg::QzFile& f) {
  Pair p;
  for (auto v : f.quiver.vertices()) p.vertices.push_back(f.quiver.name(v));
  for (auto a : f.quiver.arrows()) {
    p.add_arrow(f.quiver.name(a), f.quiver.name(f.quiver.tail(a)),
                f.quiver.name(f.quiver.head(a)));
  }
  for (const auto& r : f.z.relations()) p.z.push_back(split_word(f.quiver.format(r)));
  return p;
}

inline bool occurs(const Word& small, const Word& big) {
  if (small.size() > big.size()) return false;
  for (std::size_t i = 0; i + small.size() <= big.size(); ++i) {
    if (std::equal(small.begin(), small.end(), big.begin() + i)) return true;
  }
  return false;
}

inline bool admissible(const Pair& p, const Word& w) {
  return std::none_of(p.z.begin(), p.z.end(), [&](const Word& z) { return occurs(z, w); });
}

inline std::string format(const Walk& w) {
  if (w.arrows.empty()) return "e(" + w.head + ")";
  std::string out;
  for (std::size_t i = 0; i < w.arrows.size(); ++i) out += (i ? "*" : "") + w.arrows[i];
  return out;
}

// All admissible walks of length <= max_length, trivial ones included.
inline std::vector<Walk> admissible_walks(const Pair& p, std::size_t max_length) {
  std::vector<Walk> out, frontier;
  for (const auto& v : p.vertices) frontier.push_back({v, v, {}});
  for (std::size_t len = 0;; ++len) {
    out.insert(out.end(), frontier.begin(), frontier.end());
    if (len == max_length) break;
    std::vector<Walk> next;
    for (const Walk& w : frontier) {
      for (const Arrow& a : p.arrows) {
        if (a.tail != w.head) continue;
        Walk e{a.head, w.tail, w.arrows};
        e.arrows.insert(e.arrows.begin(), a.name);
        if (admissible(p, e.arrows)) next.push_back(std::move(e));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

inline Word repeat(const Word& w, std::size_t k) {
  Word out;
  for (std::size_t i = 0; i < k; ++i) out.insert(out.end(), w.begin(), w.end());
  return out;
}

inline bool proper_power(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) periodic = w[i] == w[i - d];
    if (periodic) return true;
  }
  return false;
}

inline std::size_t max_relation(const Pair& p) {
  std::size_t m = 0;
  for (const Word& z : p.z) m = std::max(m, z.size());
  return m;
}

// Primitive cycles of length <= max_length, found by scanning every
// admissible closed walk.
inline std::vector<Walk> primitive_cycles(const Pair& p, std::size_t max_length) {
  std::vector<Walk> out;
  for (const Walk& w : admissible_walks(p, max_length)) {
    if (w.arrows.empty() || w.head != w.tail || proper_power(w.arrows)) continue;
    const std::size_t k = max_relation(p) / w.arrows.size() + 2;
    if (admissible(p, repeat(w.arrows, k))) out.push_back(w);
  }
  return out;
}

inline std::set<std::string> formatted(const std::vector<Walk>& ws) {
  std::set<std::string> out;
  for (const Walk& w : ws) out.insert(format(w));
  return out;
}

inline bool is_suffix(const Word& small, const Word& big) {
  return small.size() <= big.size() &&
         std::equal(small.rbegin(), small.rend(), big.rbegin());
}

inline bool is_prefix(const Word& small, const Word& big) {
  return small.size() <= big.size() && std::equal(small.begin(), small.end(), big.begin());
}

// Least h >= 1 such that every admissible walk of length >= h (searched up to
// `horizon`) is a suffix of a power of a primitive cycle at its tail and a
// prefix of a power of one at its head.
inline std::size_t bounded_below_h(const Pair& p, std::size_t horizon) {
  const auto cycles = primitive_cycles(p, p.arrows.size());
  std::size_t h = 1;
  for (const Walk& w : admissible_walks(p, horizon)) {
    if (w.arrows.empty()) continue;
    bool tail_ok = false, head_ok = false;
    for (const Walk& c : cycles) {
      const Word big = repeat(c.arrows, w.arrows.size() / c.arrows.size() + 2);
      if (c.tail == w.tail && is_suffix(w.arrows, big)) tail_ok = true;
      if (c.head == w.head && is_prefix(w.arrows, big)) head_ok = true;
    }
    if (!(tail_ok && head_ok)) h = std::max(h, w.arrows.size() + 1);
  }
  return h;
}

// A random biserial quiver on `vertices` vertices with every length-2 path
// in Z except those along a random injective successor map, plus a few
// longer relations along successor chains. Such a pair is special.
inline Pair random_special_pair(std::mt19937_64& rng, std::size_t vertices) {
  Pair p;
  for (std::size_t v = 1; v <= vertices; ++v) p.vertices.push_back(std::to_string(v));
  std::uniform_int_distribution<std::size_t> pick(0, vertices - 1);
  std::map<std::string, int> in, out;
  const std::size_t attempts = 2 * vertices + 2;
  for (std::size_t k = 0; k < attempts; ++k) {
    const std::string t = p.vertices[pick(rng)], h = p.vertices[pick(rng)];
    if (out[t] >= 2 || in[h] >= 2) continue;
    ++out[t];
    ++in[h];
    p.add_arrow("a" + std::to_string(p.arrows.size()), t, h);
  }
  // succ[b] = a means a*b stays outside Z.
  std::map<std::string, std::string> succ;
  std::set<std::string> used;
  std::vector<Arrow> order = p.arrows;
  std::shuffle(order.begin(), order.end(), rng);
  std::bernoulli_distribution keep(0.85);
  for (const Arrow& b : order) {
    std::vector<std::string> options;
    for (const Arrow& a : p.arrows) {
      if (a.tail == b.head && !used.count(a.name)) options.push_back(a.name);
    }
    if (options.empty() || !keep(rng)) continue;
    std::uniform_int_distribution<std::size_t> choose(0, options.size() - 1);
    succ[b.name] = options[choose(rng)];
    used.insert(succ[b.name]);
  }
  for (const Arrow& b : p.arrows) {
    for (const Arrow& a : p.arrows) {
      if (a.tail != b.head) continue;
      auto it = succ.find(b.name);
      if (it == succ.end() || it->second != a.name) p.z.push_back({a.name, b.name});
    }
  }
  std::bernoulli_distribution longer(0.3);
  std::uniform_int_distribution<std::size_t> len(3, 5);
  for (const Arrow& b : p.arrows) {
    if (!longer(rng)) continue;
    Word w{b.name};
    const std::size_t target = len(rng);
    while (w.size() < target) {
      auto it = succ.find(w.front());
      if (it == succ.end()) break;
      w.insert(w.begin(), it->second);
    }
    if (w.size() >= 3) p.z.push_back(w);
  }
  return p;
}

inline std::string to_qz(const Pair& p) {
  std::string s = "quiver random\nvertices";
  for (const auto& v : p.vertices) s += " " + v;
  s += "\narrows\n";
  for (const Arrow& a : p.arrows) s += "  " + a.name + ": " + a.tail + " -> " + a.head + "\n";
  s += "relations\n";
  for (const Word& z : p.z) {
    std::string line;
    for (std::size_t i = 0; i < z.size(); ++i) line += (i ? "*" : "") + z[i];
    s += "  " + line + "\n";
  }
  return s;
}

}  // namespace oracle

#include "skein/bracket.hpp"

#include <algorithm>
#include <cstdint>
#include <thread>

#include "raw_diagram.hpp"
#include "skein/errors.hpp"

namespace skein {

namespace {

// Pairing 0 joins slots (0,1),(2,3); pairing 1 joins (0,3),(1,2).
constexpr int kPairs[2][2][2] = {{{0, 1}, {2, 3}}, {{0, 3}, {1, 2}}};

template <class R>
struct Ring;

template <>
struct Ring<LaurentPoly> {
  static LaurentPoly one() { return 1; }
  static LaurentPoly weight(const TangleVertex&, int pairing) {
    // Crossings start at an under-strand end, so pairing 0 is the A-smoothing.
    return LaurentPoly::monomial(pairing == 0 ? 1 : -1);
  }
  static void times_delta(LaurentPoly& p) { p = -(p.shifted(2) + p.shifted(-2)); }
};

template <>
struct Ring<SkeinPoly> {
  static SkeinPoly one() { return 1; }
  static SkeinPoly weight(const TangleVertex& v, int pairing) {
    if (v.kind == VertexKind::crossing) return SkeinPoly(LaurentPoly::monomial(pairing == 0 ? 1 : -1));
    return pairing == v.oriented_pairing ? SkeinPoly::b() : SkeinPoly::c();
  }
  static void times_delta(SkeinPoly& p) { p *= SkeinPoly(LaurentPoly::delta()); }
};

// ------------------------------------------------------------------ contraction

// A state is a perfect matching on the current points: the frontier edges
// (one end processed) followed by the boundary terminals. Each path through
// the processed region joins two points.
template <class R>
std::map<Matching, R> contract(const Tangle& t) {
  const int n = static_cast<int>(t.vertices.size());
  const int terms = static_cast<int>(t.boundary.size());

  std::map<int, int> boundary_count;
  for (int e : t.boundary) ++boundary_count[e];

  std::vector<int> frontier;
  std::vector<int> init(static_cast<std::size_t>(terms), -1);
  {
    std::map<int, int> first_pos;
    std::vector<int> frontier_terminal;
    for (int i = 0; i < terms; ++i) {
      const int e = t.boundary[static_cast<std::size_t>(i)];
      if (boundary_count[e] == 2) {
        auto [it, fresh] = first_pos.emplace(e, i);
        if (!fresh) {
          init[static_cast<std::size_t>(i)] = it->second;
          init[static_cast<std::size_t>(it->second)] = i;
        }
      } else {
        frontier.push_back(e);
        frontier_terminal.push_back(i);
      }
    }
    const int f = static_cast<int>(frontier.size());
    std::vector<int> key(static_cast<std::size_t>(f + terms));
    for (int i = 0; i < f; ++i) {
      key[static_cast<std::size_t>(i)] = f + frontier_terminal[static_cast<std::size_t>(i)];
      key[static_cast<std::size_t>(f + frontier_terminal[static_cast<std::size_t>(i)])] = i;
    }
    for (int i = 0; i < terms; ++i) {
      if (init[static_cast<std::size_t>(i)] >= 0) key[static_cast<std::size_t>(f + i)] = f + init[static_cast<std::size_t>(i)];
    }
    init = std::move(key);
  }

  std::map<std::vector<int>, R> states;
  states.emplace(init, Ring<R>::one());

  std::vector<bool> done(static_cast<std::size_t>(n), false);
  for (int step = 0; step < n; ++step) {
    // Greedy choice: most ends already on the frontier.
    int best = -1;
    int best_score = -1;
    for (int v = 0; v < n; ++v) {
      if (done[static_cast<std::size_t>(v)]) continue;
      int score = 0;
      for (int e : t.vertices[static_cast<std::size_t>(v)].ends) {
        score += std::count(frontier.begin(), frontier.end(), e) > 0 ? 1 : 0;
      }
      if (score > best_score) {
        best = v;
        best_score = score;
      }
    }
    done[static_cast<std::size_t>(best)] = true;
    const auto& vx = t.vertices[static_cast<std::size_t>(best)];

    const int f_old = static_cast<int>(frontier.size());
    const int base = f_old + terms;
    // Local point ids: 0..f_old-1 old frontier, f_old.. terminals, then temps.
    std::array<int, 4> vpoint{};
    std::vector<std::pair<int, int>> temp_links;  // partnered temp pairs
    std::vector<int> new_edges;                   // edges that join the frontier
    std::vector<int> new_edge_point;              // their local point ids
    int next_temp = base;
    for (int s = 0; s < 4; ++s) {
      const int e = vx.ends[static_cast<std::size_t>(s)];
      auto it = std::find(frontier.begin(), frontier.end(), e);
      if (it != frontier.end()) {
        vpoint[static_cast<std::size_t>(s)] = static_cast<int>(it - frontier.begin());
        continue;
      }
      int twin = -1;
      for (int s2 = 0; s2 < 4; ++s2) {
        if (s2 != s && vx.ends[static_cast<std::size_t>(s2)] == e) twin = s2;
      }
      if (twin >= 0) {
        if (twin < s) continue;
        vpoint[static_cast<std::size_t>(s)] = next_temp;
        vpoint[static_cast<std::size_t>(twin)] = next_temp + 1;
        temp_links.emplace_back(next_temp, next_temp + 1);
        next_temp += 2;
      } else {
        vpoint[static_cast<std::size_t>(s)] = next_temp;
        temp_links.emplace_back(next_temp, next_temp + 1);
        new_edges.push_back(e);
        new_edge_point.push_back(next_temp + 1);
        next_temp += 2;
      }
    }

    // New frontier: surviving old edges in order, then new ones.
    std::vector<int> remap(static_cast<std::size_t>(next_temp), -1);
    std::vector<int> next_frontier;
    for (int i = 0; i < f_old; ++i) {
      const int e = frontier[static_cast<std::size_t>(i)];
      if (std::find(vx.ends.begin(), vx.ends.end(), e) == vx.ends.end()) {
        remap[static_cast<std::size_t>(i)] = static_cast<int>(next_frontier.size());
        next_frontier.push_back(e);
      }
    }
    for (std::size_t k = 0; k < new_edges.size(); ++k) {
      remap[static_cast<std::size_t>(new_edge_point[k])] = static_cast<int>(next_frontier.size());
      next_frontier.push_back(new_edges[k]);
    }
    const int f_new = static_cast<int>(next_frontier.size());
    for (int i = 0; i < terms; ++i) remap[static_cast<std::size_t>(f_old + i)] = f_new + i;

    std::map<std::vector<int>, R> next;
    std::vector<int> partner(static_cast<std::size_t>(next_temp));
    for (const auto& [key, coef] : states) {
      for (int pairing = 0; pairing < 2; ++pairing) {
        std::copy(key.begin(), key.end(), partner.begin());
        for (const auto& [x, y] : temp_links) {
          partner[static_cast<std::size_t>(x)] = y;
          partner[static_cast<std::size_t>(y)] = x;
        }
        int loops = 0;
        for (const auto& pr : kPairs[pairing]) {
          const int x = vpoint[static_cast<std::size_t>(pr[0])];
          const int y = vpoint[static_cast<std::size_t>(pr[1])];
          const int px = partner[static_cast<std::size_t>(x)];
          if (px == y) {
            ++loops;
          } else {
            const int py = partner[static_cast<std::size_t>(y)];
            partner[static_cast<std::size_t>(px)] = py;
            partner[static_cast<std::size_t>(py)] = px;
          }
          partner[static_cast<std::size_t>(x)] = -1;
          partner[static_cast<std::size_t>(y)] = -1;
        }
        std::vector<int> nkey(static_cast<std::size_t>(f_new + terms));
        for (int p = 0; p < next_temp; ++p) {
          const int r = remap[static_cast<std::size_t>(p)];
          if (r >= 0) nkey[static_cast<std::size_t>(r)] = remap[static_cast<std::size_t>(partner[static_cast<std::size_t>(p)])];
        }
        R w = coef * Ring<R>::weight(vx, pairing);
        for (int l = 0; l < loops; ++l) Ring<R>::times_delta(w);
        auto [it, fresh] = next.try_emplace(std::move(nkey), std::move(w));
        if (!fresh) it->second += w;
      }
    }
    std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
    states = std::move(next);
    frontier = std::move(next_frontier);
  }

  std::map<Matching, R> out;
  for (const auto& [key, coef] : states) {
    Matching m;
    for (int i = 0; i < terms; ++i) {
      const int j = key[static_cast<std::size_t>(i)];
      if (i < j) m.emplace_back(i, j);
    }
    out[m] += coef;
  }
  return out;
}

template <class R>
R contract_long(const LongDiagram& d) {
  auto res = contract<R>(to_tangle(d));
  auto it = res.find(Matching{{0, 1}});
  return it == res.end() ? R() : it->second;
}

// ------------------------------------------------------------------ naive

// Histogram over (A exponent, B degree, closed loops), filled by enumerating
// every state. Pairing choices per vertex as in kPairs; bit i of the state
// selects pairing 1 at vertex i.
struct NaiveCounts {
  int crossings = 0;
  int doubles = 0;
  int n = 0;
  std::vector<std::uint64_t> counts;

  NaiveCounts(int c, int dp)
      : crossings(c), doubles(dp), n(c + dp),
        counts(static_cast<std::size_t>((2 * c + 1) * (dp + 1) * (n + 1)), 0) {}
  std::size_t index(int aexp, int bdeg, int loops) const {
    return (static_cast<std::size_t>(aexp + crossings) * static_cast<std::size_t>(doubles + 1) +
            static_cast<std::size_t>(bdeg)) * static_cast<std::size_t>(n + 1) + static_cast<std::size_t>(loops);
  }
};

void enumerate_range(const LongDiagram& d, std::uint64_t lo, std::uint64_t hi, NaiveCounts& out) {
  const int n = d.size();
  const int edges = d.edge_count();
  std::vector<int> oriented(static_cast<std::size_t>(n), -1);
  for (int v = 0; v < n; ++v) {
    const auto& vx = d.vertices()[static_cast<std::size_t>(v)];
    if (!vx.is_crossing()) oriented[static_cast<std::size_t>(v)] = detail::is_incoming(vx, 3) ? 0 : 1;
  }
  std::vector<int> parent(static_cast<std::size_t>(edges));
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (std::uint64_t state = lo; state < hi; ++state) {
    for (int e = 0; e < edges; ++e) parent[static_cast<std::size_t>(e)] = e;
    int components = edges;
    int aexp = 0;
    int bdeg = 0;
    for (int v = 0; v < n; ++v) {
      const int pairing = static_cast<int>((state >> v) & 1U);
      const auto& vx = d.vertices()[static_cast<std::size_t>(v)];
      if (vx.is_crossing()) {
        aexp += pairing == 0 ? 1 : -1;
      } else if (pairing == oriented[static_cast<std::size_t>(v)]) {
        ++bdeg;
      }
      for (const auto& pr : kPairs[pairing]) {
        const int x = find(vx.ends[static_cast<std::size_t>(pr[0])]);
        const int y = find(vx.ends[static_cast<std::size_t>(pr[1])]);
        if (x != y) {
          parent[static_cast<std::size_t>(x)] = y;
          --components;
        }
      }
    }
    ++out.counts[out.index(aexp, bdeg, components - 1)];
  }
}

NaiveCounts naive_counts(const LongDiagram& d, int threads) {
  const int n = d.size();
  if (n > 40) throw ValidationError("naive evaluation limited to 40 vertices");
  NaiveCounts total(d.crossing_count(), d.double_point_count());
  const std::uint64_t states = std::uint64_t{1} << n;
  const int workers = static_cast<int>(std::clamp<std::uint64_t>(static_cast<std::uint64_t>(std::max(threads, 1)), 1, states));
  if (workers == 1) {
    enumerate_range(d, 0, states, total);
    return total;
  }
  std::vector<NaiveCounts> parts(static_cast<std::size_t>(workers), total);
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    const std::uint64_t lo = states * static_cast<std::uint64_t>(w) / static_cast<std::uint64_t>(workers);
    const std::uint64_t hi = states * static_cast<std::uint64_t>(w + 1) / static_cast<std::uint64_t>(workers);
    pool.emplace_back([&d, lo, hi, &part = parts[static_cast<std::size_t>(w)]] { enumerate_range(d, lo, hi, part); });
  }
  for (auto& th : pool) th.join();
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < total.counts.size(); ++i) total.counts[i] += p.counts[i];
  }
  return total;
}

SkeinPoly naive_singular(const LongDiagram& d, int threads) {
  const auto h = naive_counts(d, threads);
  std::vector<SkeinPoly> delta_pow{SkeinPoly(1)};
  for (int k = 1; k <= h.n; ++k) delta_pow.push_back(delta_pow.back() * SkeinPoly(LaurentPoly::delta()));
  std::vector<SkeinPoly::Term> terms;
  SkeinPoly out;
  for (int a = -h.crossings; a <= h.crossings; ++a) {
    for (int b = 0; b <= h.doubles; ++b) {
      for (int l = 0; l <= h.n; ++l) {
        const auto c = h.counts[h.index(a, b, l)];
        if (c == 0) continue;
        out += SkeinPoly::monomial({a, b, h.doubles - b}, Integer(c)) * delta_pow[static_cast<std::size_t>(l)];
      }
    }
  }
  return out;
}

LaurentPoly naive_kauffman(const LongDiagram& d, int threads) {
  const auto h = naive_counts(d, threads);
  std::vector<LaurentPoly> delta_pow{LaurentPoly(1)};
  for (int k = 1; k <= h.n; ++k) delta_pow.push_back(delta_pow.back() * LaurentPoly::delta());
  LaurentPoly out;
  for (int a = -h.crossings; a <= h.crossings; ++a) {
    for (int l = 0; l <= h.n; ++l) {
      const auto c = h.counts[h.index(a, 0, l)];
      if (c != 0) out += LaurentPoly::monomial(a, Integer(c)) * delta_pow[static_cast<std::size_t>(l)];
    }
  }
  return out;
}

bool use_naive(const LongDiagram& d, const EvalOptions& opts) {
  switch (opts.method) {
    case EvalMethod::naive: return true;
    case EvalMethod::contraction: return false;
    case EvalMethod::automatic: break;
  }
  return d.size() < kAutoContractionThreshold;
}

LaurentPoly sign_power(int w) {
  // (-A)^(-3w)
  return LaurentPoly::monomial(-3 * w, (w % 2 == 0) ? 1 : -1);
}

}  // namespace

LaurentPoly kauffman_bracket(const LongDiagram& d, const EvalOptions& opts) {
  if (d.double_point_count() > 0) throw HasDoublePoints("diagram has double points; use the singular bracket");
  return use_naive(d, opts) ? naive_kauffman(d, opts.threads) : contract_long<LaurentPoly>(d);
}

SkeinPoly singular_bracket(const LongDiagram& d, const EvalOptions& opts) {
  if (d.double_point_count() == 0) return SkeinPoly(kauffman_bracket(d, opts));
  return use_naive(d, opts) ? naive_singular(d, opts.threads) : contract_long<SkeinPoly>(d);
}

LaurentPoly singular_bracket_eval(const LongDiagram& d, const EvalOptions& opts) {
  return eval_bc(singular_bracket(d, opts), 1, -1);
}

SkeinPoly vs_polynomial(const LongDiagram& d, const EvalOptions& opts) {
  return SkeinPoly(sign_power(writhe(d))) * singular_bracket(d, opts);
}

LaurentPoly jones(const LongDiagram& d, const EvalOptions& opts) {
  return sign_power(writhe(d)) * kauffman_bracket(d, opts);
}

TangleBracket tangle_bracket(const Tangle& t) {
  auto r = validate(t);
  if (!r) throw ValidationError(r.invariant + ": " + r.message);
  return contract<SkeinPoly>(t);
}

nlohmann::json to_json(const TangleBracket& tb) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [m, p] : tb) {
    nlohmann::json jm = nlohmann::json::array();
    for (const auto& [i, j] : m) jm.push_back({i, j});
    out.push_back({{"matching", jm}, {"value", format(p)}});
  }
  return out;
}

}  // namespace skein

#include "knotpoly/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <thread>
#include <utility>

#include "pd_internal.hpp"

namespace knotpoly {

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

// Dense index over arc ids, validating the occurs-exactly-twice rule.
struct ArcIndex {
  std::map<int, int> dense;                            // arc id -> dense index
  std::vector<int> ids;                                // dense index -> arc id
  std::vector<std::vector<std::pair<int, int>>> occs;  // dense index -> [(crossing, slot)]
};

ArcIndex index_arcs(const std::vector<std::array<int, 4>>& crossings) {
  ArcIndex ai;
  for (size_t k = 0; k < crossings.size(); ++k) {
    for (int s = 0; s < 4; ++s) {
      int id = crossings[k][static_cast<size_t>(s)];
      if (id <= 0) throw std::invalid_argument("arc ids must be positive");
      auto [it, fresh] = ai.dense.emplace(id, static_cast<int>(ai.ids.size()));
      if (fresh) {
        ai.ids.push_back(id);
        ai.occs.emplace_back();
      }
      ai.occs[static_cast<size_t>(it->second)].emplace_back(static_cast<int>(k), s);
    }
  }
  for (size_t a = 0; a < ai.occs.size(); ++a) {
    if (ai.occs[a].size() != 2)
      throw std::invalid_argument("arc id " + std::to_string(ai.ids[a]) +
                                  " must occur exactly twice");
  }
  return ai;
}

struct Passage {
  int k;
  int in_slot;
};

struct Component {
  std::vector<int> arcs;        // dense arc indices in orientation order
  std::vector<Passage> passes;  // passes[i] is the junction arc[i] runs into
};

struct Analysis {
  ArcIndex ai;
  std::vector<int> over_in;  // per crossing: 1 or 3
  std::vector<Component> comps;
};

Analysis analyze(const PDCode& pd) {
  Analysis an;
  an.ai = index_arcs(pd.crossings);
  an.over_in.assign(pd.crossings.size(), 0);
  const auto& occs = an.ai.occs;
  std::vector<bool> arc_seen(an.ai.ids.size(), false);

  for (const auto& [start_id, start_arc] : an.ai.dense) {
    if (arc_seen[static_cast<size_t>(start_arc)]) continue;

    // undirected cycle walk; the chosen occurrence is treated as the entry
    Component comp;
    std::pair<int, int> start_occ = occs[static_cast<size_t>(start_arc)][0];
    int arc = start_arc;
    std::pair<int, int> occ = start_occ;
    do {
      arc_seen[static_cast<size_t>(arc)] = true;
      comp.arcs.push_back(arc);
      comp.passes.push_back({occ.first, occ.second});
      int out_slot = across(occ.second);
      int out_arc = an.ai.dense.at(
          pd.crossings[static_cast<size_t>(occ.first)][static_cast<size_t>(out_slot)]);
      const auto& oo = occs[static_cast<size_t>(out_arc)];
      std::pair<int, int> exit_occ{occ.first, out_slot};
      occ = (oo[0] == exit_occ) ? oo[1] : oo[0];
      arc = out_arc;
    } while (arc != start_arc || occ != start_occ);

    const int len = static_cast<int>(comp.arcs.size());
    auto id_of = [&](int i) { return an.ai.ids[static_cast<size_t>(comp.arcs[static_cast<size_t>(i)])]; };

    // decide whether the walk direction is the true orientation: the
    // under-strand enters slot 0 by definition of the tuple
    int dir = 0;
    for (const auto& p : comp.passes) {
      if (p.in_slot == 0 || p.in_slot == 2) {
        int want = (p.in_slot == 0) ? 1 : -1;
        if (dir == 0) dir = want;
        else if (dir != want)
          throw std::invalid_argument("inconsistent under-strand directions along a component");
      }
    }
    if (dir == 0) {
      // component passes over at every crossing; orientation is not pinned by
      // the data, so pick one deterministically
      if (len == 1) {
        dir = (comp.passes[0].in_slot == 3) ? 1 : -1;
      } else if (len == 2) {
        // both cyclic orders ascend; send min -> min+1 through the junction at
        // the lower (crossing, slot) position
        int mi = id_of(0) < id_of(1) ? 0 : 1;
        std::pair<int, int> fwd{comp.passes[static_cast<size_t>(mi)].k,
                                comp.passes[static_cast<size_t>(mi)].in_slot};
        int rj = (mi + 1) % 2;
        std::pair<int, int> rev{comp.passes[static_cast<size_t>(rj)].k,
                                across(comp.passes[static_cast<size_t>(rj)].in_slot)};
        dir = (fwd <= rev) ? 1 : -1;
      } else {
        int mi = 0;
        for (int i = 1; i < len; ++i)
          if (id_of(i) < id_of(mi)) mi = i;
        if (id_of((mi + 1) % len) == id_of(mi) + 1) dir = 1;
        else if (id_of((mi + len - 1) % len) == id_of(mi) + 1) dir = -1;
        else throw std::invalid_argument("arc numbering not consecutive along component");
      }
    }
    if (dir == -1) {
      Component rev;
      for (int i = 0; i < len; ++i) {
        int j = len - 1 - i;
        rev.arcs.push_back(comp.arcs[static_cast<size_t>(j)]);
        int pj = (j - 1 + len) % len;
        rev.passes.push_back({comp.passes[static_cast<size_t>(pj)].k,
                              across(comp.passes[static_cast<size_t>(pj)].in_slot)});
      }
      comp = std::move(rev);
    }

    // numbering must ascend along the orientation with exactly one wrap
    int min_id = id_of(0), max_id = id_of(0);
    for (int i = 1; i < len; ++i) {
      min_id = std::min(min_id, id_of(i));
      max_id = std::max(max_id, id_of(i));
    }
    int wraps = 0;
    for (int i = 0; i < len; ++i) {
      int cur = id_of(i), next = id_of((i + 1) % len);
      if (next == cur + 1) continue;
      if (cur == max_id && next == min_id) ++wraps;
      else throw std::invalid_argument("arc numbering not consecutive along component");
    }
    if (wraps != 1) throw std::invalid_argument("arc numbering not consecutive along component");

    for (const auto& p : comp.passes) {
      if (p.in_slot == 2)
        throw std::invalid_argument("under-strand enters the outgoing slot");
      if (p.in_slot == 1 || p.in_slot == 3) an.over_in[static_cast<size_t>(p.k)] = p.in_slot;
    }
    an.comps.push_back(std::move(comp));
  }

  for (size_t k = 0; k < pd.crossings.size(); ++k)
    if (an.over_in[k] == 0)
      throw std::invalid_argument("crossing not traversed");  // unreachable for valid input
  return an;
}

uint64_t count_states_worker(const PDCode& pd, const ArcIndex& ai, uint64_t begin, uint64_t end,
                             std::vector<std::vector<uint64_t>>& counts) {
  const size_t c = pd.crossings.size();
  Dsu dsu(ai.ids.size());
  for (uint64_t state = begin; state < end; ++state) {
    std::iota(dsu.parent.begin(), dsu.parent.end(), 0);
    int nb = 0;
    for (size_t k = 0; k < c; ++k) {
      const auto& t = pd.crossings[k];
      bool b_smoothing = (state >> k) & 1u;
      nb += b_smoothing;
      // A joins {slot0, slot1} and {slot2, slot3}; B joins {slot0, slot3} and {slot1, slot2}
      if (!b_smoothing) {
        dsu.unite(ai.dense.at(t[0]), ai.dense.at(t[1]));
        dsu.unite(ai.dense.at(t[2]), ai.dense.at(t[3]));
      } else {
        dsu.unite(ai.dense.at(t[0]), ai.dense.at(t[3]));
        dsu.unite(ai.dense.at(t[1]), ai.dense.at(t[2]));
      }
    }
    int loops = 0;
    for (size_t a = 0; a < ai.ids.size(); ++a)
      if (dsu.find(static_cast<int>(a)) == static_cast<int>(a)) ++loops;
    ++counts[static_cast<size_t>(nb)][static_cast<size_t>(loops)];
  }
  return end - begin;
}

}  // namespace

DiagramInfo::DiagramInfo(const PDCode& pd) {
  Analysis an = analyze(pd);
  components = static_cast<int>(an.comps.size());
  over_in_slot = an.over_in;
  for (const auto& comp : an.comps) {
    int lo = an.ai.ids[static_cast<size_t>(comp.arcs[0])], hi = lo;
    for (int a : comp.arcs) {
      lo = std::min(lo, an.ai.ids[static_cast<size_t>(a)]);
      hi = std::max(hi, an.ai.ids[static_cast<size_t>(a)]);
    }
    component_ranges.emplace_back(lo, hi);
  }
}

int crossing_sign(const PDCode& pd, int k) {
  if (k < 0 || static_cast<size_t>(k) >= pd.crossings.size())
    throw std::out_of_range("crossing index out of range");
  DiagramInfo info(pd);
  return info.over_in_slot[static_cast<size_t>(k)] == 3 ? 1 : -1;
}

int diagram_writhe(const PDCode& pd) {
  if (pd.crossings.empty()) return 0;
  DiagramInfo info(pd);
  int w = 0;
  for (int s : info.over_in_slot) w += (s == 3) ? 1 : -1;
  return w;
}

int component_count(const PDCode& pd) {
  if (pd.crossings.empty()) {
    if (pd.free_circles < 1) throw std::invalid_argument("diagram has no components");
    return pd.free_circles;
  }
  DiagramInfo info(pd);
  return info.components + pd.free_circles;
}

int resolve_state(const PDCode& pd, const std::vector<Smoothing>& state) {
  if (state.size() != pd.crossings.size())
    throw std::invalid_argument("state must choose a smoothing per crossing");
  ArcIndex ai = index_arcs(pd.crossings);
  Dsu dsu(ai.ids.size());
  for (size_t k = 0; k < pd.crossings.size(); ++k) {
    const auto& t = pd.crossings[k];
    if (state[k] == Smoothing::A) {
      dsu.unite(ai.dense.at(t[0]), ai.dense.at(t[1]));
      dsu.unite(ai.dense.at(t[2]), ai.dense.at(t[3]));
    } else {
      dsu.unite(ai.dense.at(t[0]), ai.dense.at(t[3]));
      dsu.unite(ai.dense.at(t[1]), ai.dense.at(t[2]));
    }
  }
  int loops = 0;
  for (size_t a = 0; a < ai.ids.size(); ++a)
    if (dsu.find(static_cast<int>(a)) == static_cast<int>(a)) ++loops;
  return loops + pd.free_circles;
}

LaurentPoly kauffman_bracket(const PDCode& pd, int crossing_limit) {
  const size_t c = pd.crossings.size();
  if (c == 0 && pd.free_circles < 1)
    throw std::invalid_argument("diagram has no components");
  if (static_cast<int>(c) > crossing_limit)
    throw std::length_error("crossing count " + std::to_string(c) + " exceeds limit " +
                            std::to_string(crossing_limit));
  if (c == 0) return LaurentPoly::loop_weight_pow(pd.free_circles - 1);

  ArcIndex ai = index_arcs(pd.crossings);
  const size_t max_loops = ai.ids.size();  // each state loop uses at least one arc
  auto make_counts = [&] {
    return std::vector<std::vector<uint64_t>>(c + 1, std::vector<uint64_t>(max_loops + 1, 0));
  };
  auto counts = make_counts();

  const uint64_t total = uint64_t{1} << c;
  unsigned hw = std::thread::hardware_concurrency();
  if (c >= 16 && hw > 1) {
    unsigned nt = std::min<unsigned>(hw, 8);
    std::vector<std::vector<std::vector<uint64_t>>> partial(nt, make_counts());
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nt; ++t) {
      uint64_t lo = total * t / nt, hi = total * (t + 1) / nt;
      pool.emplace_back(count_states_worker, std::cref(pd), std::cref(ai), lo, hi,
                        std::ref(partial[t]));
    }
    for (auto& th : pool) th.join();
    for (const auto& p : partial)
      for (size_t i = 0; i <= c; ++i)
        for (size_t l = 0; l <= max_loops; ++l) counts[i][l] += p[i][l];
  } else {
    count_states_worker(pd, ai, 0, total, counts);
  }

  LaurentPoly bracket;
  for (size_t nb = 0; nb <= c; ++nb) {
    long alpha = static_cast<long>(c) - 2 * static_cast<long>(nb);
    for (size_t loops = 1; loops <= max_loops; ++loops) {
      uint64_t cnt = counts[nb][loops];
      if (cnt == 0) continue;
      long total_loops = static_cast<long>(loops) + pd.free_circles;
      bracket += LaurentPoly::monomial(Int(static_cast<unsigned long>(cnt)), alpha) *
                 LaurentPoly::loop_weight_pow(total_loops - 1);
    }
  }
  return bracket;
}

int seifert_circles(const PDCode& pd) {
  if (pd.crossings.empty()) {
    if (pd.free_circles < 1) throw std::invalid_argument("diagram has no components");
    return pd.free_circles;
  }
  DiagramInfo info(pd);
  ArcIndex ai = index_arcs(pd.crossings);
  Dsu dsu(ai.ids.size());
  for (size_t k = 0; k < pd.crossings.size(); ++k) {
    const auto& t = pd.crossings[k];
    int oin = info.over_in_slot[k], oout = across(oin);
    // join each incoming strand to the outgoing strand on its side
    dsu.unite(ai.dense.at(t[0]), ai.dense.at(t[static_cast<size_t>(oout)]));
    dsu.unite(ai.dense.at(t[static_cast<size_t>(oin)]), ai.dense.at(t[2]));
  }
  int circles = 0;
  for (size_t a = 0; a < ai.ids.size(); ++a)
    if (dsu.find(static_cast<int>(a)) == static_cast<int>(a)) ++circles;
  return circles + pd.free_circles;
}

namespace {

std::array<int, 4> rotate_tuple(const std::array<int, 4>& t, int r) {
  std::array<int, 4> out;
  for (int i = 0; i < 4; ++i) out[static_cast<size_t>(i)] = t[static_cast<size_t>((i + r) % 4)];
  return out;
}

PDCode switch_crossing(PDCode pd, int k, int current_over_in) {
  // Swapping over/under makes the old over-in ray the new incoming under.
  auto& t = pd.crossings[static_cast<size_t>(k)];
  t = rotate_tuple(t, current_over_in);
  return pd;
}

}  // namespace

SkeinTriple skein_triple(const PDCode& pd, int k) {
  if (k < 0 || static_cast<size_t>(k) >= pd.crossings.size())
    throw std::out_of_range("crossing index out of range");
  Analysis an = analyze(pd);
  int oin = an.over_in[static_cast<size_t>(k)];
  int sign = (oin == 3) ? 1 : -1;

  SkeinTriple triple;
  triple.l_plus = (sign > 0) ? pd : switch_crossing(pd, k, oin);
  triple.l_minus = (sign < 0) ? pd : switch_crossing(pd, k, oin);

  RebuildSpec spec;
  for (size_t j = 0; j < pd.crossings.size(); ++j) {
    if (static_cast<int>(j) == k) continue;
    spec.tuples.push_back(pd.crossings[j]);
    spec.enter_over.push_back(an.over_in[j]);
  }
  const auto& t = pd.crossings[static_cast<size_t>(k)];
  int oout = across(oin);
  spec.merges.emplace_back(t[0], t[static_cast<size_t>(oout)]);
  spec.merges.emplace_back(t[static_cast<size_t>(oin)], t[2]);
  spec.oriented = true;
  spec.free_circles = pd.free_circles;
  triple.l_zero = rebuild_pd(spec);
  return triple;
}

PDCode mirror(const PDCode& pd) {
  if (pd.crossings.empty()) return pd;
  Analysis an = analyze(pd);
  PDCode out = pd;
  for (size_t k = 0; k < pd.crossings.size(); ++k)
    out.crossings[k] = rotate_tuple(pd.crossings[k], an.over_in[k]);
  return out;
}

PDCode reverse_orientation(const PDCode& pd) {
  if (pd.crossings.empty()) return pd;
  Analysis an = analyze(pd);
  RebuildSpec spec;
  spec.tuples = pd.crossings;
  for (size_t k = 0; k < pd.crossings.size(); ++k)
    spec.enter_over.push_back(across(an.over_in[k]));
  spec.oriented = true;
  spec.enter_under = 2;
  spec.free_circles = pd.free_circles;
  return rebuild_pd(spec);
}

PDCode smooth_crossing(const PDCode& pd, int k, Smoothing s) {
  if (k < 0 || static_cast<size_t>(k) >= pd.crossings.size())
    throw std::out_of_range("crossing index out of range");
  index_arcs(pd.crossings);  // validate
  RebuildSpec spec;
  for (size_t j = 0; j < pd.crossings.size(); ++j)
    if (static_cast<int>(j) != k) spec.tuples.push_back(pd.crossings[j]);
  const auto& t = pd.crossings[static_cast<size_t>(k)];
  if (s == Smoothing::A) {
    spec.merges.emplace_back(t[0], t[1]);
    spec.merges.emplace_back(t[2], t[3]);
  } else {
    spec.merges.emplace_back(t[0], t[3]);
    spec.merges.emplace_back(t[1], t[2]);
  }
  spec.oriented = false;
  spec.free_circles = pd.free_circles;
  return rebuild_pd(spec);
}

PDCode with_free_circles(PDCode pd, int m) {
  if (m < 0) throw std::invalid_argument("negative circle count");
  pd.free_circles += m;
  return pd;
}

PDCode rebuild_pd(const RebuildSpec& spec) {
  // index old ids over the remaining tuples
  std::map<int, int> dense;
  std::vector<int> ids;
  for (const auto& t : spec.tuples)
    for (int s = 0; s < 4; ++s) {
      if (t[static_cast<size_t>(s)] <= 0) throw std::invalid_argument("arc ids must be positive");
      if (dense.emplace(t[static_cast<size_t>(s)], static_cast<int>(ids.size())).second)
        ids.push_back(t[static_cast<size_t>(s)]);
    }
  for (const auto& [a, b] : spec.merges)
    for (int id : {a, b})
      if (dense.emplace(id, static_cast<int>(ids.size())).second) ids.push_back(id);

  Dsu dsu(ids.size());
  for (const auto& [a, b] : spec.merges) dsu.unite(dense.at(a), dense.at(b));

  // per class: occurrences in remaining tuples, and the smallest old id
  const size_t nclass = ids.size();
  std::vector<std::vector<std::pair<int, int>>> occs(nclass);
  std::vector<int> class_min(nclass, 0);
  for (size_t a = 0; a < ids.size(); ++a) {
    int root = dsu.find(static_cast<int>(a));
    int& m = class_min[static_cast<size_t>(root)];
    if (m == 0 || ids[a] < m) m = ids[a];
  }
  for (size_t k = 0; k < spec.tuples.size(); ++k)
    for (int s = 0; s < 4; ++s)
      occs[static_cast<size_t>(dsu.find(dense.at(spec.tuples[k][static_cast<size_t>(s)])))]
          .emplace_back(static_cast<int>(k), s);

  // visit classes by ascending smallest old id
  std::vector<int> roots;
  for (size_t a = 0; a < nclass; ++a)
    if (dsu.find(static_cast<int>(a)) == static_cast<int>(a)) roots.push_back(static_cast<int>(a));
  std::sort(roots.begin(), roots.end(),
            [&](int x, int y) { return class_min[static_cast<size_t>(x)] < class_min[static_cast<size_t>(y)]; });

  auto class_of = [&](int old_id) { return dsu.find(dense.at(old_id)); };
  auto is_entry = [&](int k, int s) {
    if (s == 0 || s == 2) return s == spec.enter_under;
    return s == spec.enter_over[static_cast<size_t>(k)];
  };

  std::vector<int> new_id(nclass, 0);
  std::vector<int> under_entry(spec.tuples.size(), -1);
  int next_id = 1;
  int extra_free = 0;

  for (int root : roots) {
    auto& olist = occs[static_cast<size_t>(root)];
    if (olist.empty()) {
      ++extra_free;  // merged into a closed circle with no remaining crossings
      continue;
    }
    if (new_id[static_cast<size_t>(root)] != 0) continue;
    std::sort(olist.begin(), olist.end());
    std::pair<int, int> start_occ = olist[0];
    if (spec.oriented) {
      start_occ = is_entry(olist[0].first, olist[0].second) ? olist[0] : olist[1];
      if (!is_entry(start_occ.first, start_occ.second))
        throw std::logic_error("rebuild: no entering occurrence");
    }
    int cls = root;
    std::pair<int, int> occ = start_occ;
    do {
      if (new_id[static_cast<size_t>(cls)] == 0) new_id[static_cast<size_t>(cls)] = next_id++;
      auto [k, s] = occ;
      if (spec.oriented && !is_entry(k, s))
        throw std::logic_error("rebuild: walk entered an exit slot");
      if (s == 0 || s == 2) under_entry[static_cast<size_t>(k)] = s;
      int out_slot = across(s);
      int out_cls = class_of(spec.tuples[static_cast<size_t>(k)][static_cast<size_t>(out_slot)]);
      const auto& oo = occs[static_cast<size_t>(out_cls)];
      std::pair<int, int> exit_occ{k, out_slot};
      if (oo.size() != 2) throw std::logic_error("rebuild: arc endpoint count");
      occ = (oo[0] == exit_occ) ? oo[1] : oo[0];
      cls = out_cls;
    } while (cls != root || occ != start_occ);
  }

  PDCode out;
  out.free_circles = spec.free_circles + extra_free;
  for (size_t k = 0; k < spec.tuples.size(); ++k) {
    int r = under_entry[k];
    if (r < 0) throw std::logic_error("rebuild: crossing not traversed");
    std::array<int, 4> rotated = rotate_tuple(spec.tuples[k], r);
    std::array<int, 4> fresh;
    for (int s = 0; s < 4; ++s)
      fresh[static_cast<size_t>(s)] = new_id[static_cast<size_t>(class_of(rotated[static_cast<size_t>(s)]))];
    out.crossings.push_back(fresh);
  }
  return out;
}

}  // namespace knotpoly

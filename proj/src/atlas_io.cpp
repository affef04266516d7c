#include "rootlet/atlas_io.hpp"

#include <sstream>
#include <stdexcept>

namespace rootlet {

using nlohmann::json;

namespace {

json root_json(const Root& g) { return json(g); }

Root root_from_json(const json& j, int rank) {
  if (!j.is_array() || static_cast<int>(j.size()) != rank)
    throw std::invalid_argument("root entry has the wrong length");
  Root g;
  for (const auto& c : j) g.push_back(c.get<int>());
  return g;
}

// The orthogonal group of the root lattice is finite; checking that v
// preserves the Gram matrix catches corrupted imports early.
bool preserves_form(const RootSystem& rs, const Mat& v) {
  for (int i = 0; i < rs.rank; ++i) {
    Root ei(rs.rank, 0), ej(rs.rank, 0);
    ei[i] = 1;
    Root vi = v.apply(ei);
    for (int j = 0; j < rs.rank; ++j) {
      ej.assign(rs.rank, 0);
      ej[j] = 1;
      if (rs.bilinear(vi, v.apply(ej)) != rs.bilin[i][j]) return false;
    }
  }
  return true;
}

}  // namespace

json root_system_json(const RootSystem& rs) {
  json j;
  j["type"] = rs.type.name();
  j["rank"] = rs.rank;
  json simples = json::array();
  for (int i = 0; i < rs.rank; ++i) simples.push_back(root_json(rs.simple(i)));
  j["simple_roots"] = simples;
  json positives = json::array();
  for (const Root& g : rs.positive) positives.push_back(root_json(g));
  j["positive_roots"] = positives;
  j["theta"] = root_json(rs.theta);
  j["h_set"] = json(rs.h_set);
  json longs = json::array();
  for (char f : rs.is_long) longs.push_back(static_cast<bool>(f));
  j["long_flags"] = longs;
  return j;
}

json affine_elt_json(const AffineElt& w) {
  json j;
  if (!w.word) throw std::invalid_argument("cannot serialise an element without a word");
  j["word"] = json(*w.word);
  json rows = json::array();
  for (const auto& row : w.v.a) rows.push_back(json(row));
  j["v_matrix"] = rows;
  j["r"] = json(w.r);
  return j;
}

AffineElt affine_elt_from_json(const RootSystem& rs, const json& j) {
  std::vector<int> word = j.at("word").get<std::vector<int>>();
  AffineElt w = from_word(rs, word);

  const json& rows = j.at("v_matrix");
  if (static_cast<int>(rows.size()) != rs.rank)
    throw std::invalid_argument("v_matrix has the wrong shape");
  for (int i = 0; i < rs.rank; ++i) {
    std::vector<int> row = rows.at(i).get<std::vector<int>>();
    if (row != w.v.a.at(i))
      throw std::invalid_argument("v_matrix does not match the word");
  }
  if (root_from_json(j.at("r"), rs.rank) != w.r)
    throw std::invalid_argument("translation part does not match the word");
  if (!preserves_form(rs, w.v)) throw std::invalid_argument("matrix breaks the bilinear form");
  if (!in_coroot_lattice(rs, w.r))
    throw std::invalid_argument("translation part is outside the coroot lattice");
  return w;
}

json atlas_json(const RootSystem& rs, const Atlas& atlas) {
  json j;
  j["root_system"] = root_system_json(rs);

  json ideals = json::array();
  for (std::size_t id = 0; id < atlas.ideals.size(); ++id) {
    const AbelianIdeal& ideal = atlas.ideals[id];
    json e;
    e["id"] = id;
    e["roots"] = json(ideal.roots.indices());
    if (ideal.rootlet_idx) e["rootlet"] = root_json(rs.positive[*ideal.rootlet_idx]);
    e["z"] = root_json(ideal.z);
    e["word"] = json(*ideal.w.word);
    ideals.push_back(e);
  }
  j["ideals"] = ideals;

  json fibers = json::array();
  for (const Fiber& f : atlas.fibers) {
    json e;
    e["mu"] = root_json(rs.positive[f.mu_idx]);
    e["ideals"] = json(f.members);
    e["min"] = f.min_id;
    e["max"] = f.max_id;
    fibers.push_back(e);
  }
  j["fibers"] = fibers;
  return j;
}

Atlas atlas_from_json(const RootSystem& rs, const json& j) {
  if (j.at("root_system") != root_system_json(rs))
    throw std::invalid_argument("atlas belongs to a different root system");

  Atlas atlas;
  const json& ideals = j.at("ideals");
  for (std::size_t id = 0; id < ideals.size(); ++id) {
    const json& e = ideals.at(id);
    if (e.at("id").get<std::size_t>() != id)
      throw std::invalid_argument("ideal ids are not consecutive");
    AbelianIdeal ideal;
    ideal.roots = RootSet::of(e.at("roots").get<std::vector<int>>());
    ideal.w = from_word(rs, e.at("word").get<std::vector<int>>());
    ideal.z = root_from_json(e.at("z"), rs.rank);
    if (ideal.z != z_of(rs, ideal.w))
      throw std::invalid_argument("stored z does not match the word");
    if (!is_minuscule(rs, ideal.w))
      throw std::invalid_argument("stored word is not minuscule");
    RootSet from_word_set;
    for (int g : delta_one_inversions(rs, ideal.w).level_one) from_word_set.set(g);
    if (!(from_word_set == ideal.roots))
      throw std::invalid_argument("stored roots do not match the word's inversions");
    if (e.contains("rootlet")) {
      int idx = rs.index_if_positive(root_from_json(e.at("rootlet"), rs.rank));
      if (idx < 0 || idx != rs.index_if_positive(rootlet_of(rs, ideal.w)))
        throw std::invalid_argument("stored rootlet does not match the word");
      ideal.rootlet_idx = idx;
    } else if (!ideal.roots.empty()) {
      throw std::invalid_argument("nonzero ideal without a rootlet");
    }
    int this_id = static_cast<int>(atlas.ideals.size());
    if (!atlas.id_of.emplace(ideal.roots, this_id).second)
      throw std::invalid_argument("duplicate ideal in the atlas");
    atlas.ideals.push_back(std::move(ideal));
  }
  if (atlas.ideals.empty() || !atlas.ideals[0].roots.empty())
    throw std::invalid_argument("the zero ideal must come first");
  atlas.empty_id = 0;

  const json& fibers = j.at("fibers");
  for (const json& e : fibers) {
    Fiber f;
    f.mu_idx = rs.index_if_positive(root_from_json(e.at("mu"), rs.rank));
    if (f.mu_idx < 0) throw std::invalid_argument("fiber over a non-root");
    f.members = e.at("ideals").get<std::vector<int>>();
    f.min_id = e.at("min").get<int>();
    f.max_id = e.at("max").get<int>();
    for (int id : f.members) {
      if (id < 0 || id >= static_cast<int>(atlas.ideals.size()))
        throw std::invalid_argument("fiber member out of range");
      if (!atlas.ideals[id].rootlet_idx || *atlas.ideals[id].rootlet_idx != f.mu_idx)
        throw std::invalid_argument("fiber member with a different rootlet");
    }
    atlas.fiber_pos.emplace(f.mu_idx, static_cast<int>(atlas.fibers.size()));
    atlas.fibers.push_back(std::move(f));
  }

  for (int id = 1; id < static_cast<int>(atlas.ideals.size()); ++id) {
    bool maximal = true;
    for (int other = 1; other < static_cast<int>(atlas.ideals.size()); ++other) {
      if (other != id && atlas.ideals[id].roots.subset_of(atlas.ideals[other].roots)) {
        maximal = false;
        break;
      }
    }
    if (maximal) atlas.maximal.push_back(id);
  }
  return atlas;
}

bool atlas_equal(const Atlas& a, const Atlas& b) {
  if (a.ideals.size() != b.ideals.size() || a.fibers.size() != b.fibers.size()) return false;
  for (std::size_t i = 0; i < a.ideals.size(); ++i) {
    const AbelianIdeal &x = a.ideals[i], &y = b.ideals[i];
    if (!(x.roots == y.roots) || !x.w.same_as(y.w) || x.w.word != y.w.word ||
        x.rootlet_idx != y.rootlet_idx || x.z != y.z)
      return false;
  }
  for (std::size_t i = 0; i < a.fibers.size(); ++i) {
    const Fiber &x = a.fibers[i], &y = b.fibers[i];
    if (x.mu_idx != y.mu_idx || x.members != y.members || x.min_id != y.min_id ||
        x.max_id != y.max_id)
      return false;
  }
  return a.maximal == b.maximal && a.empty_id == b.empty_id;
}

std::string hasse_dot(const RootSystem& rs, const Atlas& atlas) {
  std::ostringstream os;
  os << "digraph ideals {\n  rankdir=BT;\n  node [shape=box, fontname=\"monospace\"];\n";
  os << "  i0 [label=\"0: {}\"];\n";

  for (const Fiber& f : atlas.fibers) {
    os << "  subgraph cluster_mu_" << f.mu_idx << " {\n";
    os << "    label=\"mu " << rs.digit_string(rs.positive[f.mu_idx], Numbering::bourbaki)
       << "\";\n";
    for (int id : f.members) {
      const AbelianIdeal& ideal = atlas.ideals[id];
      os << "    i" << id << " [label=\"" << id << ": " << ideal.roots.count()
         << (ideal.roots.count() == 1 ? " root" : " roots") << "\"];\n";
    }
    os << "  }\n";
  }

  // covering relations: the poset is graded by size, so covers add one root
  for (std::size_t lo = 0; lo < atlas.ideals.size(); ++lo) {
    for (std::size_t hi = 0; hi < atlas.ideals.size(); ++hi) {
      const RootSet &a = atlas.ideals[lo].roots, &b = atlas.ideals[hi].roots;
      if (b.count() == a.count() + 1 && a.subset_of(b))
        os << "  i" << lo << " -> i" << hi << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

json fibers_json(const RootSystem& rs, const Atlas& atlas) {
  json j;
  j["type"] = rs.type.name();
  j["fibers"] = atlas_json(rs, atlas).at("fibers");
  return j;
}

std::string fibers_markdown(const RootSystem& rs, const Atlas& atlas, Numbering nb) {
  std::ostringstream os;
  os << "| mu | size | min | max | members |\n|---|---|---|---|---|\n";
  for (const Fiber& f : atlas.fibers) {
    os << "| " << rs.digit_string(rs.positive[f.mu_idx], nb) << " | " << f.members.size()
       << " | " << f.min_id << " | " << f.max_id << " | ";
    for (std::size_t i = 0; i < f.members.size(); ++i)
      os << (i ? " " : "") << f.members[i];
    os << " |\n";
  }
  return os.str();
}

std::string fibers_csv(const RootSystem& rs, const Atlas& atlas, Numbering nb) {
  std::ostringstream os;
  os << "mu,size,min,max,members\n";
  for (const Fiber& f : atlas.fibers) {
    os << rs.digit_string(rs.positive[f.mu_idx], nb) << "," << f.members.size() << ","
       << f.min_id << "," << f.max_id << ",";
    for (std::size_t i = 0; i < f.members.size(); ++i)
      os << (i ? " " : "") << f.members[i];
    os << "\n";
  }
  return os.str();
}

}  // namespace rootlet

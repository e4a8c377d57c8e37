#include "fcs/sampler.hpp"

#include <algorithm>
#include <fstream>
#include <unordered_map>
#include <unordered_set>

namespace fcs {

namespace {

// key = (min, max, layer) packed; ids fit in 31 bits
std::uint64_t link_key(NodeId u, NodeId v, Layer layer) {
  auto lo = static_cast<std::uint64_t>(std::min(u, v));
  auto hi = static_cast<std::uint64_t>(std::max(u, v));
  return (hi << 33) | (lo << 1) | static_cast<std::uint64_t>(layer);
}

}  // namespace

void SamplingConfig::validate() const {
  if (!(q > 0.0) || q > 1.0)
    raise(Errc::bad_config, "sampling probability q must be in (0, 1]");
  if (budget < 1) raise(Errc::bad_config, "fixed-choice budget must be >= 1");
}

ObservedNetwork ObservedNetwork::from_parts(Count source_node_count, int budget,
                                            std::vector<NodeId> seeds,
                                            std::vector<NamedLink> links) {
  ObservedNetwork obs;
  std::sort(seeds.begin(), seeds.end());
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());

  NodeId max_id = -1;
  for (NodeId s : seeds) max_id = std::max(max_id, s);
  for (auto& l : links) {
    if (l.u > l.v) {
      std::swap(l.u, l.v);
      std::swap(l.named_by_u, l.named_by_v);
    }
    max_id = std::max(max_id, l.v);
  }
  obs.source_node_count_ =
      std::max(source_node_count, static_cast<Count>(max_id) + 1);
  obs.budget_ = budget;
  obs.seeds_ = std::move(seeds);

  std::sort(links.begin(), links.end(), [](const NamedLink& a, const NamedLink& b) {
    if (a.u != b.u) return a.u < b.u;
    if (a.v != b.v) return a.v < b.v;
    return a.layer < b.layer;
  });

  std::unordered_set<NodeId> strong_alters, weak_alters;
  auto is_seed = [&](NodeId x) {
    return std::binary_search(obs.seeds_.begin(), obs.seeds_.end(), x);
  };
  for (const auto& l : links) {
    if (!l.named_by_u && !l.named_by_v)
      raise(Errc::bad_config, "observed link with empty naming set");
    if (l.u == l.v) raise(Errc::self_loop, "observed self loop");
    bool su = is_seed(l.u), sv = is_seed(l.v);
    if (!su && !sv)
      raise(Errc::bad_config, "observed link with no seed endpoint");
    if ((l.named_by_u && !su) || (l.named_by_v && !sv))
      raise(Errc::bad_config, "naming event from a non-seed");
    auto& alters = l.layer == Layer::strong ? strong_alters : weak_alters;
    if (!su) alters.insert(l.u);
    if (!sv) alters.insert(l.v);
  }
  obs.links_ = std::move(links);
  obs.strong_alters_.assign(strong_alters.begin(), strong_alters.end());
  obs.weak_alters_.assign(weak_alters.begin(), weak_alters.end());
  std::sort(obs.strong_alters_.begin(), obs.strong_alters_.end());
  std::sort(obs.weak_alters_.begin(), obs.weak_alters_.end());
  return obs;
}

bool ObservedNetwork::is_seed(NodeId x) const {
  return std::binary_search(seeds_.begin(), seeds_.end(), x);
}

Observables ObservedNetwork::observables() const {
  Observables o;
  o.n0 = static_cast<Count>(seeds_.size());
  o.n1s = static_cast<Count>(strong_alters_.size());
  o.n1w = static_cast<Count>(weak_alters_.size());
  for (const auto& l : links_) {
    bool both = is_seed(l.u) && is_seed(l.v);
    if (l.layer == Layer::strong)
      ++(both ? o.m0s : o.m1s);
    else
      ++(both ? o.m0w : o.m1w);
  }
  return o;
}

ObservedNetwork ObservedNetwork::remove_respondent(NodeId r) const {
  if (!is_seed(r))
    raise(Errc::not_a_seed, "node " + std::to_string(r) + " is not a seed");
  std::vector<NodeId> seeds;
  seeds.reserve(seeds_.size() - 1);
  for (NodeId s : seeds_)
    if (s != r) seeds.push_back(s);
  std::vector<NamedLink> links;
  links.reserve(links_.size());
  for (NamedLink l : links_) {
    if (l.u == r) l.named_by_u = false;
    if (l.v == r) l.named_by_v = false;
    if (l.named_by_u || l.named_by_v) links.push_back(l);
  }
  return from_parts(source_node_count_, budget_, std::move(seeds), std::move(links));
}

TwoLayerGraph ObservedNetwork::as_two_layer_graph() const {
  std::vector<std::pair<NodeId, NodeId>> strong, weak;
  for (const auto& l : links_)
    (l.layer == Layer::strong ? strong : weak).emplace_back(l.u, l.v);
  return TwoLayerGraph::from_edges(source_node_count_, strong, weak);
}

ObservedNetwork conduct_survey(const TwoLayerGraph& g,
                               const SamplingConfig& config, Rng& rng) {
  config.validate();
  Count n = g.node_count();
  if (config.insufficient_weak_policy == InsufficientWeakPolicy::error) {
    for (Count i = 0; i < n; ++i) {
      if (g.degree(static_cast<NodeId>(i), Layer::weak) < config.budget)
        raise(Errc::insufficient_weak_ties,
              "node " + std::to_string(i) + " has fewer than " +
                  std::to_string(config.budget) + " weak ties");
    }
  }

  std::vector<NodeId> seeds;
  for (Count i = 0; i < n; ++i)
    if (rng.bernoulli(config.q)) seeds.push_back(static_cast<NodeId>(i));
  if (seeds.empty())
    raise(Errc::degenerate_sample, "survey drew zero seeds");

  // naming events keyed by canonical (pair, layer)
  std::unordered_map<std::uint64_t, NamedLink> links;
  links.reserve(seeds.size() * static_cast<std::size_t>(config.budget + 4));
  auto name = [&](NodeId from, NodeId to, Layer layer) {
    auto key = link_key(from, to, layer);
    auto [it, inserted] = links.try_emplace(key);
    NamedLink& l = it->second;
    if (inserted) {
      l.u = std::min(from, to);
      l.v = std::max(from, to);
      l.layer = layer;
    }
    (from < to ? l.named_by_u : l.named_by_v) = true;
  };

  std::vector<NodeId> scratch;
  for (NodeId s : seeds) {
    for (NodeId j : g.neighbors(s, Layer::strong)) name(s, j, Layer::strong);
    auto weak = g.neighbors(s, Layer::weak);
    Count kw = static_cast<Count>(weak.size());
    if (kw <= config.budget) {
      for (NodeId j : weak) name(s, j, Layer::weak);
      continue;
    }
    // uniform budget-subset without replacement (partial Fisher-Yates)
    scratch.assign(weak.begin(), weak.end());
    for (int t = 0; t < config.budget; ++t) {
      std::size_t pick =
          static_cast<std::size_t>(t) +
          static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(kw - t)));
      std::swap(scratch[static_cast<std::size_t>(t)], scratch[pick]);
      name(s, scratch[static_cast<std::size_t>(t)], Layer::weak);
    }
  }

  std::vector<NamedLink> link_list;
  link_list.reserve(links.size());
  for (auto& [key, l] : links) link_list.push_back(l);
  return ObservedNetwork::from_parts(n, config.budget, std::move(seeds),
                                     std::move(link_list));
}

// --- survey interchange format -------------------------------------------

nlohmann::json survey_to_json(const ObservedNetwork& obs) {
  std::unordered_map<NodeId, std::vector<NodeId>> strong, weak;
  for (const auto& l : obs.links()) {
    auto& by = l.layer == Layer::strong ? strong : weak;
    if (l.named_by_u) by[l.u].push_back(l.v);
    if (l.named_by_v) by[l.v].push_back(l.u);
  }
  nlohmann::json respondents = nlohmann::json::array();
  for (NodeId s : obs.seeds()) {
    auto& st = strong[s];
    auto& wk = weak[s];
    std::sort(st.begin(), st.end());
    std::sort(wk.begin(), wk.end());
    respondents.push_back({{"id", s}, {"strong", st}, {"weak", wk}});
  }
  return {{"B", obs.budget()}, {"respondents", respondents}};
}

ObservedNetwork survey_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("B") || !doc.contains("respondents"))
    raise(Errc::parse_error, "survey document needs 'B' and 'respondents'");
  if (!doc["B"].is_number_integer() || doc["B"].get<long long>() < 1)
    raise(Errc::parse_error, "survey 'B' must be a positive integer");
  int budget = doc["B"].get<int>();

  std::vector<NodeId> seeds;
  struct Naming {
    NodeId from, to;
    Layer layer;
  };
  std::vector<Naming> namings;
  for (const auto& resp : doc["respondents"]) {
    if (!resp.contains("id") || !resp["id"].is_number_integer())
      raise(Errc::parse_error, "respondent without integer 'id'");
    long long id = resp["id"].get<long long>();
    if (id < 0) raise(Errc::parse_error, "negative respondent id");
    NodeId rid = static_cast<NodeId>(id);
    seeds.push_back(rid);
    for (auto [field, layer] :
         {std::pair{"strong", Layer::strong}, std::pair{"weak", Layer::weak}}) {
      if (!resp.contains(field)) continue;
      for (const auto& t : resp[field]) {
        if (!t.is_number_integer() || t.get<long long>() < 0)
          raise(Errc::parse_error, "alter ids must be nonnegative integers");
        NodeId to = static_cast<NodeId>(t.get<long long>());
        if (to == rid)
          raise(Errc::parse_error,
                "respondent " + std::to_string(rid) + " names itself");
        namings.push_back({rid, to, layer});
      }
    }
  }
  std::vector<NodeId> sorted_seeds = seeds;
  std::sort(sorted_seeds.begin(), sorted_seeds.end());
  if (std::adjacent_find(sorted_seeds.begin(), sorted_seeds.end()) !=
      sorted_seeds.end())
    raise(Errc::parse_error, "duplicate respondent id");
  auto is_respondent = [&](NodeId x) {
    return std::binary_search(sorted_seeds.begin(), sorted_seeds.end(), x);
  };

  std::unordered_map<std::uint64_t, NamedLink> links;
  for (const auto& ev : namings) {
    auto other = ev.layer == Layer::strong ? Layer::weak : Layer::strong;
    if (links.count(link_key(ev.from, ev.to, other)))
      raise(Errc::layer_conflict,
            "pair (" + std::to_string(ev.from) + ", " + std::to_string(ev.to) +
                ") named as both strong and weak");
    auto [it, inserted] = links.try_emplace(link_key(ev.from, ev.to, ev.layer));
    NamedLink& l = it->second;
    if (inserted) {
      l.u = std::min(ev.from, ev.to);
      l.v = std::max(ev.from, ev.to);
      l.layer = ev.layer;
    }
    (ev.from < ev.to ? l.named_by_u : l.named_by_v) = true;
  }
  // strong ties are reported by both linked respondents even if the file
  // declares only one direction
  for (auto& [key, l] : links) {
    if (l.layer == Layer::strong && is_respondent(l.u) && is_respondent(l.v)) {
      l.named_by_u = true;
      l.named_by_v = true;
    }
  }
  std::vector<NamedLink> link_list;
  link_list.reserve(links.size());
  for (auto& [key, l] : links) link_list.push_back(l);
  return ObservedNetwork::from_parts(0, budget, std::move(seeds),
                                     std::move(link_list));
}

ObservedNetwork load_survey_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(Errc::io_error, "cannot open " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    raise(Errc::parse_error, std::string("survey json: ") + e.what());
  }
  return survey_from_json(doc);
}

void save_survey_file(const ObservedNetwork& obs, const std::string& path) {
  std::ofstream out(path);
  if (!out) raise(Errc::io_error, "cannot open " + path);
  out << survey_to_json(obs).dump(2) << "\n";
}

}  // namespace fcs

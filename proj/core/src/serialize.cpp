#include "dilink/serialize.hpp"

#include <json.hpp>

#include "dilink/error.hpp"

namespace dilink {

namespace {

using nlohmann::json;

json sub_json(const HSubdivision& sub) {
  json arcs = json::array();
  for (const Arc& a : sub.pattern.arc_order) arcs.push_back({a.tail, a.head});
  json branch = json::object();
  for (std::size_t a = 0; a < sub.branch.size(); ++a) branch[std::to_string(a)] = sub.branch[a];
  return {{"pattern", {{"n", sub.pattern.vertex_count()}, {"arcs", arcs}}},
          {"branch", branch},
          {"paths", sub.paths},
          {"lengths", path_lengths(sub)},
          {"order", subdivision_order(sub)}};
}

json ladder_json(const Ladder& l) {
  json conn = json::object();
  for (const auto& [i, q] : l.connectors) conn[std::to_string(i)] = q;
  return {{"k", l.k}, {"lower", l.lower}, {"upper", l.upper}, {"connectors", conn}};
}

json cover_json(const CoverPairSet& k) {
  json out = json::array();
  for (const OrderedPair& p : k.pairs) out.push_back({p.u, p.v});
  return out;
}

json ladders_json(const std::vector<Ladder>& ls) {
  json out = json::array();
  for (const Ladder& l : ls) out.push_back(ladder_json(l));
  return out;
}

template <typename F>
auto parsing(F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  } catch (const std::out_of_range& e) {
    throw Error(ErrorCode::ParseError, e.what());
  } catch (const std::invalid_argument& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

}  // namespace

std::string to_json(const HSubdivision& sub) { return sub_json(sub).dump(); }
std::string to_json(const Ladder& l) { return ladder_json(l).dump(); }
std::string to_json(const CoverPairSet& k) { return cover_json(k).dump(); }

std::string to_json(const AbsorberTypeI& a) {
  return json{{"type", "I"},
              {"K", cover_json(a.cover)},
              {"ladders", ladders_json(a.ladders)},
              {"hosts", json::array({sub_json(a.host)})},
              {"embedding", a.embedding},
              {"d", a.d}}
      .dump();
}

std::string to_json(const AbsorberTypeII& a) {
  json hosts = json::array(), embedding = json::array();
  for (const HSubdivision& h : a.hosts) hosts.push_back(sub_json(h));
  for (const LadderPlacement& p : a.embedding) embedding.push_back({p.host, p.arc});
  return json{{"type", "II"},
              {"K", cover_json(a.cover)},
              {"ladders", ladders_json(a.ladders)},
              {"hosts", hosts},
              {"embedding", embedding},
              {"d", a.d}}
      .dump();
}

std::string tiling_to_json(std::span<const HSubdivision> subs) {
  json all = json::array(), orders = json::array();
  for (const HSubdivision& s : subs) {
    all.push_back(sub_json(s));
    orders.push_back(subdivision_order(s));
  }
  return json{{"subdivisions", all}, {"orders", orders}}.dump();
}

HSubdivision subdivision_from_json(const std::string& text) {
  return parsing([&] {
    const json j = json::parse(text);
    const int n = j.at("pattern").at("n").get<int>();
    std::vector<Arc> arcs;
    for (const auto& a : j.at("pattern").at("arcs")) arcs.push_back({a.at(0).get<Vertex>(), a.at(1).get<Vertex>()});
    HSubdivision sub;
    sub.pattern = make_pattern(build_digraph(n, arcs));
    sub.branch.assign(static_cast<std::size_t>(n), -1);
    for (const auto& [key, v] : j.at("branch").items()) sub.branch.at(std::stoul(key)) = v.get<Vertex>();
    sub.paths = j.at("paths").get<std::vector<Path>>();
    return sub;
  });
}

Ladder ladder_from_json(const std::string& text) {
  return parsing([&] {
    const json j = json::parse(text);
    Ladder l;
    l.k = j.at("k").get<int>();
    l.lower = j.at("lower").get<std::vector<Vertex>>();
    l.upper = j.at("upper").get<std::vector<Vertex>>();
    for (const auto& [key, q] : j.at("connectors").items()) l.connectors[std::stoi(key)] = q.get<Path>();
    return l;
  });
}

}  // namespace dilink

#include "report_json.hpp"

namespace legfront::cli {

using nlohmann::ordered_json;

ordered_json report_header(const std::string& kind) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = kind;
  return j;
}

ordered_json to_json(const InvariantReport& r) {
  ordered_json j;
  ordered_json comps = ordered_json::array();
  for (std::size_t k = 0; k < r.components.size(); ++k) {
    const ComponentInvariants& c = r.components[k];
    comps.push_back({{"index", k},
                     {"writhe", c.writhe},
                     {"right_cusps", c.right_cusps},
                     {"down_cusps", c.down_cusps},
                     {"up_cusps", c.up_cusps},
                     {"tb", c.tb},
                     {"rot", c.rot}});
  }
  j["components"] = std::move(comps);
  ordered_json links = ordered_json::array();
  for (std::size_t a = 0; a < r.linking.size(); ++a) {
    for (std::size_t b = a + 1; b < r.linking.size(); ++b) {
      links.push_back({{"a", a}, {"b", b}, {"lk", r.linking[a][b]}});
    }
  }
  j["linking"] = std::move(links);
  return j;
}

ordered_json to_json(const MoveInstance& m) {
  return {{"kind", to_string(m.kind)},
          {"site", m.site},
          {"variant", m.variant},
          {"strand", m.strand},
          {"direction", m.direction == MoveDirection::Apply ? "apply" : "undo"}};
}

ordered_json to_json(const GenusBound& g, std::size_t component) {
  return {{"component", component},
          {"framing", g.framing},
          {"tb", g.tb},
          {"rot", g.rot},
          // -chi(F) = 2g - 1 >= (tb - f) + |rot|
          {"rhs", g.tb - g.framing + (g.rot < 0 ? -g.rot : g.rot)},
          {"bound", g.bound},
          {"slice_verdict", to_string(g.slice_verdict)}};
}

ordered_json to_json(const SliceCertificate& c) {
  return {{"verdict", to_string(c.verdict)},
          {"tb", c.tb},
          {"rot", c.rot},
          {"lhs", c.lhs},
          {"rhs", c.rhs}};
}

ordered_json to_json(const SteinReport& r) {
  ordered_json handles = ordered_json::array();
  for (const HandleReport& h : r.handles) {
    ordered_json sites = ordered_json::array();
    for (const MoveInstance& m : h.stabilization_sites) sites.push_back(to_json(m));
    handles.push_back({{"component", h.component},
                       {"framing", h.framing},
                       {"tb", h.tb},
                       {"threshold", h.tb - 1},
                       {"status", to_string(h.status)},
                       {"stabilizations", h.stabilizations},
                       {"deficit", h.deficit},
                       {"stabilization_sites", std::move(sites)}});
  }
  return {{"certified", r.certified}, {"handles", std::move(handles)}};
}

ordered_json invariants_report(const OrientedFront& of) {
  ordered_json j = report_header("invariants");
  j["events"] = of.diagram().size();
  j["component_count"] = of.component_count();
  j.update(to_json(invariant_report(of)));
  return j;
}

ordered_json pushoff_report(const PushOffResult& po) {
  const InvariantReport inv = invariant_report(po.front);
  ordered_json j = report_header("pushoff");
  j["framing"] = po.framing;
  j["original_index"] = po.original_index;
  j["companion_index"] = po.companion_index;
  j["lk"] = inv.linking[po.original_index][po.companion_index];
  j["tb_original"] = inv.components[po.original_index].tb;
  j["tb_companion"] = inv.components[po.companion_index].tb;
  j["stab_count"] = po.stab_count;
  j["kinks"] = po.kinks;
  j["cusp_twists"] = po.cusp_twists;
  j["positive_twists"] = po.positive_twists;
  j["events"] = po.front.diagram().size();
  j["invariants"] = to_json(inv);
  return j;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace legfront::cli

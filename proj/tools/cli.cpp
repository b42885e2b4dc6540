#include "cli.hpp"

#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "legfront/constructions.hpp"
#include "legfront/io.hpp"
#include "legfront/obstructions.hpp"
#include "legfront/oracles.hpp"
#include "legfront/render.hpp"
#include "report_json.hpp"

namespace legfront::cli {

namespace {

using nlohmann::ordered_json;

std::string word_of(const FrontDiagram& d) {
  std::string s = serialize_front(d);
  if (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

bool is_grid_text(const std::string& text) {
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    if (token.front() == '#') {
      std::string rest;
      std::getline(in, rest);
      continue;
    }
    return token == "grid";
  }
  return false;
}

// Front files are read as words; grid files are legendrianized on the way in.
OrientedFront load_front(const std::string& path) {
  const std::string text = read_text_file(path);
  if (is_grid_text(text)) return legendrianize(parse_grid(text));
  return orient(parse_front(text));
}

void print_invariants_text(std::ostream& out, const InvariantReport& r) {
  for (std::size_t k = 0; k < r.components.size(); ++k) {
    const ComponentInvariants& c = r.components[k];
    out << "component " << k << ": tb " << c.tb << ", rot " << c.rot << ", writhe "
        << c.writhe << ", right cusps " << c.right_cusps << ", down " << c.down_cusps
        << ", up " << c.up_cusps << '\n';
  }
  for (std::size_t a = 0; a < r.linking.size(); ++a) {
    for (std::size_t b = a + 1; b < r.linking.size(); ++b) {
      out << "lk(" << a << ", " << b << ") = " << r.linking[a][b] << '\n';
    }
  }
}

void emit_front(std::ostream& out, const std::string& output, const FrontDiagram& d) {
  if (output.empty()) {
    out << serialize_front(d);
  } else {
    write_text_file(output, serialize_front(d));
  }
}

struct Options {
  std::string file;
  std::string output;
  bool json = false;
  int framing = 0;
  std::size_t component = 0;
  int n = 1;
  std::vector<int> framings;
  std::size_t steps = 1000;
  std::uint64_t seed = 1;
  bool allow_stab = false;
  std::string format = "ascii";
  int column_width = 0;
  int strand_spacing = 0;
  bool event_labels = false;
  bool component_labels = false;
};

int cmd_invariants(const Options& o, std::ostream& out) {
  const OrientedFront of = load_front(o.file);
  if (o.json) {
    out << dump(invariants_report(of));
  } else {
    print_invariants_text(out, invariant_report(of));
  }
  return 0;
}

int cmd_pushoff(const Options& o, std::ostream& out) {
  const PushOffResult po = push_off(load_front(o.file), o.framing);
  if (o.json) {
    ordered_json j = pushoff_report(po);
    j["word"] = word_of(po.front.diagram());
    out << dump(j);
    if (!o.output.empty()) write_text_file(o.output, serialize_front(po.front.diagram()));
    return 0;
  }
  const InvariantReport inv = invariant_report(po.front);
  if (!o.output.empty()) {
    write_text_file(o.output, serialize_front(po.front.diagram()));
  } else {
    out << serialize_front(po.front.diagram());
  }
  out << "framing " << po.framing << ": lk " << inv.linking[0][1] << ", tb(K) "
      << inv.components[po.original_index].tb << ", tb(K_r) "
      << inv.components[po.companion_index].tb << ", stab_count " << po.stab_count
      << '\n';
  return 0;
}

int cmd_double(const Options& o, std::ostream& out) {
  const OrientedFront wh = whitehead_double(load_front(o.file), o.n);
  const InvariantReport inv = invariant_report(wh);
  if (o.json) {
    ordered_json j = report_header("double");
    j["n"] = o.n;
    j["events"] = wh.diagram().size();
    j["tb"] = inv.components[0].tb;
    j["rot"] = inv.components[0].rot;
    j["writhe"] = inv.components[0].writhe;
    j["word"] = word_of(wh.diagram());
    out << dump(j);
    if (!o.output.empty()) write_text_file(o.output, serialize_front(wh.diagram()));
    return 0;
  }
  emit_front(out, o.output, wh.diagram());
  out << "n " << o.n << ": tb " << inv.components[0].tb << ", rot " << inv.components[0].rot
      << '\n';
  return 0;
}

int cmd_legendrianize(const Options& o, std::ostream& out) {
  const OrientedFront of = legendrianize(parse_grid(read_text_file(o.file)));
  if (o.json) {
    ordered_json j = invariants_report(of);
    j["kind"] = "legendrianize";
    j["word"] = word_of(of.diagram());
    out << dump(j);
    if (!o.output.empty()) write_text_file(o.output, serialize_front(of.diagram()));
    return 0;
  }
  emit_front(out, o.output, of.diagram());
  return 0;
}

int cmd_slice_check(const Options& o, std::ostream& out) {
  const SliceCertificate c = slice_check(load_front(o.file));
  if (o.json) {
    ordered_json j = report_header("slice-check");
    j.update(to_json(c));
    out << dump(j);
    return 0;
  }
  out << to_string(c.verdict) << ": tb " << c.tb << ", rot " << c.rot << ", -chi(D) = "
      << c.lhs << (c.lhs < c.rhs ? " < " : " >= ") << "tb + |rot| = " << c.rhs << '\n';
  return 0;
}

int cmd_genus_bound(const Options& o, std::ostream& out) {
  const GenusBound g = genus_bound(load_front(o.file), o.component, o.framing);
  if (o.json) {
    ordered_json j = report_header("genus-bound");
    j.update(to_json(g, o.component));
    out << dump(j);
    return 0;
  }
  out << "component " << o.component << ", framing " << g.framing << ": tb " << g.tb
      << ", rot " << g.rot << ", genus >= " << g.bound << " (" << to_string(g.slice_verdict)
      << ")\n";
  return 0;
}

int cmd_stein_check(const Options& o, std::ostream& out) {
  const OrientedFront of = load_front(o.file);
  std::vector<HandleRequest> handles;
  for (std::size_t k = 0; k < o.framings.size(); ++k) handles.push_back({k, o.framings[k]});
  const SteinReport r = stein_check(of, handles);
  if (o.json) {
    ordered_json j = report_header("stein-check");
    j.update(to_json(r));
    out << dump(j);
    return 0;
  }
  for (const HandleReport& h : r.handles) {
    out << "component " << h.component << ", framing " << h.framing << ", tb " << h.tb
        << ": " << to_string(h.status);
    if (h.status == SteinStatus::SteinAfterStabilizations) {
      out << " (" << h.stabilizations << " stabilization"
          << (h.stabilizations == 1 ? "" : "s") << ")";
    } else if (h.status == SteinStatus::NotCertified) {
      out << " (deficit " << h.deficit << ")";
    }
    out << '\n';
  }
  out << (r.certified ? "certified" : "not certified") << '\n';
  return 0;
}

int cmd_fuzz(const Options& o, std::ostream& out) {
  const OrientedFront of = load_front(o.file);
  const FuzzResult r = fuzz(of, o.steps, o.seed, FuzzOptions{o.allow_stab});
  if (o.json) {
    ordered_json j = report_header("fuzz");
    j["seed"] = o.seed;
    j["steps"] = o.steps;
    j["applied"] = r.applied;
    j["skipped"] = r.skipped;
    j["net_stabilizations"] = r.net_stabilizations;
    j["before"] = to_json(invariant_report(of));
    j["after"] = to_json(invariant_report(r.front));
    j["word"] = word_of(r.front.diagram());
    out << dump(j);
    if (!o.output.empty()) write_text_file(o.output, serialize_front(r.front.diagram()));
    return 0;
  }
  emit_front(out, o.output, r.front.diagram());
  out << "applied " << r.applied << ", skipped " << r.skipped << '\n';
  return 0;
}

int cmd_render(const Options& o, std::ostream& out) {
  RenderSpec spec;
  spec.format = o.format == "svg" ? RenderFormat::Svg : RenderFormat::Ascii;
  if (o.column_width) spec.column_width = o.column_width;
  if (o.strand_spacing) spec.strand_spacing = o.strand_spacing;
  spec.show_event_indices = o.event_labels;
  spec.show_components = o.component_labels;
  const std::string doc = render(load_front(o.file), spec);
  if (o.output.empty()) {
    out << doc;
  } else {
    write_text_file(o.output, doc);
  }
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const OrientedFront of = load_front(o.file);
  const InvariantReport inv = invariant_report(of);
  const GenericCode code = to_generic_code(of);
  bool ok = true;

  int total = 0;
  for (const auto& c : inv.components) total += c.writhe;
  for (std::size_t a = 0; a < inv.linking.size(); ++a) {
    for (std::size_t b = a + 1; b < inv.linking.size(); ++b) total += 2 * inv.linking[a][b];
  }
  const int oracle_total = oracles::oracle_writhe(code);
  ok = ok && total == oracle_total;

  ordered_json links = ordered_json::array();
  for (std::size_t a = 0; a < inv.linking.size(); ++a) {
    for (std::size_t b = a + 1; b < inv.linking.size(); ++b) {
      const int oracle = oracles::oracle_linking(code, a, b);
      ok = ok && oracle == inv.linking[a][b];
      links.push_back({{"a", a}, {"b", b}, {"lk", inv.linking[a][b]}, {"oracle", oracle}});
    }
  }
  std::string bracket = "skipped";
  if (code.crossings.size() <= 12) {
    bracket = oracles::kauffman_bracket(code).to_string();
  }

  if (o.json) {
    ordered_json j = report_header("verify");
    j["writhe"] = {{"main", total}, {"oracle", oracle_total}};
    j["linking"] = std::move(links);
    j["crossings"] = code.crossings.size();
    j["bracket"] = bracket;
    j["ok"] = ok;
    out << dump(j);
  } else {
    out << "total writhe " << total << " (oracle " << oracle_total << ")\n";
    for (const auto& l : links) {
      out << "lk(" << l["a"].get<int>() << ", " << l["b"].get<int>() << ") = "
          << l["lk"].get<int>() << " (oracle " << l["oracle"].get<int>() << ")\n";
    }
    out << "normalized bracket: " << bracket << '\n';
    out << (ok ? "ok" : "MISMATCH") << '\n';
  }
  if (!ok) {
    err << "legfront: oracle disagreement on " << o.file << '\n';
    return 1;
  }
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Legendrian front toolkit"};
  app.name("legfront");
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;

  auto add = [&](const std::string& name, const std::string& help, bool json,
                 std::function<int()> fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", o.file, "input front (or grid) file")->required();
    if (json) sub->add_flag("--json", o.json, "emit a JSON report");
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };

  add("invariants", "tb, rot, writhe and linking numbers", true,
      [&] { return cmd_invariants(o, out); });
  auto* pushoff = add("pushoff", "Legendrian push-off with a given linking number", true,
                      [&] { return cmd_pushoff(o, out); });
  pushoff->add_option("-r,--framing", o.framing, "linking number with the original")
      ->required();
  pushoff->add_option("-o,--output", o.output, "write the front here");
  auto* dbl = add("double", "iterated positive Whitehead double", true,
                  [&] { return cmd_double(o, out); });
  dbl->add_option("-n", o.n, "number of iterations")->check(CLI::PositiveNumber);
  dbl->add_option("-o,--output", o.output, "write the front here");
  auto* leg = add("legendrianize", "front of a grid diagram", true,
                  [&] { return cmd_legendrianize(o, out); });
  leg->add_option("-o,--output", o.output, "write the front here");
  add("slice-check", "one-sided sliceness obstruction", true,
      [&] { return cmd_slice_check(o, out); });
  auto* genus = add("genus-bound", "genus lower bound for a framing", true,
                    [&] { return cmd_genus_bound(o, out); });
  genus->add_option("-f,--framing", o.framing, "framing")->required();
  genus->add_option("-c,--component", o.component, "component index");
  auto* stein = add("stein-check", "Stein 2-handle framings, one per component", true,
                    [&] { return cmd_stein_check(o, out); });
  stein->add_option("--framings", o.framings, "framings for components 0, 1, ...")
      ->delimiter(',')
      ->required();
  auto* fz = add("fuzz", "random move sequence", true, [&] { return cmd_fuzz(o, out); });
  fz->add_option("--steps", o.steps, "number of attempted moves");
  fz->add_option("--seed", o.seed, "random seed");
  fz->add_flag("--allow-stab", o.allow_stab, "include Stabilize moves");
  fz->add_option("-o,--output", o.output, "write the front here");
  auto* rnd = add("render", "ASCII or SVG picture", false, [&] { return cmd_render(o, out); });
  rnd->add_option("--format", o.format, "ascii or svg")
      ->check(CLI::IsMember({"ascii", "svg"}));
  rnd->add_option("--column-width", o.column_width)->check(CLI::PositiveNumber);
  rnd->add_option("--strand-spacing", o.strand_spacing)->check(CLI::PositiveNumber);
  rnd->add_flag("--event-labels", o.event_labels, "number the events");
  rnd->add_flag("--component-labels", o.component_labels, "label the components");
  rnd->add_option("-o,--output", o.output, "write the picture here");
  add("verify", "cross-check invariants against the brute-force oracles", true,
      [&] { return cmd_verify(o, out, err); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  try {
    return action ? action() : 2;
  } catch (const legfront::Error& e) {
    err << "legfront: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace legfront::cli

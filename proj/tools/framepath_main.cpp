// Copyright 2026 The framepath Authors
// SPDX-License-Identifier: Apache-2.0
//
// Batch front door.  One command per invocation, deterministic output.
// Exit codes: 0 ok, 1 domain error, 2 parse error, 3 theorem check failed.

#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "framepath/basic_open.hpp"
#include "framepath/boundary.hpp"
#include "framepath/convergence.hpp"
#include "framepath/cylinder_site.hpp"
#include "framepath/frame.hpp"
#include "framepath/graph_io.hpp"
#include "framepath/top_site.hpp"
#include "framepath/topgraph.hpp"

namespace {

using namespace framepath;

// Cross-method disagreement: a theorem violation, reported and never hidden.
class TheoremViolation : public std::runtime_error {
 public:
  explicit TheoremViolation(const std::string& msg)
      : std::runtime_error(msg) {}
};

struct CommonFlags {
  std::string graph_file;
  std::string format = "lines";
  std::size_t max_len = 3;
  std::uint32_t bundle_cap = 8;
  std::string method = "ck3";
};

std::string katsura_tags(const KatsuraClasses& k, VertexId v) {
  std::string out;
  auto tag = [&](const std::vector<VertexId>& set, const char* name) {
    if (std::binary_search(set.begin(), set.end(), v)) {
      if (!out.empty()) out += ",";
      out += name;
    }
  };
  tag(k.sce, "sce");
  tag(k.fin, "fin");
  tag(k.rg, "rg");
  tag(k.inf, "inf");
  tag(k.sg, "sg");
  return out;
}

int cmd_classify(const CommonFlags& flags) {
  const Graph g = load_graph(flags.graph_file);
  const auto k = katsura_classify(g);
  std::vector<VertexId> order(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    return g.vertex_name(a) < g.vertex_name(b);
  });
  if (flags.format == "doc") {
    nlohmann::json doc;
    doc["vertices"] = nlohmann::json::array();
    for (auto v : order) {
      const auto cls = classify_vertex(g, v);
      doc["vertices"].push_back({{"name", g.vertex_name(v)},
                                 {"class", vertex_class_name(cls)},
                                 {"singular", is_singular(cls)},
                                 {"katsura", katsura_tags(k, v)}});
    }
    std::cout << doc.dump(2) << "\n";
  } else {
    for (auto v : order) {
      const auto cls = classify_vertex(g, v);
      std::cout << g.vertex_name(v) << " " << vertex_class_name(cls)
                << (is_singular(cls) ? " singular" : "") << " | "
                << katsura_tags(k, v) << "\n";
    }
  }
  return 0;
}

int cmd_boundary(const CommonFlags& flags) {
  const Graph g = load_graph(flags.graph_file);
  auto listing = [&](const std::string& method) {
    std::vector<std::string> out;
    auto in_boundary = [&](const PathPoint& x) {
      if (method == "direct") return boundary_member_direct(g, x);
      if (method == "topgraph") return top_boundary_member(g, x);
      return boundary_member(g, x);
    };
    for (const auto& x : truncated_universe(g, flags.max_len, flags.bundle_cap))
      if (in_boundary(x)) out.push_back(render(g, x));
    return out;
  };
  const auto ck3 = listing("ck3");
  const auto top = listing("topgraph");
  const auto direct = listing("direct");
  if (ck3 != top || ck3 != direct) {
    std::ostringstream msg;
    msg << "boundary methods disagree on " << flags.graph_file
        << " (ck3: " << ck3.size() << ", topgraph: " << top.size()
        << ", direct: " << direct.size() << " members)";
    throw TheoremViolation(msg.str());
  }
  const auto& chosen = flags.method == "topgraph"
                           ? top
                           : (flags.method == "direct" ? direct : ck3);
  if (flags.format == "doc") {
    nlohmann::json doc;
    doc["method"] = flags.method;
    doc["max_len"] = flags.max_len;
    doc["boundary"] = chosen;
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const auto& line : chosen) std::cout << line << "\n";
  }
  return 0;
}

int cmd_meet(const CommonFlags& flags, const std::string& lhs,
             const std::string& rhs) {
  const Graph g = load_graph(flags.graph_file);
  const BasicOpen result =
      meet(g, parse_basic(g, lhs), parse_basic(g, rhs));
  if (flags.format == "doc")
    std::cout << nlohmann::json{{"meet", render(g, result)}}.dump(2) << "\n";
  else
    std::cout << render(g, result) << "\n";
  return 0;
}

int cmd_leq(const CommonFlags& flags, const std::string& lhs,
            const std::string& rhs) {
  const Graph g = load_graph(flags.graph_file);
  const bool result = leq(g, parse_basic(g, lhs), parse_basic(g, rhs));
  if (flags.format == "doc")
    std::cout << nlohmann::json{{"leq", result}}.dump(2) << "\n";
  else
    std::cout << (result ? "true" : "false") << "\n";
  return 0;
}

int cmd_coverings(const CommonFlags& flags, const std::string& literal,
                  bool drop_trivial) {
  const Graph g = load_graph(flags.graph_file);
  const BasicOpen a = parse_basic(g, literal);
  CoveringOptions opts;
  opts.include_trivial = !drop_trivial;
  std::vector<std::string> lines;
  for (const auto& s : coverings(g, a, opts)) {
    std::string line = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) line += ", ";
      line += render(g, s[i]);
    }
    lines.push_back(line + "}");
  }
  std::sort(lines.begin(), lines.end());
  if (flags.format == "doc") {
    nlohmann::json doc;
    doc["element"] = render(g, a);
    doc["coverings"] = lines;
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const auto& line : lines) std::cout << line << "\n";
  }
  return 0;
}

SequencePresentation parse_sequence(const Graph& g, const std::string& text) {
  auto split_at = [&](const std::string& s, char c) {
    const auto pos = s.find(c);
    if (pos == std::string::npos)
      return std::pair<std::string, std::string>{s, ""};
    return std::pair<std::string, std::string>{s.substr(0, pos),
                                               s.substr(pos + 1)};
  };
  const auto [kind, rest] = split_at(text, ':');
  if (kind == "const") {
    auto [point_text, from] = split_at(rest, '@');
    EventuallyConstant seq{parse_point(g, point_text), 0};
    if (!from.empty()) seq.from_index = std::stoul(from);
    return seq;
  }
  if (kind == "escape") {
    // escape:<prefix>:<bundle>[@start+step][:cont=<path>]
    auto [prefix_text, tail] = split_at(rest, ':');
    if (prefix_text.empty() || tail.empty())
      throw ParseError("escape presentation needs a prefix and a bundle");
    BundleEscape seq{parse_path(g, prefix_text), 0, 0, 1, std::nullopt};
    auto [bundle_text, cont_part] = split_at(tail, ':');
    auto [bundle_name, arith] = split_at(bundle_text, '@');
    auto id = g.find_bundle(bundle_name);
    if (!id) throw ParseError("unknown bundle: " + bundle_name);
    seq.bundle = *id;
    if (!arith.empty()) {
      auto [start, step] = split_at(arith, '+');
      seq.start = static_cast<std::uint32_t>(std::stoul(start));
      if (!step.empty())
        seq.step = static_cast<std::uint32_t>(std::stoul(step));
    }
    if (!cont_part.empty()) {
      auto [key, value] = split_at(cont_part, '=');
      if (key != "cont" || value.empty())
        throw ParseError("malformed continuation in: " + text);
      seq.continuation = parse_path(g, value);
    }
    return seq;
  }
  if (kind == "sampled") {
    auto [list, horizon] = split_at(rest, '@');
    Sampled seq;
    std::stringstream ss(list);
    std::string token;
    while (std::getline(ss, token, '|'))
      if (!token.empty()) seq.terms.push_back(parse_point(g, token));
    seq.horizon = horizon.empty() ? seq.terms.size() : std::stoul(horizon);
    return seq;
  }
  throw ParseError("unknown sequence presentation: " + text);
}

int cmd_converge(const CommonFlags& flags, const std::string& seq_text,
                 const std::string& limit_text) {
  const Graph g = load_graph(flags.graph_file);
  const auto seq = parse_sequence(g, seq_text);
  const PathPoint limit = parse_point(g, limit_text);
  const auto result = converges(g, seq, limit);
  if (flags.format == "doc") {
    nlohmann::json doc;
    doc["verdict"] = verdict_text(result);
    doc["limit"] = render(g, limit);
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << verdict_text(result) << "\n";
  }
  return 0;
}

int cmd_points(const CommonFlags& flags, std::size_t depth) {
  const Graph g = load_graph(flags.graph_file);
  const auto site = cylinder_site_export(g, depth);
  EnumerationLimits limits;
  limits.max_elements = 22;
  const auto frame = enumerate_c_ideals(site.lat, site.cov, limits);
  const auto points = points_of_frame(frame);
  const auto pairing = match_points_to_paths(site, frame, points);
  std::vector<std::string> lines;
  for (auto idx : pairing) lines.push_back(render(g, site.universe[idx]));
  std::sort(lines.begin(), lines.end());
  if (flags.format == "doc") {
    nlohmann::json doc;
    doc["points"] = lines.size();
    doc["paths"] = lines;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "points: " << lines.size() << "\n";
    for (const auto& line : lines) std::cout << line << "\n";
  }
  return 0;
}

int cmd_check_coverage(const CommonFlags& flags) {
  const Graph g = load_graph(flags.graph_file);
  std::vector<StabilityViolation> violations;
  const FiniteSemilattice* lat = nullptr;
  Ck3Site ck3_site{FiniteSemilattice({"0"}, {0}, 0), Coverage(1), {}, {}};
  TopSite top_site{FiniteSemilattice({"0"}, {0}, 0), Coverage(1), {}, {}};
  if (flags.method == "topgraph") {
    TopSiteOptions opts;
    opts.max_len = std::min<std::size_t>(flags.max_len, 2);
    opts.bundle_cap = std::min<std::uint32_t>(flags.bundle_cap, 2);
    top_site = top_site_export(g, opts);
    violations = check_coverage(top_site.lat, top_site.cov);
    lat = &top_site.lat;
  } else {
    Ck3SiteOptions opts;
    opts.depth = flags.max_len;
    ck3_site = ck3_site_export(g, opts);
    violations = check_coverage(ck3_site.lat, ck3_site.cov);
    lat = &ck3_site.lat;
  }
  if (flags.format == "doc") {
    nlohmann::json doc;
    doc["elements"] = lat->size();
    doc["violations"] = violations.size();
    std::cout << doc.dump(2) << "\n";
  } else if (violations.empty()) {
    std::cout << "ok (0 violations)\n";
  } else {
    std::cout << violations.size() << " violations\n";
    for (const auto& v : violations)
      std::cout << "  " << lat->label(v.element) << " under "
                << lat->label(v.under) << "\n";
  }
  if (!violations.empty())
    throw TheoremViolation("declared coverage is not meet-stable");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"framepath: boundary path spaces from sites and coverages"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string lhs, rhs, literal, seq_text, limit_text;
  std::size_t depth = 4;
  bool drop_trivial = false;

  auto add_common = [&](CLI::App* cmd, bool with_method) {
    cmd->add_option("graph", flags.graph_file, "graph document (JSON)")
        ->required();
    cmd->add_option("--format", flags.format, "lines|doc")
        ->check(CLI::IsMember({"lines", "doc"}));
    cmd->add_option("--max-len", flags.max_len, "truncation length");
    cmd->add_option("--bundle-cap", flags.bundle_cap,
                    "bundle members enumerated per bundle");
    if (with_method)
      cmd->add_option("--method", flags.method, "ck3|topgraph|direct");
    return cmd;
  };

  auto* classify = add_common(app.add_subcommand("classify",
                                                 "vertex classification"),
                              false);
  auto* boundary = add_common(
      app.add_subcommand("boundary", "boundary path listing"), true);
  auto* meet_cmd =
      add_common(app.add_subcommand("meet", "meet of two basic opens"), false);
  meet_cmd->add_option("lhs", lhs, "basic open literal")->required();
  meet_cmd->add_option("rhs", rhs, "basic open literal")->required();
  auto* leq_cmd =
      add_common(app.add_subcommand("leq", "order of two basic opens"), false);
  leq_cmd->add_option("lhs", lhs, "basic open literal")->required();
  leq_cmd->add_option("rhs", rhs, "basic open literal")->required();
  auto* coverings_cmd = add_common(
      app.add_subcommand("coverings", "covering families of a basic open"),
      false);
  coverings_cmd->add_option("element", literal, "basic open literal")
      ->required();
  coverings_cmd->add_flag("--no-trivial", drop_trivial,
                          "drop the {empty, a} coverings");
  auto* converge_cmd = add_common(
      app.add_subcommand("converge", "decide sequence convergence"), false);
  converge_cmd->add_option("sequence", seq_text,
                           "const:<point>[@n] | escape:<prefix>:<bundle> | "
                           "sampled:<p>|<p>...@h")
      ->required();
  converge_cmd->add_option("limit", limit_text, "candidate limit point")
      ->required();
  auto* points_cmd = add_common(
      app.add_subcommand("points", "frame points of the cylinder site"),
      false);
  points_cmd->add_option("--depth", depth, "cylinder truncation depth");
  auto* check_cmd = add_common(
      app.add_subcommand("check-coverage",
                         "meet-stability of the exported coverage"),
      true);

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(classify)) return cmd_classify(flags);
    if (app.got_subcommand(boundary)) return cmd_boundary(flags);
    if (app.got_subcommand(meet_cmd)) return cmd_meet(flags, lhs, rhs);
    if (app.got_subcommand(leq_cmd)) return cmd_leq(flags, lhs, rhs);
    if (app.got_subcommand(coverings_cmd))
      return cmd_coverings(flags, literal, drop_trivial);
    if (app.got_subcommand(converge_cmd))
      return cmd_converge(flags, seq_text, limit_text);
    if (app.got_subcommand(points_cmd)) return cmd_points(flags, depth);
    if (app.got_subcommand(check_cmd)) return cmd_check_coverage(flags);
  } catch (const TheoremViolation& err) {
    std::cerr << "theorem check failed: " << err.what() << "\n";
    return 3;
  } catch (const ParseError& err) {
    std::cerr << "parse error: " << err.what() << "\n";
    return 2;
  } catch (const DomainError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return 0;
}

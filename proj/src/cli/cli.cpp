#include "negsets/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "negsets/balance.hpp"
#include "negsets/certificate_json.hpp"
#include "negsets/dot.hpp"
#include "negsets/io.hpp"
#include "negsets/minimality.hpp"
#include "negsets/negation.hpp"
#include "negsets/oracle.hpp"
#include "negsets/packing.hpp"

namespace negsets::cli {

using nlohmann::json;

namespace {

struct Options {
  std::string file;
  bool json = false;
  std::uint64_t seed = 20240601;
  int max_n = oracle::kDefaultMaxVertices;
  bool trace = false;
  std::optional<std::string> edges;
  std::optional<std::string> cert;
  std::optional<std::string> output;
  bool family = false;
};

// Collects the human report and the JSON report side by side.
struct Report {
  std::ostringstream text;
  json data = json::object();
  int exit = kOk;

  void fail(int code) { exit = std::max(exit, code); }
};

std::string join(const std::vector<Vertex>& vs, const char* sep = " ") {
  std::string s;
  for (Vertex v : vs) s += (s.empty() ? "" : sep) + std::to_string(v);
  return s;
}

json edges_json(const std::vector<Edge>& es) {
  auto out = json::array();
  for (const auto& e : es) out.push_back({e.u, e.v});
  return out;
}

// Components that carry at least one edge, as induced subgraphs.
std::vector<Subgraph> edge_components(const SignedGraph& g) {
  std::vector<Subgraph> out;
  for (const auto& c : connected_components(g))
    if (c.size() >= 2) out.push_back(induced_subgraph(g, c));
  return out;
}

EdgeSubset restrict_to(const SignedGraph& g, const EdgeSubset& b, const Subgraph& part) {
  std::vector<EdgeId> ids;
  for (EdgeId e = 0; e < part.graph.edge_count(); ++e) {
    const Edge& ed = part.graph.edge(e);
    if (b.contains(*g.find_edge(part.to_host[ed.u], part.to_host[ed.v]))) ids.push_back(e);
  }
  return EdgeSubset(part.graph, ids);
}

std::vector<Edge> lift(const EdgeSubset& s, const Subgraph& part) {
  std::vector<Edge> out;
  for (const auto& e : s.edges()) out.emplace_back(part.to_host[e.u], part.to_host[e.v]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> lift(const std::vector<Vertex>& vs, const Subgraph& part) {
  std::vector<Vertex> out;
  for (Vertex v : vs) out.push_back(part.to_host[v]);
  return out;
}

std::vector<Vertex> lift_sorted(const std::vector<Vertex>& vs, const Subgraph& part) {
  auto out = lift(vs, part);
  std::sort(out.begin(), out.end());
  return out;
}

std::string edges_text(const SignedGraph& g, const std::vector<Edge>& es) {
  return to_string(EdgeSubset(g, std::span<const Edge>(es)));
}

EdgeSubset chosen_set(const SignedGraph& g, const Options& opt) {
  return opt.edges ? parse_edge_list(g, *opt.edges) : g.negative_edges();
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedCertificateError("cannot open certificate " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw MalformedCertificateError("certificate " + path + ": " + e.what());
  }
}

void section(Report& r, std::size_t index, std::size_t count, const Subgraph& part) {
  if (count > 1)
    r.text << "component " << index << " (vertices " << join(part.to_host, ",") << ")\n";
}

// --- commands ---------------------------------------------------------------

void cmd_balance(const SignedGraph& g, const Options&, Report& r) {
  auto w = check_balance(g);
  r.data["balanced"] = w.balanced();
  if (w.balanced()) {
    auto y = w.bipartition->y_side().members();
    r.data["y_side"] = y;
    r.text << "balanced: yes\nharary side: {" << join(y, ",") << "}\n";
  } else {
    r.data["negative_circle"] = w.negative_circle;
    r.text << "balanced: no\nnegative circle: " << join(w.negative_circle) << "\n";
    r.fail(kPropertyFails);
  }
}

void cmd_negation_check(const SignedGraph& g, const Options& opt, Report& r) {
  if (!opt.edges) throw CLI::RequiredError("--edges");
  auto b = parse_edge_list(g, *opt.edges);
  bool ok = is_negation_set(g, b);
  r.data["edges"] = edges_json(b.edges());
  r.data["negation_set"] = ok;
  r.text << to_string(b) << (ok ? " is" : " is not") << " a negation set\n";
  if (!ok) r.fail(kPropertyFails);
}

void cmd_minimal(const SignedGraph& g, const Options& opt, Report& r) {
  auto b = chosen_set(g, opt);
  if (!is_negation_set(g, b)) throw PreconditionError(to_string(b) + " is not a negation set");
  auto parts = edge_components(g);
  bool all = true;
  r.data["components"] = json::array();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    bool m = is_minimal(parts[i].graph, restrict_to(g, b, parts[i]));
    all = all && m;
    r.data["components"].push_back({{"vertices", parts[i].to_host}, {"minimal", m}});
    section(r, i, parts.size(), parts[i]);
  }
  r.data["edges"] = edges_json(b.edges());
  r.data["minimal"] = all;
  r.text << to_string(b) << (all ? " is" : " is not") << " minimal\n";
  if (!all) r.fail(kPropertyFails);
}

void cmd_certify_minimum(const SignedGraph& g, const Options& opt, Report& r) {
  auto b = chosen_set(g, opt);
  // Circle signs do not change under switching, so work where E^- = b.
  auto h = switch_by(g, switching_for(g, b));
  r.data["edges"] = edges_json(b.edges());
  if (opt.cert) {
    auto cert = circle_certificate_from_json(read_json_file(*opt.cert));
    bool ok = verify_disjoint_circle_certificate(g, b, cert);
    r.data["certificate"] = to_json(cert);
    r.data["verified"] = ok;
    r.text << "certificate " << (ok ? "accepted" : "rejected") << ": " << to_string(b)
           << (ok ? " is" : " is not shown to be") << " minimum\n";
    if (!ok) r.fail(kPropertyFails);
    return;
  }
  if (!is_complete(g)) {
    r.data["verified"] = false;
    r.text << "no certificate: the triangle construction needs a complete graph; pass --cert\n";
    r.fail(kPropertyFails);
    return;
  }
  auto cert = triangle_certificate_for_complete(h, h.negative_edges());
  r.data["verified"] = cert.has_value();
  if (!cert) {
    r.text << "no certificate: too few vertices outside the negative edges\n";
    r.fail(kPropertyFails);
    return;
  }
  r.data["certificate"] = to_json(*cert);
  r.text << to_string(b) << " is minimum; edge-disjoint negative circles:\n";
  for (const auto& c : cert->circles) r.text << "  " << join(c) << "\n";
}

void cmd_certify_unique(const SignedGraph& g, const Options& opt, Report& r) {
  auto b = chosen_set(g, opt);
  auto h = switch_by(g, switching_for(g, b));
  r.data["edges"] = edges_json(b.edges());
  if (opt.cert) {
    auto cert = pair_certificate_from_json(read_json_file(*opt.cert));
    bool ok = verify_two_circle_certificate(h, h.negative_edges(), cert);
    r.data["certificate"] = to_json(cert);
    r.data["verified"] = ok;
    // The certificate presumes b is minimum; confirm that where the oracle reaches.
    std::optional<bool> minimum;
    if (ok && is_connected(g) && g.vertex_count() <= opt.max_n)
      minimum = oracle::frustration_index(g, opt.max_n) == b.size();
    if (minimum) r.data["minimum_checked"] = *minimum;
    bool pass = ok && minimum.value_or(true);
    r.text << "certificate " << (ok ? "accepted" : "rejected");
    if (minimum) r.text << ", oracle minimum check " << (*minimum ? "passed" : "failed");
    else if (ok) r.text << ", minimality assumed (graph beyond oracle cap or disconnected)";
    r.text << "\n";
    r.data["unique_minimum"] = pass;
    if (!pass) r.fail(kPropertyFails);
    return;
  }
  if (!is_complete(g)) {
    r.data["unique_minimum"] = false;
    r.text << "no certificate: the size bound needs a complete graph; pass --cert\n";
    r.fail(kPropertyFails);
    return;
  }
  bool ok = unique_minimum_by_size(h, h.negative_edges());
  r.data["unique_minimum"] = ok;
  r.text << to_string(b) << (ok ? " is the unique minimum negation set (size bound)\n"
                                : " is not certified by the size bound\n");
  if (!ok) r.fail(kPropertyFails);
}

void cmd_acyclic(const SignedGraph& g, const Options& opt, Report& r) {
  auto parts = edge_components(g);
  VertexSubset total(g.vertex_count());
  r.data["components"] = json::array();
  std::vector<std::string> trace_lines;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& part = parts[i];
    section(r, i, parts.size(), part);
    auto outcome = acyclic_negation(part.graph);
    json comp{{"vertices", part.to_host}};
    if (auto* k5 = std::get_if<MinusK5Exception>(&outcome)) {
      auto block = lift_sorted(k5->block, part);
      comp["minus_k5_block"] = block;
      r.text << "no acyclic negation set: block {" << join(block, ",")
             << "} is in the switching class of -K5\n";
      r.fail(kMinusK5);
    } else {
      const auto& res = std::get<AcyclicNegationResult>(outcome);
      auto sw = lift_sorted(res.switching.members(), part);
      for (Vertex v : sw) total.insert(v);
      comp["switching"] = sw;
      comp["negation_set"] = edges_json(lift(res.negation_set, part));
      comp["iterations"] = res.stats.iterations;
      if (opt.trace) {
        auto steps = json::array();
        for (const auto& s : res.trace) {
          auto vs = lift(s.switched, part);
          steps.push_back({{"step", s.step}, {"switched", vs}, {"note", s.note}});
          trace_lines.push_back("step " + std::to_string(s.step) + ": " + join(vs) +
                                (s.note.empty() ? "" : "  # " + s.note));
        }
        comp["trace"] = steps;
      }
    }
    r.data["components"].push_back(comp);
  }
  if (r.exit != kMinusK5) {
    auto set = switch_by(g, total).negative_edges();
    r.data["switching"] = total.members();
    r.data["negation_set"] = edges_json(set.edges());
    r.text << "switching: {" << join(total.members(), ",") << "}\n";
    r.text << "acyclic negation set: " << to_string(set) << "\n";
  }
  for (const auto& line : trace_lines) r.text << line << "\n";
}

void cmd_packing(const SignedGraph& g, const Options&, Report& r) {
  auto parts = edge_components(g);
  if (parts.empty()) throw PreconditionError("packing needs an unbalanced graph; this one has no edges");
  r.data["components"] = json::array();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& part = parts[i];
    section(r, i, parts.size(), part);
    auto res = packing_number(part.graph);
    json comp{{"vertices", part.to_host}, {"packing_number", res.packing_number}};
    r.text << "packing number: " << res.packing_number << "\n";
    if (res.distance) {
      auto b1 = lift_sorted(res.side_one, part), b2 = lift_sorted(res.side_two, part);
      comp["side_one"] = b1;
      comp["side_two"] = b2;
      comp["distance"] = *res.distance;
      r.text << "bipartition: {" << join(b1, ",") << "} | {" << join(b2, ",") << "}\n";
      r.text << "positive distance: " << *res.distance << "\n";
    } else {
      r.text << "negative edges are not bipartite\n";
    }
    comp["family"] = json::array();
    r.text << "family:\n";
    for (const auto& member : res.family) {
      auto es = lift(member, part);
      comp["family"].push_back(edges_json(es));
      r.text << "  " << edges_text(g, es) << "\n";
    }
    r.data["components"].push_back(comp);
  }
}

void cmd_frustration(const SignedGraph& g, const Options& opt, Report& r) {
  int total = 0;
  for (const auto& part : edge_components(g)) total += oracle::frustration_index(part.graph, opt.max_n);
  r.data["frustration_index"] = total;
  r.text << "frustration index: " << total << "\n";
}

struct CheckTable {
  std::vector<std::pair<std::string, bool>> rows;
  void add(const std::string& name, bool ok) { rows.emplace_back(name, ok); }
};

void oracle_checks(const SignedGraph& g, const Options& opt, CheckTable& t) {
  auto all = oracle::enumerate_negation_sets(g, opt.max_n);
  std::mt19937_64 rng(opt.seed);

  bool membership = true;
  for (const auto& s : all.negation_sets) membership = membership && is_negation_set(g, s);
  std::bernoulli_distribution coin(0.5);
  for (int k = 0; k < 200; ++k) {
    std::vector<bool> mask(g.edge_count());
    for (std::size_t e = 0; e < mask.size(); ++e) mask[e] = coin(rng);
    EdgeSubset s(g.skeleton(), mask);
    membership = membership && is_negation_set(g, s) == all.contains(s);
  }
  t.add("negation sets match the enumeration", membership);

  bool minimal = true;
  for (const auto& s : all.negation_sets) minimal = minimal && is_minimal(g, s) == oracle::brute_is_minimal(all, s);
  t.add("minimality matches the oracle", minimal);

  bool disjoint = true;
  for (std::size_t i = 0; i < all.negation_sets.size(); ++i)
    for (std::size_t j = i + 1; j < all.negation_sets.size(); ++j) {
      const auto& a = all.negation_sets[i];
      const auto& b = all.negation_sets[j];
      if (!a.intersects(b)) disjoint = disjoint && is_bipartite(a) && is_bipartite(b);
    }
  t.add("disjoint negation sets are bipartite", disjoint);

  bool partner_ok;
  bool bip = is_bipartite(g.negative_edges());
  try {
    auto p = disjoint_partner(g);
    partner_ok = bip && all.contains(p) && !p.intersects(g.negative_edges());
  } catch (const PreconditionError&) {
    partner_ok = !bip;
  }
  t.add("disjoint partner exists iff E- is bipartite", partner_ok);

  int frustration = all.negation_sets.front().size();
  if (max_degree(g) <= 4) {
    auto outcome = acyclic_negation(g);
    bool ok;
    if (auto* res = std::get_if<AcyclicNegationResult>(&outcome)) {
      ok = is_forest(res->negation_set) && all.contains(res->negation_set) &&
           res->negation_set.size() >= frustration;
    } else {
      bool has_forest = false;
      for (const auto& s : all.negation_sets) has_forest = has_forest || is_forest(s);
      ok = !has_forest;
    }
    t.add("acyclic negation is a valid forest", ok);
  }

  if (!is_balanced(g) && bip) {
    auto res = packing_number(g);
    auto brute = oracle::brute_packing_number(all, g.negative_edges());
    t.add("packing number matches the oracle", res.packing_number == brute.size);
  }

  if (is_complete(g)) {
    auto b = g.negative_edges();
    if (auto cert = triangle_certificate_for_complete(g, b))
      t.add("triangle certificate is minimum",
            verify_disjoint_circle_certificate(g, b, *cert) && frustration == b.size());
    if (unique_minimum_by_size(g, b))
      t.add("size bound gives the unique minimum", oracle::brute_is_unique_minimum(all, b));
  }
}

void cmd_oracle_verify(const SignedGraph& g, const Options& opt, Report& r) {
  auto parts = edge_components(g);
  r.data["components"] = json::array();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    section(r, i, parts.size(), parts[i]);
    CheckTable t;
    oracle_checks(parts[i].graph, opt, t);
    json rows = json::array();
    for (const auto& [name, ok] : t.rows) {
      rows.push_back({{"check", name}, {"pass", ok}});
      r.text << (ok ? "PASS  " : "FAIL  ") << name << "\n";
      if (!ok) r.fail(kPropertyFails);
    }
    r.data["components"].push_back({{"vertices", parts[i].to_host}, {"checks", rows}});
  }
  r.data["pass"] = r.exit == kOk;
}

void cmd_export_dot(const SignedGraph& g, const Options& opt, Report& r) {
  DotAnnotations notes;
  if (opt.edges) notes.highlight = parse_edge_list(g, *opt.edges);
  if (opt.family) {
    for (const auto& part : edge_components(g)) {
      auto res = packing_number(part.graph);
      for (std::size_t i = 0; i < res.family.size(); ++i) {
        if (notes.family.size() <= i) notes.family.emplace_back(g.skeleton());
        for (const auto& e : lift(res.family[i], part)) notes.family[i].insert(*g.find_edge(e.u, e.v));
      }
    }
  }
  auto dot = export_dot(g, notes);
  if (opt.output) {
    std::ofstream out(*opt.output);
    if (!out) throw PreconditionError("cannot write " + *opt.output);
    out << dot;
    r.data["output"] = *opt.output;
    r.text << "wrote " << *opt.output << "\n";
  } else {
    r.data["dot"] = dot;
    r.text << dot;
  }
}

using Handler = void (*)(const SignedGraph&, const Options&, Report&);

}  // namespace

EdgeSubset parse_edge_list(const SignedGraph& g, std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != '{' && c != '}' && c != ' ' && c != '\t') s += c;
  std::vector<Edge> edges;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    auto dash = item.find('-');
    try {
      if (dash == std::string::npos) throw std::invalid_argument(item);
      std::size_t used_a = 0, used_b = 0;
      int a = std::stoi(item.substr(0, dash), &used_a);
      int b = std::stoi(item.substr(dash + 1), &used_b);
      if (used_a != dash || used_b != item.size() - dash - 1) throw std::invalid_argument(item);
      edges.emplace_back(a, b);
    } catch (const std::logic_error&) {
      throw InvalidGraphError("bad edge \"" + item + "\"; expected u-v");
    }
  }
  return EdgeSubset(g, std::span<const Edge>(edges));
}

VertexSubset switching_for(const SignedGraph& g, const EdgeSubset& b) {
  b.require_host(g, "switching_for");
  auto w = check_balance(negate_edges(g, b));
  if (!w.balanced()) throw PreconditionError(to_string(b) + " is not a negation set");
  return w.bipartition->y_side();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Negation sets of signed graphs"};
  app.name("negsets");
  app.require_subcommand(1);
  Options opt;

  struct Command {
    const char* name;
    const char* help;
    Handler handler;
    bool edges, cert, max_n, seed, trace, dot;
  };
  const std::vector<Command> commands{
      {"balance", "Test balance; print a Harary bipartition or a negative circle", cmd_balance,
       false, false, false, false, false, false},
      {"negation-check", "Test whether --edges is a negation set", cmd_negation_check, true, false,
       false, false, false, false},
      {"minimal", "Test whether a negation set (default E-) is minimal", cmd_minimal, true, false,
       false, false, false, false},
      {"certify-minimum", "Certify a negation set as minimum with disjoint negative circles",
       cmd_certify_minimum, true, true, false, false, false, false},
      {"certify-unique", "Certify a negation set as the unique minimum", cmd_certify_unique, true,
       true, true, false, false, false},
      {"acyclic", "Find an acyclic negation set (maximum degree 4 cores)", cmd_acyclic, false,
       false, false, false, true, false},
      {"packing", "Packing number of E- and a maximum disjoint family", cmd_packing, false, false,
       false, false, false, false},
      {"frustration", "Frustration index by exhaustive switching", cmd_frustration, false, false,
       true, false, false, false},
      {"oracle-verify", "Cross-check every applicable operation against brute force",
       cmd_oracle_verify, false, false, true, true, false, false},
      {"export-dot", "Write the graph in Graphviz format", cmd_export_dot, true, false, false,
       false, false, true},
  };

  std::vector<std::pair<CLI::App*, Handler>> subs;
  for (const auto& c : commands) {
    auto* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("file", opt.file, ".sg input")->required()->check(CLI::ExistingFile);
    sub->add_flag("--json", opt.json, "Machine-readable output");
    if (c.edges) sub->add_option("--edges", opt.edges, "Edge set as u-v,u-v,...");
    if (c.cert) sub->add_option("--cert", opt.cert, "Certificate JSON file");
    if (c.max_n) sub->add_option("--max-n", opt.max_n, "Oracle vertex cap")->check(CLI::Range(1, 24));
    if (c.seed) sub->add_option("--seed", opt.seed, "Seed for sampled checks");
    if (c.trace) sub->add_flag("--trace", opt.trace, "Print the step log");
    if (c.dot) {
      sub->add_option("-o,--output", opt.output, "Output file (default stdout)");
      sub->add_flag("--family", opt.family, "Color a maximum packing family");
    }
    subs.emplace_back(sub, c.handler);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  Handler handler = nullptr;
  std::string name;
  for (const auto& [sub, h] : subs)
    if (sub->parsed()) {
      handler = h;
      name = sub->get_name();
    }

  Report report;
  try {
    auto g = read_sg_file(opt.file);
    handler(g, opt, report);
  } catch (const CLI::RequiredError& e) {
    err << "error: " << e.what() << " is required\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << opt.file << ": " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidGraphError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const MalformedCertificateError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "precondition: " << e.what() << "\n";
    return kPrecondition;
  } catch (const CapExceededError& e) {
    err << "precondition: " << e.what() << "\n";
    return kPrecondition;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }

  if (opt.json) {
    json doc{{"command", name}, {"file", opt.file}, {"exit", report.exit}, {"result", report.data}};
    out << doc.dump(2) << "\n";
  } else {
    out << report.text.str();
  }
  return report.exit;
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace negsets::cli

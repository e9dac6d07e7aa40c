#include "jsj/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include "jsj/blocks.hpp"
#include "jsj/commensurability.hpp"
#include "jsj/dot.hpp"
#include "jsj/errors.hpp"
#include "jsj/io.hpp"
#include "jsj/oracles.hpp"
#include "jsj/refinement.hpp"
#include "jsj/tree_construction.hpp"

namespace jsj::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Options {
  std::vector<std::string> inputs;
  std::string out_path;
  bool json = false;
  bool verify = false;
  std::string strategy = "auto";
  std::string order = "extremal";
  bool blockwise = false;
  bool check_ties = false;
  bool annotate = false;
  std::string vertex;
  std::uint64_t genus = 0;
};

// What a subcommand produced: a line-oriented report, its JSON mirror, an
// exit code, and any verification mismatches.
struct Report {
  std::ostringstream text;
  ordered_json json = ordered_json::object();
  int code = kOk;
  std::vector<std::string> mismatches;

  void mismatch(std::string what) { mismatches.push_back(std::move(what)); }
};

class VerifyMismatch : public Error {
public:
  using Error::Error;
};

Document load(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_document(text);
  } catch (const ParseError& e) {
    throw ParseError(path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " + e.what(),
                     e.line(), e.column());
  }
}

std::string doc_name(const Document& d) {
  return std::visit([](const auto& x) { return x.name; }, d);
}

void require_valid(const BipartiteMultigraph& g) {
  const auto report = validate_jsj_graph(g);
  if (!report.empty()) throw InvalidInput("not a valid JSJ graph: " + report.front());
}

void require_valid(const DegreeRefinement& m) {
  const auto report = validate_refinement(m);
  if (!report.empty()) throw InvalidInput("not a valid degree refinement: " + report.front());
}

// Graph view of a document; a matrix stands for its augmented graph of blocks.
BipartiteMultigraph as_graph(const Document& d) {
  if (const auto* g = std::get_if<GraphDocument>(&d)) return g->graph;
  const auto& m = std::get<MatrixDocument>(d).matrix;
  require_valid(m);
  return augmented_graph_of_blocks(m);
}

DegreeRefinement as_refinement(const Document& d) {
  if (const auto* g = std::get_if<GraphDocument>(&d)) {
    require_valid(g->graph);
    return degree_refinement(g->graph);
  }
  const auto& m = std::get<MatrixDocument>(d).matrix;
  require_valid(m);
  return m;
}

const GraphDocument& as_graph_document(const Document& d, const std::string& command) {
  if (const auto* g = std::get_if<GraphDocument>(&d)) return *g;
  throw InvalidInput(command + " needs a graph document with chi values");
}

PManifold as_pmanifold(const GraphDocument& d) {
  const auto chi = validate_chi(d.graph, d.chi);
  if (!chi.empty()) throw InvalidInput(chi.front());
  auto p = make_pmanifold(d.graph, d.chi);
  if (!p) throw InvalidInput("chi values must be integers");
  return *p;
}

ordered_json strings(const std::vector<std::string>& v) { return ordered_json(v); }

ordered_json rationals(std::span<const Rational> v) {
  ordered_json out = ordered_json::array();
  for (const auto& r : v) out.push_back(r.to_string());
  return out;
}

ordered_json matrix_json(const DegreeRefinement& m) {
  ordered_json out;
  out["blocks"] = strings(m.block_names());
  out["rows"] = ordered_json::array();
  for (const auto& row : m.rows()) {
    ordered_json r = ordered_json::array();
    for (ExtNat x : row) r.push_back(x.to_string());
    out["rows"].push_back(std::move(r));
  }
  return out;
}

std::string joined(const std::vector<std::string>& v, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += v[i];
  }
  return out;
}

std::vector<std::string> ids(const BipartiteMultigraph& g, const std::vector<VertexIndex>& vs) {
  std::vector<std::string> out;
  for (VertexIndex v : vs) out.push_back(g.id(v));
  return out;
}

void write_or_print(const Options& o, const std::string& text, Report& r) {
  if (o.out_path.empty()) {
    r.text << text;
  } else {
    write_file(o.out_path, text);
    r.text << "wrote " << o.out_path << "\n";
    r.json["out"] = o.out_path;
  }
}

// validate ------------------------------------------------------------------

void cmd_validate(const Options& o, Report& r) {
  const Document d = load(o.inputs.at(0));
  ValidationReport violations;
  if (const auto* g = std::get_if<GraphDocument>(&d)) {
    violations = validate_jsj_graph(g->graph);
    bool any_chi = false;
    for (VertexIndex v = 0; v < g->chi.size(); ++v) any_chi = any_chi || g->chi.get(v).has_value();
    if (any_chi)
      for (auto& x : validate_chi(g->graph, g->chi)) violations.push_back(std::move(x));
  } else {
    violations = validate_refinement(std::get<MatrixDocument>(d).matrix);
  }
  r.json["name"] = doc_name(d);
  r.json["valid"] = violations.empty();
  r.json["violations"] = strings(violations);
  if (violations.empty()) {
    r.text << "valid\n";
  } else {
    for (const auto& v : violations) r.text << "invalid: " << v << "\n";
    r.code = kInvalid;
  }
}

// refine --------------------------------------------------------------------

void cmd_refine(const Options& o, Report& r) {
  const Document d = load(o.inputs.at(0));
  const DegreeRefinement m = as_refinement(d);
  const auto names = m.block_names();
  r.json["name"] = doc_name(d);
  if (const auto* gd = std::get_if<GraphDocument>(&d)) {
    const auto& p = *m.partition();
    r.text << "partition:\n";
    ordered_json part = ordered_json::object();
    for (std::size_t b = 0; b < p.size(); ++b) {
      const auto members = ids(gd->graph, p.blocks[b]);
      r.text << "  " << names[b] << ": " << joined(members) << "\n";
      part[names[b]] = strings(members);
    }
    r.json["partition"] = std::move(part);
    if (o.verify) {
      RefinementOptions serial;
      serial.execution = Execution::Serial;
      if (degree_partition(gd->graph, serial) != p) r.mismatch("serial and parallel refinement differ");
      if (gd->graph.vertex_count() <= 10 && oracles::coarsest_equitable_bruteforce(gd->graph) != p)
        r.mismatch("partition differs from the brute-force coarsest equitable partition");
    }
  }
  r.text << "matrix:\n" << format_matrix(m);
  r.json["matrix"] = matrix_json(m);
}

// blocks --------------------------------------------------------------------

void edge_lines(const BipartiteMultigraph& g, bool with_multiplicity, Report& r, ordered_json& out) {
  out = ordered_json::array();
  for (const Edge& e : g.edges()) {
    r.text << "  " << g.id(e.u) << " -- " << g.id(e.v);
    ordered_json edge = ordered_json::array({g.id(e.u), g.id(e.v)});
    if (with_multiplicity) {
      r.text << " x" << e.multiplicity;
      edge.push_back(e.multiplicity);
    }
    r.text << "\n";
    out.push_back(std::move(edge));
  }
}

void cmd_blocks(const Options& o, Report& r) {
  const Document d = load(o.inputs.at(0));
  const DegreeRefinement m = as_refinement(d);
  const auto gb = graph_of_blocks(m);
  const auto g0 = augmented_graph_of_blocks(m);
  r.json["name"] = doc_name(d);
  r.json["blocks"] = strings(m.block_names());
  r.text << "blocks: " << joined(m.block_names()) << "\n";
  r.text << "graph of blocks:\n";
  edge_lines(gb, false, r, r.json["graph_of_blocks"]);
  r.text << "augmented graph of blocks:\n";
  edge_lines(g0, true, r, r.json["augmented_graph_of_blocks"]);
  if (o.verify && degree_refinement(g0) != m && !refinement_equivalent(degree_refinement(g0), m))
    r.mismatch("augmented graph of blocks does not realise the matrix");
}

// check ---------------------------------------------------------------------

PathStrategy strategy_of(const std::string& s) {
  if (s == "exhaustive") return PathStrategy::Exhaustive;
  if (s == "tree") return PathStrategy::TreePaths;
  return PathStrategy::Auto;
}

void cmd_check(const Options& o, Report& r) {
  const Document d = load(o.inputs.at(0));
  const DegreeRefinement m = as_refinement(d);
  const M1Verdict m1 = check_m1(m);
  M2Options m2o;
  m2o.strategy = m1.holds ? strategy_of(o.strategy) : PathStrategy::Exhaustive;
  const M2Verdict m2 = check_m2(m, m2o);

  r.json["name"] = doc_name(d);
  ordered_json j1;
  j1["holds"] = m1.holds;
  if (m1.holds) {
    r.text << "M1: PASS\n";
  } else if (m1.disconnected) {
    r.text << "M1: FAIL disconnected\n";
    j1["disconnected"] = true;
  } else {
    r.text << "M1: FAIL cycle " << joined(m1.cycle) << "\n";
    j1["cycle"] = strings(m1.cycle);
  }
  ordered_json j2;
  j2["holds"] = m2.holds;
  j2["paths_examined"] = m2.paths_examined;
  if (m2.holds) {
    r.text << "M2: PASS\n";
  } else {
    const auto& w = *m2.witness;
    r.text << "M2: FAIL path " << joined(w.path) << " i=" << w.i << " j=" << w.j << "\n";
    j2["path"] = strings(w.path);
    j2["i"] = w.i;
    j2["j"] = w.j;
  }
  r.json["m1"] = std::move(j1);
  r.json["m2"] = std::move(j2);
  r.code = m1.holds && m2.holds ? kOk : kNegative;

  if (o.verify && m1.holds) {
    M2Options ex, tp;
    ex.strategy = PathStrategy::Exhaustive;
    tp.strategy = PathStrategy::TreePaths;
    if (check_m2(m, ex).holds != check_m2(m, tp).holds) r.mismatch("M2 path enumerations disagree");
  }
}

// tree ----------------------------------------------------------------------

void cmd_tree(const Options& o, Report& r) {
  const Document d = load(o.inputs.at(0));
  const DegreeRefinement m = as_refinement(d);
  TorsionVerdict v = classify_refinement(m);
  if (v.torsion_qi && o.order == "topdown") {
    UnwrapOptions uo;
    uo.order = SplitOrder::TopDown;
    v.witness = unwrap_to_tree(augmented_graph_of_blocks(m), uo);
  }
  r.json["name"] = doc_name(d);
  r.json["torsion_qi"] = v.torsion_qi;
  if (!v.torsion_qi) {
    r.text << "torsion-qi: NO (" << v.failed << " fails)\n";
    r.json["failed"] = v.failed;
    r.code = kNegative;
    return;
  }
  const auto& w = *v.witness;
  r.text << "torsion-qi: YES\n" << format_trace(w.trace);
  r.text << "tree: " << w.tree.vertex_count() << " vertices, " << w.tree.bundle_count() << " edges\n";
  ordered_json trace = ordered_json::array();
  for (const auto& s : w.trace)
    trace.push_back({{"t", s.t}, {"f", s.f}, {"r", s.r}, {"vertices", s.vertices_after}});
  r.json["trace"] = std::move(trace);
  r.json["tree_vertices"] = w.tree.vertex_count();
  if (!o.out_path.empty()) {
    write_file(o.out_path, serialize_document(GraphDocument{doc_name(d) + "-tree", w.tree, {}}));
    r.text << "wrote " << o.out_path << "\n";
    r.json["out"] = o.out_path;
  }
  if (o.verify) {
    if (!is_tree(w.tree)) r.mismatch("witness is not a tree");
    if (!refinement_equivalent(degree_refinement(w.tree), m)) r.mismatch("witness tree has a different refinement");
  }
}

// qi ------------------------------------------------------------------------

void cmd_qi(const Options& o, Report& r) {
  if (o.inputs.size() != 2) throw InvalidInput("qi needs exactly two inputs");
  const Document a = load(o.inputs[0]), b = load(o.inputs[1]);
  const DegreeRefinement ma = as_refinement(a), mb = as_refinement(b);
  const auto w = refinement_equivalent(ma, mb);
  r.json["first"] = doc_name(a);
  r.json["second"] = doc_name(b);
  r.json["quasi_isometric"] = w.has_value();
  if (!w) {
    r.text << "quasi-isometric: NO\n";
    r.code = kNegative;
  } else {
    const auto na = ma.block_names(), nb = mb.block_names();
    std::vector<std::string> pairs;
    ordered_json perm = ordered_json::object();
    for (std::size_t i = 0; i < w->image.size(); ++i) {
      pairs.push_back(na[i] + "->" + nb[w->image[i]]);
      perm[na[i]] = nb[w->image[i]];
    }
    r.text << "quasi-isometric: YES\npermutation: " << joined(pairs) << "\n";
    r.json["permutation"] = std::move(perm);
    if (o.verify && !is_witness(ma, mb, *w)) r.mismatch("permutation does not conjugate the matrices");
  }
  if (o.verify && !w && ma.order() == mb.order() && ma.order() <= 8 &&
      !enumerate_refinement_equivalences(ma, mb).empty())
    r.mismatch("exhaustive permutation search found an equivalence");
}

// comm ----------------------------------------------------------------------

ordered_json verdict_json(const CommVerdict& v) {
  ordered_json j;
  j["verdict"] = std::string(verdict_name(v.kind));
  j["first"] = rationals(v.first);
  j["second"] = rationals(v.second);
  if (v.witness) j["witness"] = {v.witness->k.str(), v.witness->k_prime.str()};
  if (!v.detail.empty()) j["detail"] = v.detail;
  return j;
}

void print_verdict(const char* label, const CommVerdict& v, Report& r) {
  r.text << label << ": " << verdict_name(v.kind);
  if (!v.first.empty() || !v.second.empty()) r.text << " " << format_vector(v.first) << " vs " << format_vector(v.second);
  if (v.witness) r.text << " k=" << v.witness->k << " k'=" << v.witness->k_prime;
  if (!v.detail.empty()) r.text << " (" << v.detail << ")";
  r.text << "\n";
}

void cmd_comm(const Options& o, Report& r) {
  if (o.inputs.size() != 2) throw InvalidInput("comm needs exactly two inputs");
  const Document da = load(o.inputs[0]), db = load(o.inputs[1]);
  const auto& a = as_graph_document(da, "comm");
  const auto& b = as_graph_document(db, "comm");
  require_valid(a.graph);
  require_valid(b.graph);
  const CommVerdict bv = block_obstruction(a.graph, a.chi, b.graph, b.chi,
                                           o.blockwise ? BlockComparison::Blockwise : BlockComparison::Sorted);
  print_verdict("block", bv, r);
  r.json["first"] = a.name;
  r.json["second"] = b.name;
  r.json["block"] = verdict_json(bv);

  std::vector<VerdictKind> kinds{bv.kind};
  const auto pa = make_pmanifold(a.graph, a.chi), pb = make_pmanifold(b.graph, b.chi);
  if (pa && pb) {
    const CommVerdict mv = matching_obstruction(*pa, *pb);
    print_verdict("matching", mv, r);
    r.json["matching"] = verdict_json(mv);
    kinds.push_back(mv.kind);
  } else {
    r.text << "matching: INAPPLICABLE (chi values are not all integers)\n";
    r.json["matching"] = {{"verdict", "INAPPLICABLE"}, {"detail", "chi values are not all integers"}};
    kinds.push_back(VerdictKind::Inapplicable);
  }
  if (std::ranges::count(kinds, VerdictKind::Obstructed) > 0)
    r.code = kNegative;
  else if (std::ranges::count(kinds, VerdictKind::Inapplicable) == std::ssize(kinds))
    r.code = kInapplicable;
}

// matching ------------------------------------------------------------------

void cmd_matching(const Options& o, Report& r) {
  const Document d = load(o.inputs.at(0));
  const auto& gd = as_graph_document(d, "matching");
  const PManifold p = as_pmanifold(gd);
  r.json["name"] = gd.name;
  if (o.verify && p.graph().vertices_of_kind(VertexKind::Fuchsian).size() <= 20) {
    auto solved = enumerate_matchings(p);
    std::sort(solved.begin(), solved.end());
    if (solved != oracles::matchings_bruteforce(p)) r.mismatch("matching enumeration differs from brute force");
  }
  MatchingVectorOptions mo;
  mo.check_tie_invariance = o.check_ties;
  try {
    const auto res = matching_vector(p, mo);
    r.text << "vector: " << format_vector(res.entries) << "\n";
    ordered_json layers = ordered_json::array();
    for (std::size_t i = 0; i < res.layers.size(); ++i) {
      const auto& layer = res.layers[i];
      r.text << "layer " << i + 1 << ": chi=" << layer.chi.to_string() << " surfaces " << joined(layer.surfaces) << "\n";
      layers.push_back({{"chi", layer.chi.to_string()}, {"surfaces", layer.surfaces}});
    }
    for (const auto& note : res.diagnostics) r.text << "note: " << note << "\n";
    r.json["vector"] = rationals(res.entries);
    r.json["layers"] = std::move(layers);
    r.json["diagnostics"] = strings(res.diagnostics);
  } catch (const NoMatching& e) {
    r.text << "no matching at layer " << e.layer() << "\n";
    r.json["no_matching_layer"] = e.layer();
    r.code = kNegative;
  }
}

// family --------------------------------------------------------------------

void cmd_family(const Options& o, Report& r) {
  const Document d = load(o.inputs.at(0));
  const auto& gd = as_graph_document(d, "family");
  const PManifold p = as_pmanifold(gd);
  const VertexIndex v = p.graph().index_of(o.vertex);
  const PManifold q = genus_family(p, v, o.genus);
  const auto doc = make_document(gd.name + "-g" + std::to_string(o.genus), q);
  if (o.out_path.empty()) {
    r.text << serialize_document(doc);
  } else {
    write_file(o.out_path, serialize_document(doc));
    r.text << "chi(" << o.vertex << ") = " << q.chi(v) << "\nwrote " << o.out_path << "\n";
  }
  r.json["name"] = doc.name;
  r.json["vertex"] = o.vertex;
  r.json["chi"] = q.chi(v);
  if (!o.out_path.empty()) r.json["out"] = o.out_path;
}

// dot -----------------------------------------------------------------------

void cmd_dot(const Options& o, Report& r) {
  const Document d = load(o.inputs.at(0));
  const BipartiteMultigraph g = as_graph(d);
  std::vector<std::string> notes;
  if (o.annotate)
    if (const auto* gd = std::get_if<GraphDocument>(&d))
      for (VertexIndex v = 0; v < gd->chi.size(); ++v)
        notes.push_back(gd->chi.get(v) ? "chi=" + gd->chi.get(v)->to_string() : "");
  const std::string text = export_dot(g, notes, doc_name(d));
  if (o.json) {
    r.json["dot"] = text;
    if (!o.out_path.empty()) write_file(o.out_path, text), r.json["out"] = o.out_path;
  } else {
    write_or_print(o, text, r);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"JSJ graph toolkit: quasi-isometry and commensurability invariants", "jsjtool"};
  app.require_subcommand(1);
  Options o;
  using Handler = void (*)(const Options&, Report&);
  std::vector<std::pair<CLI::App*, Handler>> handlers;

  auto add = [&](const char* name, const char* help, Handler h, std::size_t inputs) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("inputs", o.inputs, inputs == 2 ? "two input documents" : "input document")
        ->required()
        ->expected(static_cast<int>(inputs));
    sub->add_flag("--json", o.json, "structured output");
    sub->add_flag("--verify", o.verify, "cross-check against brute-force oracles");
    handlers.emplace_back(sub, h);
    return sub;
  };
  add("validate", "report JSJ-graph and chi violations", cmd_validate, 1);
  add("refine", "degree partition and degree refinement", cmd_refine, 1);
  add("blocks", "graph of blocks and augmented graph of blocks", cmd_blocks, 1);
  add("check", "conditions M1 and M2", cmd_check, 1)
      ->add_option("--strategy", o.strategy, "M2 path search")
      ->check(CLI::IsMember({"auto", "exhaustive", "tree"}));
  auto* tree = add("tree", "torsion-group classification and witness tree", cmd_tree, 1);
  tree->add_option("--out", o.out_path, "write the witness tree here");
  tree->add_option("--order", o.order, "split order")->check(CLI::IsMember({"extremal", "topdown"}));
  add("qi", "quasi-isometry test", cmd_qi, 2);
  add("comm", "commensurability obstructions", cmd_comm, 2)->add_flag("--blockwise", o.blockwise,
                                                                     "compare block vectors in block order");
  add("matching", "matching Euler characteristic vector", cmd_matching, 1)
      ->add_flag("--check-ties", o.check_ties, "verify independence from tie-breaking");
  auto* family = add("family", "replace one surface by a genus-g surface", cmd_family, 1);
  family->add_option("--vertex", o.vertex, "surface id")->required();
  family->add_option("--genus", o.genus, "genus")->required()->check(CLI::PositiveNumber);
  family->add_option("--out", o.out_path, "output document");
  auto* dot = add("dot", "Graphviz export", cmd_dot, 1);
  dot->add_option("--out", o.out_path, "output file");
  dot->add_flag("--annotate", o.annotate, "show chi values");

  std::vector<std::string> argv_store{"jsjtool"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  Report r;
  try {
    for (auto& [sub, handler] : handlers)
      if (sub->parsed()) handler(o, r);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResourceLimit;
  } catch (const Cancelled& e) {
    err << "cancelled: " << e.what() << "\n";
    return kResourceLimit;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }

  if (o.verify) r.json["verify"] = r.mismatches.empty() ? "ok" : "mismatch";
  if (o.json)
    out << r.json.dump(2) << "\n";
  else
    out << r.text.str();
  for (const auto& m : r.mismatches) err << "verify: " << m << "\n";
  if (!r.mismatches.empty()) return kVerifyFailed;
  if (o.verify && !o.json) out << "verify: ok\n";
  return r.code;
}

}  // namespace jsj::cli

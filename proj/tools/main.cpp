#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mbqc/ctc.hpp"
#include "mbqc/pattern_io.hpp"
#include "mbqc/sim.hpp"
#include "mbqc/transforms.hpp"

// mbqc <command> <file> [flags]: analysis/transform/simulation reports over
// pattern files. Human output by default, --json for the machine schema;
// both are byte-stable for identical inputs.

using json = nlohmann::ordered_json;
using namespace mbqc;

namespace {

std::string fmt_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

std::vector<std::string> matrix_rows(const BitMatrix& m) {
  std::vector<std::string> out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(m.row(r).to_string());
  return out;
}

void print_matrix(std::string& out, const std::string& name, const BitMatrix& m) {
  out += name + ":\n";
  if (m.rows() == 0 || m.cols() == 0) {
    out += "(empty " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ")\n";
    return;
  }
  for (auto& row : matrix_rows(m)) out += row + "\n";
}

json set_json(const QubitSet& s) { return json(s); }

/// s-row rendered as "s1+s3", or "0" for the empty row.
std::string outcome_sum(const BitVector& row) {
  std::string out;
  for (std::size_t i : row.ones()) {
    if (!out.empty()) out += "+";
    out += "s" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::SyntaxError:
    case ErrorCode::MixedSource:
    case ErrorCode::IndexOutOfRange:
    case ErrorCode::WrongStabCount:
      return 1;
    case ErrorCode::NotRunnable:
      return 3;
    case ErrorCode::SizeGuard:
      return 4;
    default:
      return 2;
  }
}

struct Common {
  std::string file;
  std::string igauge_str, ocomp_str;
  CLI::Option* ig_opt = nullptr;
  CLI::Option* oc_opt = nullptr;
  bool json_mode = false;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("file", c.file, "pattern file")->required();
  c.ig_opt = sub->add_option("--igauge", c.igauge_str,
                             "comma-separated gauge-input qubits (\"\" declares the empty set)");
  c.oc_opt = sub->add_option("--ocomp", c.ocomp_str,
                             "comma-separated computational-output qubits (\"\" declares the empty set)");
  sub->add_flag("--json", c.json_mode, "machine-readable output");
}

QubitSet parse_set_arg(const std::string& arg, int n, ErrorCode bad) {
  std::vector<int> qs;
  std::size_t start = 0;
  while (start < arg.size()) {
    std::size_t end = arg.find(',', start);
    if (end == std::string::npos) end = arg.size();
    std::string tok = arg.substr(start, end - start);
    std::size_t used = 0;
    int q = 0;
    try {
      q = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw Error(bad, "bad qubit label '" + tok + "'");
    }
    if (used != tok.size()) throw Error(bad, "bad qubit label '" + tok + "'");
    if (q < 1 || q > n)
      throw Error(bad, "qubit " + std::to_string(q) + " outside 1.." + std::to_string(n), q);
    qs.push_back(q);
    start = end + 1;
  }
  return make_set(qs);
}

struct Resolved {
  ProcessingRelations rel;
  std::vector<std::string> warnings;
};

std::pair<QubitSet, QubitSet> greedy_default_pair(const GeneratorMatrix& g) {
  const int n = g.n();
  auto rr = rref(g.phi.hstack(g.s));
  std::vector<bool> in_basis(2 * n, false);
  for (std::size_t col : rr.pivots) in_basis[col] = true;
  QubitSet ig, oc;
  for (int i = 1; i <= n; ++i)
    if (in_basis[i - 1]) ig.push_back(i);
  for (int a = 1; a <= n; ++a)
    if (!in_basis[n + a - 1]) oc.push_back(a);
  return {ig, oc};
}

Resolved resolve_relations(const GeneratorMatrix& g, const Pattern& pat, const Common& c) {
  const bool cli_ig = c.ig_opt && c.ig_opt->count() > 0;
  const bool cli_oc = c.oc_opt && c.oc_opt->count() > 0;
  const bool have_ig = cli_ig || pat.igauge_declared;
  const bool have_oc = cli_oc || pat.ocomp_declared;
  QubitSet ig = cli_ig ? parse_set_arg(c.igauge_str, g.n(), ErrorCode::InvalidGaugeSet)
                       : pat.declared_igauge;
  QubitSet oc = cli_oc ? parse_set_arg(c.ocomp_str, g.n(), ErrorCode::InvalidOutputSet)
                       : pat.declared_ocomp;
  Resolved out;
  if (have_ig && have_oc) {
    try {
      out.rel = derive_processing(g, ig, oc);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::InvalidGaugeSet && e.code() != ErrorCode::InvalidOutputSet) throw;
      auto ex = extremalize(g, ig, oc);
      out.warnings.push_back("warning: declared pair igauge=" + set_to_string(ig) +
                             " ocomp=" + set_to_string(oc) + " is not extremal; using igauge=" +
                             set_to_string(ex.igauge) + " ocomp=" + set_to_string(ex.ocomp));
      out.rel = ex.relations;
    }
    return out;
  }
  if (have_ig || have_oc) {
    QubitSet I = have_ig ? ig : set_complement({}, g.n());
    QubitSet O = have_oc ? oc : set_complement({}, g.n());
    auto ex = extremalize(g, I, O);
    if (have_ig && ex.igauge != ig)
      out.warnings.push_back("warning: declared igauge=" + set_to_string(ig) + " reduced to " +
                             set_to_string(ex.igauge));
    if (have_oc && ex.ocomp != oc)
      out.warnings.push_back("warning: declared ocomp=" + set_to_string(oc) + " reduced to " +
                             set_to_string(ex.ocomp));
    out.rel = ex.relations;
    return out;
  }
  auto [dig, doc] = greedy_default_pair(g);
  out.rel = derive_processing(g, dig, doc);
  return out;
}

std::vector<std::pair<int, int>> relation_pairs(const TemporalRelation& tr) {
  std::vector<std::pair<int, int>> pairs;
  const int n = static_cast<int>(tr.closure.rows());
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      if (tr.closure.get(a - 1, b - 1)) pairs.emplace_back(a, b);
  return pairs;
}

std::string cycle_to_string(const std::vector<int>& cyc) {
  std::string out = "(";
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(cyc[i]);
  }
  return out + ")";
}

void emit(const std::string& text) { std::fputs(text.c_str(), stdout); }
void emit_json(const json& j) { emit(j.dump(2) + "\n"); }

int cmd_analyze(const Common& c, bool require_order) {
  Pattern pat = parse_pattern_file(c.file);
  GeneratorMatrix g = pat.to_generator();
  Resolved res = resolve_relations(g, pat, c);
  const ProcessingRelations& p = res.rel;
  const int n = p.n();
  Cones cn = cones(p.T);
  TemporalRelation tr = temporal_relation(p.T);
  CtcReport ctcs = find_ctcs(p.T);
  bool invariant = check_invariance(p, g).all_ok();
  auto pairs = relation_pairs(tr);
  const std::string order = tr.is_strict_partial_order ? "strict-partial-order" : "ctc";

  if (c.json_mode) {
    json j;
    j["qubits"] = n;
    json planes = json::array(), angles = json::array();
    for (int a = 0; a < n; ++a) {
      planes.push_back(pat.planes[a].to_string());
      angles.push_back(pat.angles[a]);
    }
    j["planes"] = planes;
    j["angles"] = angles;
    j["igauge"] = set_json(p.igauge);
    j["ocomp"] = set_json(p.ocomp);
    j["inputs"] = set_json(cn.inputs);
    j["outputs"] = set_json(cn.outputs);
    j["T"] = matrix_rows(p.T);
    j["H"] = matrix_rows(p.H);
    j["Z"] = matrix_rows(p.Z);
    j["R"] = matrix_rows(p.R);
    json fc = json::array(), bc = json::array();
    for (int a = 0; a < n; ++a) {
      fc.push_back(set_json(cn.fc[a]));
      bc.push_back(set_json(cn.bc[a]));
    }
    j["fc"] = fc;
    j["bc"] = bc;
    j["order"] = order;
    j["self_loops"] = set_json(ctcs.self_loops);
    j["cycles"] = json(ctcs.cycles);
    json rel = json::array();
    for (auto [a, b] : pairs) rel.push_back(json::array({a, b}));
    j["relation"] = rel;
    j["gauge_invariance"] = invariant;
    j["warnings"] = json(res.warnings);
    emit_json(j);
  } else {
    std::string out;
    for (auto& w : res.warnings) out += w + "\n";
    out += "qubits: " + std::to_string(n) + "\n";
    out += "planes:";
    for (int a = 0; a < n; ++a) out += " " + pat.planes[a].to_string();
    out += "\nangles:";
    for (int a = 0; a < n; ++a) out += " " + fmt_real(pat.angles[a]);
    out += "\n";
    out += "igauge: " + set_to_string(p.igauge) + "\n";
    out += "ocomp: " + set_to_string(p.ocomp) + "\n";
    out += "inputs: " + set_to_string(cn.inputs) + "\n";
    out += "outputs: " + set_to_string(cn.outputs) + "\n";
    out += std::string("igauge-equals-inputs: ") + (p.igauge == cn.inputs ? "true" : "false") + "\n";
    out += std::string("ocomp-equals-outputs: ") + (p.ocomp == cn.outputs ? "true" : "false") + "\n";
    print_matrix(out, "T", p.T);
    print_matrix(out, "H", p.H);
    print_matrix(out, "Z", p.Z);
    print_matrix(out, "R", p.R);
    for (int a = 1; a <= n; ++a) out += "fc(" + std::to_string(a) + "): " + set_to_string(cn.fc[a - 1]) + "\n";
    for (int a = 1; a <= n; ++a) out += "bc(" + std::to_string(a) + "): " + set_to_string(cn.bc[a - 1]) + "\n";
    out += "order: " + order + "\n";
    if (!tr.is_strict_partial_order) {
      out += "ctc-self-loops: " + set_to_string(ctcs.self_loops) + "\n";
      for (auto& cyc : ctcs.cycles) out += "ctc-cycle: " + cycle_to_string(cyc) + "\n";
    }
    out += "relation:";
    if (pairs.empty()) out += " (none)";
    for (auto [a, b] : pairs) out += " " + std::to_string(a) + "<" + std::to_string(b);
    out += "\n";
    out += std::string("gauge-invariance: ") + (invariant ? "pass" : "fail") + "\n";
    emit(out);
  }
  if (require_order && !tr.is_strict_partial_order) return 3;
  return 0;
}

int cmd_enumerate(const Common& c) {
  Pattern pat = parse_pattern_file(c.file);
  GeneratorMatrix g = pat.to_generator();
  auto rels = enumerate_relations(g);
  if (c.json_mode) {
    json j;
    j["count"] = rels.size();
    json arr = json::array();
    for (auto& p : rels) {
      json e;
      e["igauge"] = set_json(p.igauge);
      e["ocomp"] = set_json(p.ocomp);
      e["T"] = matrix_rows(p.T);
      arr.push_back(e);
    }
    j["relations"] = arr;
    emit_json(j);
  } else {
    std::string out = "count: " + std::to_string(rels.size()) + "\n";
    for (std::size_t i = 0; i < rels.size(); ++i) {
      out += "[" + std::to_string(i + 1) + "] igauge: " + set_to_string(rels[i].igauge) +
             " ocomp: " + set_to_string(rels[i].ocomp) + "\n";
      print_matrix(out, "T", rels[i].T);
    }
    emit(out);
  }
  return 0;
}

int cmd_flip(const Common& c, int qubit) {
  Pattern pat = parse_pattern_file(c.file);
  GeneratorMatrix g = pat.to_generator();
  Resolved res = resolve_relations(g, pat, c);
  ProcessingRelations flipped = flip_plane(res.rel, qubit);
  MeasurementPlane before = pat.planes[qubit - 1];
  double angle_before = pat.angles[qubit - 1];
  double angle_after = flip_angle_update().apply(angle_before);
  if (c.json_mode) {
    json j;
    j["qubit"] = qubit;
    j["plane_before"] = before.to_string();
    j["plane_after"] = before.flipped().to_string();
    j["angle_before"] = angle_before;
    j["angle_after"] = angle_after;
    j["igauge"] = set_json(flipped.igauge);
    j["ocomp"] = set_json(flipped.ocomp);
    j["T"] = matrix_rows(flipped.T);
    j["H"] = matrix_rows(flipped.H);
    j["Z"] = matrix_rows(flipped.Z);
    j["R"] = matrix_rows(flipped.R);
    j["warnings"] = json(res.warnings);
    emit_json(j);
  } else {
    std::string out;
    for (auto& w : res.warnings) out += w + "\n";
    out += "qubit: " + std::to_string(qubit) + "\n";
    out += "plane: " + before.to_string() + " -> " + before.flipped().to_string() + "\n";
    out += "angle: " + fmt_real(angle_before) + " -> " + fmt_real(angle_after) + "\n";
    out += "igauge: " + set_to_string(flipped.igauge) + "\n";
    out += "ocomp: " + set_to_string(flipped.ocomp) + "\n";
    print_matrix(out, "T", flipped.T);
    print_matrix(out, "H", flipped.H);
    print_matrix(out, "Z", flipped.Z);
    print_matrix(out, "R", flipped.R);
    emit(out);
  }
  return 0;
}

int cmd_lc(const Common& c, int qubit) {
  Pattern pat = parse_pattern_file(c.file);
  GeneratorMatrix g = pat.to_generator();
  Resolved res = resolve_relations(g, pat, c);
  LocalCompResult lc = local_comp(res.rel.T, qubit);
  if (c.json_mode) {
    json j;
    j["qubit"] = qubit;
    j["replanted"] = set_json(lc.replanted);
    j["T"] = matrix_rows(lc.T);
    j["warnings"] = json(res.warnings);
    emit_json(j);
  } else {
    std::string out;
    for (auto& w : res.warnings) out += w + "\n";
    out += "qubit: " + std::to_string(qubit) + "\n";
    out += "replanted: " + set_to_string(lc.replanted) + "\n";
    print_matrix(out, "T", lc.T);
    emit(out);
  }
  return 0;
}

int cmd_orbit(const Common& c) {
  Pattern pat = parse_pattern_file(c.file);
  GeneratorMatrix g = pat.to_generator();
  Resolved res = resolve_relations(g, pat, c);
  Orbit orb = orbit(res.rel.T);
  if (c.json_mode) {
    json j;
    j["count"] = orb.elements.size();
    json els = json::array();
    for (auto& t : orb.elements) els.push_back(matrix_rows(t));
    j["elements"] = els;
    json perms = json::array();
    for (auto& perm : orb.perms) perms.push_back(json(perm));
    j["perms"] = perms;
    j["warnings"] = json(res.warnings);
    emit_json(j);
  } else {
    std::string out;
    for (auto& w : res.warnings) out += w + "\n";
    out += "count: " + std::to_string(orb.elements.size()) + "\n";
    for (std::size_t i = 0; i < orb.elements.size(); ++i)
      print_matrix(out, "[" + std::to_string(i + 1) + "] T", orb.elements[i]);
    for (std::size_t q = 0; q < orb.perms.size(); ++q) {
      out += "perm(" + std::to_string(q + 1) + "):";
      for (std::size_t idx : orb.perms[q]) out += " " + std::to_string(idx + 1);
      out += "\n";
    }
    emit(out);
  }
  return 0;
}

int cmd_remove_ctc(const Common& c) {
  Pattern pat = parse_pattern_file(c.file);
  GeneratorMatrix g = pat.to_generator();
  Resolved res = resolve_relations(g, pat, c);
  RemovalTrace trace = remove_all(g, res.rel);
  TemporalRelation tr = temporal_relation(trace.p.T);
  const std::string order = tr.is_strict_partial_order ? "strict-partial-order" : "ctc";
  if (c.json_mode) {
    json j;
    j["steps"] = json::array();
    for (auto& st : trace.steps) {
      json e;
      e["kind"] = st.kind == RemovalStep::Kind::SelfLoop ? "self-loop" : "cycle";
      e["qubits"] = json(st.qubits);
      e["flag_qubit"] = st.flag_qubit;
      e["flag_row"] = st.flag_row.to_string();
      j["steps"].push_back(e);
    }
    j["igauge"] = set_json(trace.p.igauge);
    j["ocomp"] = set_json(trace.p.ocomp);
    j["flag_qubits"] = set_json(trace.flag_qubits);
    j["flag_bits"] = json(trace.flag_bits());
    j["order"] = order;
    j["T"] = matrix_rows(trace.p.T);
    j["H"] = matrix_rows(trace.p.H);
    j["Z"] = matrix_rows(trace.p.Z);
    j["R"] = matrix_rows(trace.p.R);
    j["warnings"] = json(res.warnings);
    emit_json(j);
  } else {
    std::string out;
    for (auto& w : res.warnings) out += w + "\n";
    out += "steps: " + std::to_string(trace.steps.size()) + "\n";
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
      auto& st = trace.steps[i];
      out += "step " + std::to_string(i + 1) + ": ";
      if (st.kind == RemovalStep::Kind::SelfLoop)
        out += "self-loop at " + std::to_string(st.qubits[0]);
      else
        out += "cycle " + cycle_to_string(st.qubits);
      out += ", flag o" + std::to_string(st.flag_qubit) + " = " + outcome_sum(st.flag_row) + "\n";
    }
    out += "igauge: " + set_to_string(trace.p.igauge) + "\n";
    out += "ocomp: " + set_to_string(trace.p.ocomp) + "\n";
    out += "flag-qubits: " + set_to_string(trace.flag_qubits) + "\n";
    out += "flag-bits: " + set_to_string(trace.flag_bits()) + "\n";
    out += "order: " + order + "\n";
    print_matrix(out, "T", trace.p.T);
    print_matrix(out, "H", trace.p.H);
    print_matrix(out, "Z", trace.p.Z);
    print_matrix(out, "R", trace.p.R);
    emit(out);
  }
  return 0;
}

int cmd_simulate(const Common& c, const std::string& gauge_bits, const std::string& postselect,
                 bool compare_gauges) {
  Pattern pat = parse_pattern_file(c.file);
  GeneratorMatrix g = pat.to_generator();
  Resolved res = resolve_relations(g, pat, c);
  const ProcessingRelations& p = res.rel;
  StateVector state = resource_state(g);

  RunConfig cfg;
  cfg.angles = pat.angles;
  cfg.gauge = BitVector(p.k());
  if (!gauge_bits.empty()) {
    if (static_cast<int>(gauge_bits.size()) != p.k())
      throw Error(ErrorCode::InvalidGaugeSet,
                  "--gauge needs exactly " + std::to_string(p.k()) + " bits");
    for (int i = 0; i < p.k(); ++i) {
      if (gauge_bits[i] != '0' && gauge_bits[i] != '1')
        throw Error(ErrorCode::InvalidGaugeSet, "--gauge bits must be 0 or 1");
      cfg.gauge.set(i, gauge_bits[i] == '1');
    }
  }
  for (std::size_t start = 0; start < postselect.size();) {
    std::size_t end = postselect.find(',', start);
    if (end == std::string::npos) end = postselect.size();
    std::string item = postselect.substr(start, end - start);
    std::size_t eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 2 != item.size() ||
        (item[eq + 1] != '0' && item[eq + 1] != '1'))
      throw Error(ErrorCode::InvalidOutputSet, "--postselect items must look like <bit>=<0|1>");
    int idx = 0;
    try {
      idx = std::stoi(item.substr(0, eq));
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidOutputSet, "--postselect items must look like <bit>=<0|1>");
    }
    if (idx < 1 || idx > p.k())
      throw Error(ErrorCode::InvalidOutputSet,
                  "--postselect bit " + std::to_string(idx) + " outside 1.." + std::to_string(p.k()));
    cfg.postselect[idx] = item[eq + 1] - '0';
    start = end + 1;
  }

  ExactDistribution dist;
  double success = -1.0;
  if (cfg.postselect.empty()) {
    dist = run_exact(state, p, cfg);
  } else {
    PostselectedRun run = run_postselected(state, p, cfg);
    dist = run.dist;
    success = run.success_probability;
  }
  std::optional<bool> independent;
  if (compare_gauges) independent = verify_gauge_independence(state, p, pat.angles);

  if (c.json_mode) {
    json j;
    j["qubits"] = p.n();
    j["igauge"] = set_json(p.igauge);
    j["ocomp"] = set_json(p.ocomp);
    j["gauge"] = cfg.gauge.to_string();
    if (success >= 0) j["success_probability"] = success;
    json d = json::object();
    for (auto& [key, pr] : dist.support) d[key] = pr;
    j["distribution"] = d;
    j["total"] = dist.total();
    if (independent) j["gauge_independent"] = *independent;
    j["warnings"] = json(res.warnings);
    emit_json(j);
  } else {
    std::string out;
    for (auto& w : res.warnings) out += w + "\n";
    out += "qubits: " + std::to_string(p.n()) + "\n";
    out += "igauge: " + set_to_string(p.igauge) + "\n";
    out += "ocomp: " + set_to_string(p.ocomp) + "\n";
    out += "gauge: " + (p.k() ? cfg.gauge.to_string() : std::string("-")) + "\n";
    if (success >= 0) out += "success-probability: " + fmt_real(success) + "\n";
    out += "distribution:\n";
    for (auto& [key, pr] : dist.support)
      out += (key.empty() ? std::string("-") : key) + " " + fmt_real(pr) + "\n";
    out += "total: " + fmt_real(dist.total()) + "\n";
    if (independent) out += std::string("gauge-independent: ") + (*independent ? "true" : "false") + "\n";
    emit(out);
  }
  return 0;
}

int cmd_export_dot(const Common& c) {
  Pattern pat = parse_pattern_file(c.file);
  GeneratorMatrix g = pat.to_generator();
  Resolved res = resolve_relations(g, pat, c);
  const ProcessingRelations& p = res.rel;
  const int n = p.n();
  std::string out = "digraph pattern {\n";
  for (int q = 1; q <= n; ++q) {
    bool ig = set_contains(p.igauge, q), oc = set_contains(p.ocomp, q);
    out += "  " + std::to_string(q);
    if (ig && oc)
      out += " [shape=Msquare]";
    else if (ig)
      out += " [shape=box]";
    else if (oc)
      out += " [shape=doublecircle]";
    out += ";\n";
  }
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      if (p.T.get(b - 1, a - 1)) out += "  " + std::to_string(a) + " -> " + std::to_string(b) + ";\n";
  out += "}\n";
  emit(out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"MBQC pattern analysis: processing relations, temporal order, transformations, exact simulation"};
  app.require_subcommand(1);

  Common ca, ce, cf, cl, co, cr, cs, cd;
  bool require_order = false;
  int flip_qubit = 0, lc_qubit = 0;
  std::string gauge_bits, postselect;
  bool compare_gauges = false;

  CLI::App* analyze = app.add_subcommand("analyze", "derive processing relations and temporal order");
  add_common(analyze, ca);
  analyze->add_flag("--require-order", require_order, "exit 3 when the pattern has CTCs");

  CLI::App* enumerate = app.add_subcommand("enumerate", "list every extremal gauge/output pair");
  add_common(enumerate, ce);

  CLI::App* flip = app.add_subcommand("flip", "flip the measurement plane at a qubit");
  add_common(flip, cf);
  flip->add_option("--qubit", flip_qubit, "qubit to flip")->required();

  CLI::App* lc = app.add_subcommand("lc", "modified local complementation at a qubit");
  add_common(lc, cl);
  lc->add_option("--qubit", lc_qubit, "complementation site")->required();

  CLI::App* orb = app.add_subcommand("orbit", "closure of T under local complementation");
  add_common(orb, co);

  CLI::App* rm = app.add_subcommand("remove-ctc", "break every closed time-like curve");
  add_common(rm, cr);

  CLI::App* sim = app.add_subcommand("simulate", "exact output distribution");
  add_common(sim, cs);
  sim->add_option("--gauge", gauge_bits, "gauge bits, one per igauge qubit (default all 0)");
  sim->add_option("--postselect", postselect, "comma-separated <bit>=<0|1> conditions");
  sim->add_flag("--compare-gauges", compare_gauges, "check gauge independence across all gauges");

  CLI::App* dot = app.add_subcommand("export-dot", "DOT graph of the influence matrix");
  add_common(dot, cd);

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) return cmd_analyze(ca, require_order);
    if (enumerate->parsed()) return cmd_enumerate(ce);
    if (flip->parsed()) return cmd_flip(cf, flip_qubit);
    if (lc->parsed()) return cmd_lc(cl, lc_qubit);
    if (orb->parsed()) return cmd_orbit(co);
    if (rm->parsed()) return cmd_remove_ctc(cr);
    if (sim->parsed()) return cmd_simulate(cs, gauge_bits, postselect, compare_gauges);
    if (dot->parsed()) return cmd_export_dot(cd);
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}

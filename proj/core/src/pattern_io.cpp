#include "mbqc/pattern_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace mbqc {

namespace {

int parse_int(const std::string& tok, int line) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &used);
  } catch (const std::exception&) {
    throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line) + ": expected integer, got '" + tok + "'", line);
  }
  if (used != tok.size())
    throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line) + ": expected integer, got '" + tok + "'", line);
  return v;
}

double parse_real(const std::string& tok, int line) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(tok, &used);
  } catch (const std::exception&) {
    throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line) + ": expected real, got '" + tok + "'", line);
  }
  if (used != tok.size())
    throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line) + ": expected real, got '" + tok + "'", line);
  return v;
}

int parse_qubit(const std::string& tok, int n, int line) {
  int q = parse_int(tok, line);
  if (q < 1 || q > n)
    throw Error(ErrorCode::IndexOutOfRange,
                "line " + std::to_string(line) + ": qubit " + std::to_string(q) + " outside 1.." + std::to_string(n),
                line);
  return q;
}

[[noreturn]] void syntax(int line, const std::string& what) {
  throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line) + ": " + what, line);
}

}  // namespace

Pattern parse_pattern(const std::string& text) {
  Pattern pat;
  bool have_qubits = false, have_edges = false, have_igauge = false, have_ocomp = false;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    const std::string& kw = tok[0];

    if (kw == "qubits") {
      if (have_qubits) syntax(line, "duplicate qubits line");
      if (tok.size() != 2) syntax(line, "usage: qubits <n>");
      pat.n = parse_int(tok[1], line);
      if (pat.n < 1) syntax(line, "qubit count must be positive");
      pat.planes.assign(pat.n, MeasurementPlane{});
      pat.angles.assign(pat.n, 0.0);
      have_qubits = true;
      continue;
    }
    if (!have_qubits) syntax(line, "qubits line must come first");

    if (kw == "plane") {
      if (tok.size() != 4) syntax(line, "usage: plane <a> <P> <Q>");
      int a = parse_qubit(tok[1], pat.n, line);
      if (tok[2].size() != 1 || tok[3].size() != 1) syntax(line, "plane letters must be X, Y or Z");
      auto p = axis_from_letter(tok[2][0]), q = axis_from_letter(tok[3][0]);
      if (!p || !q) syntax(line, "plane letters must be X, Y or Z");
      if (*p == *q) syntax(line, "plane letters must differ");
      pat.planes[a - 1] = MeasurementPlane{*p, *q};
    } else if (kw == "edge") {
      if (pat.has_stabs)
        throw Error(ErrorCode::MixedSource, "line " + std::to_string(line) + ": edge after stab lines", line);
      if (tok.size() != 3) syntax(line, "usage: edge <a> <b>");
      int a = parse_qubit(tok[1], pat.n, line);
      int b = parse_qubit(tok[2], pat.n, line);
      if (a == b) syntax(line, "self-edges are not allowed");
      pat.edges.emplace_back(a, b);
      have_edges = true;
    } else if (kw == "stab") {
      if (have_edges)
        throw Error(ErrorCode::MixedSource, "line " + std::to_string(line) + ": stab after edge lines", line);
      if (tok.size() != 2) syntax(line, "usage: stab <word>");
      if (static_cast<int>(tok[1].size()) != pat.n)
        syntax(line, "stab word must have exactly " + std::to_string(pat.n) + " letters");
      for (char c : tok[1])
        if (c != 'I' && !axis_from_letter(c)) syntax(line, std::string("bad letter '") + c + "' in stab word");
      pat.words.push_back(tok[1]);
      pat.has_stabs = true;
    } else if (kw == "angle") {
      if (tok.size() != 3) syntax(line, "usage: angle <a> <real>");
      int a = parse_qubit(tok[1], pat.n, line);
      double phi = parse_real(tok[2], line);
      const double half_pi = std::acos(0.0);
      if (!(phi >= -half_pi && phi < half_pi)) syntax(line, "angle outside [-pi/2, pi/2)");
      pat.angles[a - 1] = phi;
    } else if (kw == "igauge" || kw == "ocomp") {
      bool& seen = (kw == "igauge") ? have_igauge : have_ocomp;
      if (seen) syntax(line, "duplicate " + kw + " line");
      seen = true;
      std::vector<int> qs;
      for (std::size_t i = 1; i < tok.size(); ++i) qs.push_back(parse_qubit(tok[i], pat.n, line));
      if (kw == "igauge") {
        pat.declared_igauge = make_set(qs);
        pat.igauge_declared = true;
      } else {
        pat.declared_ocomp = make_set(qs);
        pat.ocomp_declared = true;
      }
    } else {
      syntax(line, "unknown directive '" + kw + "'");
    }
  }
  if (!have_qubits) throw Error(ErrorCode::SyntaxError, "missing qubits line", 0);
  if (pat.has_stabs && static_cast<int>(pat.words.size()) != pat.n)
    throw Error(ErrorCode::WrongStabCount, "expected " + std::to_string(pat.n) + " stab lines, got " +
                                               std::to_string(pat.words.size()));
  return pat;
}

Pattern parse_pattern_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::SyntaxError, "cannot open file: " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_pattern(buf.str());
}

}  // namespace mbqc

#include "mbqc/stabilizer.hpp"

#include <algorithm>
#include <stdexcept>

namespace mbqc {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotCommuting: return "NotCommuting";
    case ErrorCode::NotFullRank: return "NotFullRank";
    case ErrorCode::InvalidGaugeSet: return "InvalidGaugeSet";
    case ErrorCode::InvalidOutputSet: return "InvalidOutputSet";
    case ErrorCode::GaugeableOutsideInput: return "GaugeableOutsideInput";
    case ErrorCode::NoValidSplit: return "NoValidSplit";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::NotCommutingReconstruction: return "NotCommutingReconstruction";
    case ErrorCode::NotOptimalOutput: return "NotOptimalOutput";
    case ErrorCode::SelfLoopAtQubit: return "SelfLoopAtQubit";
    case ErrorCode::NotInStabilizer: return "NotInStabilizer";
    case ErrorCode::NoSelfLoop: return "NoSelfLoop";
    case ErrorCode::BoundaryQubit: return "BoundaryQubit";
    case ErrorCode::NotMinimal: return "NotMinimal";
    case ErrorCode::BoundaryOverlap: return "BoundaryOverlap";
    case ErrorCode::SizeGuard: return "SizeGuard";
    case ErrorCode::NotRunnable: return "NotRunnable";
    case ErrorCode::OrderInconsistent: return "OrderInconsistent";
    case ErrorCode::ZeroSuccessProbability: return "ZeroSuccessProbability";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::MixedSource: return "MixedSource";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::WrongStabCount: return "WrongStabCount";
  }
  return "Unknown";
}

QubitSet make_set(std::vector<int> labels) {
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return labels;
}

bool set_contains(const QubitSet& s, int q) { return std::binary_search(s.begin(), s.end(), q); }

QubitSet set_union(const QubitSet& a, const QubitSet& b) {
  QubitSet r;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

QubitSet set_complement(const QubitSet& s, int n) {
  QubitSet r;
  for (int q = 1; q <= n; ++q)
    if (!set_contains(s, q)) r.push_back(q);
  return r;
}

std::string set_to_string(const QubitSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out + "}";
}

char axis_letter(Axis a) {
  switch (a) {
    case Axis::X: return 'X';
    case Axis::Y: return 'Y';
    case Axis::Z: return 'Z';
  }
  return '?';
}

std::optional<Axis> axis_from_letter(char c) {
  switch (c) {
    case 'X': return Axis::X;
    case 'Y': return Axis::Y;
    case 'Z': return Axis::Z;
  }
  return std::nullopt;
}

Axis MeasurementPlane::s() const {
  // the axis that is neither phi nor sphi
  for (Axis a : {Axis::X, Axis::Y, Axis::Z})
    if (a != phi && a != sphi) return a;
  throw std::logic_error("degenerate measurement plane");
}

std::string MeasurementPlane::to_string() const {
  return std::string("[") + axis_letter(phi) + "," + axis_letter(sphi) + "]";
}

PauliWord multiply(const PauliWord& a, const PauliWord& b) {
  if (a.size() != b.size()) throw std::invalid_argument("PauliWord size mismatch");
  PauliWord r(a.size());
  r.w = a.w ^ b.w;
  r.v = a.v ^ b.v;
  if (a.sign_log_i && b.sign_log_i) {
    // ordered form (sigma_s)^v (sigma_phi)^w: commuting a.w past b.v costs
    // (-1)^(a.w . b.v)
    int s = *a.sign_log_i + *b.sign_log_i + (a.w.dot(b.v) ? 2 : 0);
    r.sign_log_i = s & 3;
  }
  return r;
}

PauliWord GeneratorMatrix::row_word(int row0) const {
  PauliWord p(phi.cols());
  p.w = phi.row(row0);
  p.v = s.row(row0);
  return p;
}

void GeneratorMatrix::set_row_word(int row0, const PauliWord& p) {
  phi.set_row(row0, p.w);
  s.set_row(row0, p.v);
}

void check_valid(const GeneratorMatrix& g) {
  const int n = g.n();
  if (static_cast<int>(g.phi.cols()) != n || static_cast<int>(g.s.rows()) != n ||
      static_cast<int>(g.s.cols()) != n || static_cast<int>(g.planes.size()) != n)
    throw std::invalid_argument("GeneratorMatrix shape mismatch");
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (g.phi.row(a).dot(g.s.row(b)) ^ g.s.row(a).dot(g.phi.row(b)))
        throw Error(ErrorCode::NotCommuting,
                    "generators " + std::to_string(a + 1) + " and " + std::to_string(b + 1) +
                        " anticommute");
  if (rank(g.phi.hstack(g.s)) != static_cast<std::size_t>(n))
    throw Error(ErrorCode::NotFullRank, "generator rows are dependent");
}

namespace {

// (w,v) encoding of a concrete letter under a plane, nullopt only for bad letters
std::optional<std::pair<bool, bool>> letter_wv(const MeasurementPlane& p, char c) {
  if (c == 'I') return std::make_pair(false, false);
  auto ax = axis_from_letter(c);
  if (!ax) return std::nullopt;
  if (*ax == p.phi) return std::make_pair(true, false);
  if (*ax == p.s()) return std::make_pair(false, true);
  return std::make_pair(true, true);  // sphi
}

char wv_letter(const MeasurementPlane& p, bool w, bool v) {
  if (!w && !v) return 'I';
  if (w && !v) return axis_letter(p.phi);
  if (!w && v) return axis_letter(p.s());
  return axis_letter(p.sphi);
}

void require_qubit(int q, int n) {
  if (q < 1 || q > n)
    throw Error(ErrorCode::IndexOutOfRange, "qubit " + std::to_string(q) + " outside 1.." + std::to_string(n), q);
}

}  // namespace

GeneratorMatrix graph_state(const std::vector<std::pair<int, int>>& edges, int n,
                            std::vector<MeasurementPlane> planes) {
  if (static_cast<int>(planes.size()) != n) throw std::invalid_argument("planes size mismatch");
  std::vector<std::vector<char>> letters(n, std::vector<char>(n, 'I'));
  for (int a = 0; a < n; ++a) letters[a][a] = 'X';
  for (auto [a, b] : edges) {
    require_qubit(a, n);
    require_qubit(b, n);
    if (a == b) throw std::invalid_argument("self-edge at qubit " + std::to_string(a));
    letters[a - 1][b - 1] = 'Z';
    letters[b - 1][a - 1] = 'Z';
  }
  GeneratorMatrix g{BitMatrix(n, n), BitMatrix(n, n), std::move(planes)};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto wv = letter_wv(g.planes[b], letters[a][b]);
      g.phi.set(a, b, wv->first);
      g.s.set(a, b, wv->second);
    }
  check_valid(g);
  return g;
}

GeneratorMatrix from_letters(const std::vector<std::string>& words,
                             std::vector<MeasurementPlane> planes) {
  const int n = static_cast<int>(planes.size());
  if (static_cast<int>(words.size()) != n)
    throw Error(ErrorCode::WrongStabCount,
                "expected " + std::to_string(n) + " words, got " + std::to_string(words.size()));
  GeneratorMatrix g{BitMatrix(n, n), BitMatrix(n, n), std::move(planes)};
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(words[a].size()) != n)
      throw std::invalid_argument("word " + std::to_string(a + 1) + " has wrong length");
    for (int b = 0; b < n; ++b) {
      auto wv = letter_wv(g.planes[b], words[a][b]);
      if (!wv) throw std::invalid_argument(std::string("bad letter '") + words[a][b] + "'");
      g.phi.set(a, b, wv->first);
      g.s.set(a, b, wv->second);
    }
  }
  check_valid(g);
  return g;
}

std::vector<std::string> to_letters(const GeneratorMatrix& g) {
  const int n = g.n();
  std::vector<std::string> words(n, std::string(n, 'I'));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) words[a][b] = wv_letter(g.planes[b], g.phi.get(a, b), g.s.get(a, b));
  return words;
}

std::optional<BitVector> stabilizer_coords(const GeneratorMatrix& g, const PauliWord& p) {
  // x * (phi|s) == (p.w|p.v)  <=>  (phi|s)^T x == (w|v)^T
  BitMatrix lhs = g.phi.hstack(g.s).transposed();
  BitVector rhs(2 * g.n());
  for (int i = 0; i < g.n(); ++i) {
    if (p.w.get(i)) rhs.set(i, true);
    if (p.v.get(i)) rhs.set(g.n() + i, true);
  }
  return solve(lhs, rhs);
}

GeneratorMatrix flip_plane_at(const GeneratorMatrix& g, int qubit) {
  require_qubit(qubit, g.n());
  GeneratorMatrix r = g;
  const int c = qubit - 1;
  for (int a = 0; a < g.n(); ++a)
    if (r.phi.get(a, c)) r.s.flip(a, c);
  r.planes[c] = r.planes[c].flipped();
  return r;
}

GeneratorMatrix replant_at(const GeneratorMatrix& g, int qubit) {
  require_qubit(qubit, g.n());
  GeneratorMatrix r = g;
  const int c = qubit - 1;
  for (int a = 0; a < g.n(); ++a)
    if (r.s.get(a, c)) r.phi.flip(a, c);
  r.planes[c] = r.planes[c].replanted();
  return r;
}

GeneratorMatrix Pattern::to_generator() const {
  if (has_stabs) return from_letters(words, planes);
  return graph_state(edges, n, planes);
}

}  // namespace mbqc

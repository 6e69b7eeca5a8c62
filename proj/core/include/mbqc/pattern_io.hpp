#pragma once

#include <string>

#include "mbqc/stabilizer.hpp"

// Line-oriented pattern files: '#' starts a comment, blank lines are
// ignored, `qubits <n>` must come before any directive that names a qubit.
//
//   qubits <n>
//   plane <a> <P> <Q>     P,Q in {X,Y,Z}, P != Q (default X Y)
//   edge <a> <b>          graph-state source
//   stab <word>           n letters from {I,X,Y,Z}; exactly n lines
//   angle <a> <real>      radians in [-pi/2, pi/2) (default 0)
//   igauge <a> ...        optional declaration (may be empty)
//   ocomp <a> ...         optional declaration (may be empty)
//
// edge and stab are mutually exclusive. Parse errors carry the line number
// in Error::detail().

namespace mbqc {

Pattern parse_pattern(const std::string& text);
Pattern parse_pattern_file(const std::string& path);

}  // namespace mbqc

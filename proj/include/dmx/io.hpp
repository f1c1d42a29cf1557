#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "dmx/gf2.hpp"
#include "dmx/ribbon.hpp"

namespace dmx::io {

// ".dm" text:
//   kind: matroid            (optional; also "delta-matroid" or "set-system")
//   ground: a b c
//   feasible: {a,c}
//   feasible: {}
// Blank lines and lines starting with '#' are ignored. Errors throw ParseError.

enum class DmKind { delta_matroid, matroid, set_system };

struct DmDocument {
  DmKind kind = DmKind::delta_matroid;
  // True when the kind line was present.
  bool explicit_kind = false;
  SetSystem system;
};

DmDocument parse_dm(std::string_view text);
/// Canonical form: ground line, then feasible lines in canonical family order.
std::string format_dm(const SetSystem& s);
std::string format_matroid(const Matroid& m);

// ".gf2" text: "gf2sym n" followed by n rows, or "gf2 r c" followed by r rows; rows are
// strings of 0/1 characters, column 1 first.
using Gf2Document = std::variant<Gf2SymmetricMatrix, Gf2Matrix>;

Gf2Document parse_gf2(std::string_view text);
std::string format_gf2(const Gf2SymmetricMatrix& a);
std::string format_gf2(const Gf2Matrix& b);

// ".rg" text: "vertex: h1 h3 h2" per vertex (cyclic order of half-edges) and
// "edge: e1 h1 h2 +" per edge, '-' marking a twisted edge.
RibbonGraph parse_rg(std::string_view text);
std::string format_rg(const RibbonGraph& g);

enum class FileKind { dm, gf2, rg };

/// By extension first, then by the first meaningful line.
FileKind detect_kind(std::string_view path, std::string_view text);

}  // namespace dmx::io

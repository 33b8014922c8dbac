#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace absplan {

// Byte range inside one input text, with 1-based line/column of its start.
struct SourceSpan {
  std::string file;
  std::size_t begin = 0;
  std::size_t end = 0;
  int line = 0;
  int column = 0;

  bool known() const { return line > 0; }
};

struct Diagnostic {
  std::string code;      // stable machine-readable id, e.g. "type.mismatch"
  std::string message;
  std::string location;  // human path, e.g. "action fly / eff[1]"
  SourceSpan span;       // valid when the problem came from source text
};

std::string format_diagnostic(const Diagnostic& d);

}  // namespace absplan

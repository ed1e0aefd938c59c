#include "mlts/diagnostics.hpp"

namespace mlts {

std::string format_diagnostic(const std::string& file, const StaticError& e) {
  return file + ":" + std::to_string(e.loc().line) + ":" + std::to_string(e.loc().col) + ": error: " + e.what();
}

}  // namespace mlts

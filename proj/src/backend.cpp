#include "posslog/backend.hpp"

namespace posslog {

std::string to_string(LogicKind kind) {
  return kind == LogicKind::Classical ? "classical" : "c1";
}

std::unique_ptr<LogicBackend> make_backend(LogicKind kind, const BackendOptions& opts) {
  if (kind == LogicKind::Classical) return std::make_unique<ClassicalBackend>(opts.classical);
  return std::make_unique<C1Backend>(opts.c1);
}

}  // namespace posslog

#include "bnelim/errors.hpp"

namespace bnelim {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

CapExceeded::CapExceeded(const std::string& what_for, unsigned requested, unsigned cap)
    : Error(what_for + " needs " + std::to_string(requested) + " components, cap is " +
            std::to_string(cap)),
      requested_(requested),
      cap_(cap) {}

ForbiddenElimination::ForbiddenElimination(const std::string& component)
    : Error("cannot eliminate '" + component + "': positive loop in the interaction graph"),
      component_(component) {}

}  // namespace bnelim

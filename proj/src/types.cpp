#include "charlier/types.hpp"

#include <string>

namespace charlier {

std::string to_string(LatticePoint p) {
  return "(" + std::to_string(p.x1) + "," + std::to_string(p.x2) + ")";
}

void require_lattice_point(LatticePoint p, const char* where) {
  if (!p.in_lattice()) throw DomainError(std::string(where) + ": lattice point " + to_string(p) + " has a negative coordinate");
}

void require_mode(ModeIndex n, const char* where) {
  if (n.n1 < 0 || n.n2 < 0) throw DomainError(std::string(where) + ": negative polynomial degree");
}

void require_label(EnergyLabel label, const char* where) {
  if (label.N < 0 || label.n < 0 || label.n > label.N) {
    throw DomainError(std::string(where) + ": energy label requires 0 <= n <= N");
  }
}

}  // namespace charlier

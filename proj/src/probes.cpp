#include "charlier/probes.hpp"

namespace charlier {

ProbeSource::ProbeSource(std::uint64_t seed) : engine_(seed) {}

double ProbeSource::uniform(double lo, double hi) {
  const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * unit;
}

int ProbeSource::integer(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(engine_() % span);
}

LatticeFunction ProbeSource::function(int support) {
  const Window w{support, support};
  std::vector<Complex> values;
  values.reserve(static_cast<std::size_t>(w.size()));
  for (int i = 0; i < w.size(); ++i) {
    const double re = uniform(-1.0, 1.0);
    const double im = uniform(-1.0, 1.0);
    values.emplace_back(re, im);
  }
  return LatticeFunction::everywhere([w, v = std::move(values)](LatticePoint p) -> Complex {
    return w.contains(p) ? v[static_cast<std::size_t>(w.index(p))] : Complex{};
  });
}

std::vector<LatticePoint> ProbeSource::points(int count, int max_coord) {
  std::vector<LatticePoint> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const int x1 = integer(0, max_coord);
    const int x2 = integer(0, max_coord);
    out.push_back({x1, x2});
  }
  return out;
}

}  // namespace charlier

#include "wss/context.hpp"

namespace wss {

AnalysisContext::AnalysisContext(std::string n, Group g, std::size_t lattice_cap)
    : name(std::move(n)), group(std::move(g)), lattice(enumerate_subgroups(group, lattice_cap)), oracle(lattice) {}

std::string AnalysisContext::label(std::size_t i) const { return "#" + std::to_string(i); }

std::string AnalysisContext::describe(std::size_t i) const {
  return label(i) + " " + describe(lattice[i]);
}

std::string AnalysisContext::describe(const Subgroup& h) const {
  std::string out = "order " + std::to_string(h.order()) + " <";
  for (std::size_t k = 0; k < h.generators().size(); ++k) {
    if (k) out += ", ";
    out += group.element(h.generators()[k]).to_cycles();
  }
  return out + ">";
}

std::unique_ptr<AnalysisContext> make_context(std::string name, Group g, std::size_t lattice_cap) {
  return std::make_unique<AnalysisContext>(std::move(name), std::move(g), lattice_cap);
}

}  // namespace wss

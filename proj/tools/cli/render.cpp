#include "render.hpp"

#include <sstream>

namespace nilorb::cli {

std::string young_diagram(const Partition& p) {
  std::ostringstream os;
  for (int part : p.parts()) {
    os << "  ";
    for (int k = 0; k < part; ++k) os << "[ ]";
    os << '\n';
  }
  return os.str();
}

std::string labeled_diagram(const LabeledDiagram& d) {
  const int width = static_cast<int>(std::to_string(d.size()).size());
  std::ostringstream os;
  for (const auto& row : d.rows()) {
    os << "  ";
    for (int label : row) {
      std::string s = std::to_string(label);
      os << '[' << std::string(static_cast<std::size_t>(width) - s.size(), ' ') << s << ']';
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace nilorb::cli

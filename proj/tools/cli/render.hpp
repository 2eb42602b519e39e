#pragma once

#include <string>

#include "nilorb/partition.hpp"
#include "nilorb/springer.hpp"

namespace nilorb::cli {

// Box outline of a diagram, one "[ ]" per box.
std::string young_diagram(const Partition& p);

// Labels laid out in their boxes, right aligned to the widest label.
std::string labeled_diagram(const LabeledDiagram& d);

}  // namespace nilorb::cli

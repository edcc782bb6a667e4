#include <string>
#include <utility>

#include "foxcolor/diagram.hpp"
#include "foxcolor/errors.hpp"

namespace foxcolor {
namespace {

// Rolfsen-table knots in the counterclockwise, incoming-under convention
// with labels running consecutively along the knot. 9_40 is the alternating
// diagram whose checkerboard graph is the triangular prism.
const std::pair<const char*, const char*> kTable[] = {
    {"unknot", "unknot"},
    {"3_1", "[[1,4,2,5],[3,6,4,1],[5,2,6,3]]"},
    {"4_1", "[[4,2,5,1],[8,6,1,5],[6,3,7,4],[2,7,3,8]]"},
    {"5_1", "[[1,6,2,7],[3,8,4,9],[5,10,6,1],[7,2,8,3],[9,4,10,5]]"},
    {"5_2", "[[1,4,2,5],[3,8,4,9],[5,10,6,1],[9,6,10,7],[7,2,8,3]]"},
    {"6_1",
     "[[1,4,2,5],[7,10,8,11],[3,9,4,8],[9,3,10,2],[5,12,6,1],[11,6,12,7]]"},
    {"6_2",
     "[[1,4,2,5],[5,10,6,11],[3,9,4,8],[9,3,10,2],[7,12,8,1],[11,6,12,7]]"},
    {"6_3",
     "[[4,2,5,1],[8,4,9,3],[12,9,1,10],[10,5,11,6],[6,11,7,12],[2,8,3,7]]"},
    {"7_1",
     "[[1,8,2,9],[3,10,4,11],[5,12,6,13],[7,14,8,1],[9,2,10,3],[11,4,12,5],"
     "[13,6,14,7]]"},
    {"9_40",
     "[[18,14,1,13],[12,8,13,7],[6,2,7,1],[4,10,5,9],[16,4,17,3],"
     "[10,16,11,15],[14,5,15,6],[8,17,9,18],[2,11,3,12]]"},
};

}  // namespace

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, pd] : kTable) out.emplace_back(name);
    return out;
  }();
  return names;
}

PdCode catalog(std::string_view name) {
  for (const auto& [entry, pd] : kTable) {
    if (name == entry) return parse_pd(pd);
  }
  throw InputError("unknown knot '" + std::string(name) + "'");
}

}  // namespace foxcolor

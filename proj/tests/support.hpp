#pragma once

#include <string>

#include "softtop/embedded_spaces.hpp"
#include "softtop/golden_corpus.hpp"

namespace softtop::testing {

inline SpaceFile space(std::string_view text) { return parse_space_file(text); }

inline SoftTopology topo(std::string_view text) { return corpus::topology_of(text); }

inline SoftSet labels(const ContextRef& ctx, std::vector<std::vector<std::string>> rows) {
  return SoftSet::from_labels(ctx, rows);
}

}  // namespace softtop::testing

using namespace softtop::corpus;

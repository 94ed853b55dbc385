#pragma once

// Space files shipped under spaces/, embedded so verify-paper runs without
// touching the filesystem. tests/test_corpus.cpp keeps the two in sync.

#include <array>
#include <string_view>

namespace softtop::corpus {

struct EmbeddedSpace {
  std::string_view file;
  std::string_view text;
};

inline constexpr std::string_view kEx33 = R"space(
# Seven-member topology over three points and two parameters.
universe: x1 x2 x3
params: e1 e2

set F1 { e1 = {x1, x2}; e2 = {x1, x2} }
set F2 { e1 = {x2}; e2 = {x1, x3} }
set F3 { e1 = {x2, x3}; e2 = {x1} }
set F4 { e1 = {x2}; e2 = {x1} }
set F5 { e1 = {x1, x2}; e2 = {x1, x2, x3} }
set F6 { e1 = {x1, x2, x3}; e2 = {x1, x2} }
set F7 { e1 = {x2, x3}; e2 = {x1, x3} }

# pre-open and beta-open, but neither alpha-open nor semi-open
set H { e2 = {x1} }

topology: F1 F2 F3 F4 F5 F6 F7
)space";

inline constexpr std::string_view kEx36 = R"space(
# Two beta-open sets whose intersection is not beta-open.
universe: x1 x2
params: e1 e2

set F1 { e1 = {x1}; e2 = {x2} }
set F2 { e1 = {x1, x2}; e2 = {x2} }
set F3 { e1 = {x1}; e2 = {x1, x2} }

set G { e1 = {x2}; e2 = {x2} }
set H { e1 = {x1, x2}; e2 = {x1} }

topology: F1 F2 F3
)space";

inline constexpr std::string_view kEx38 = R"space(
# Same space as ex36.space: two beta-closed sets whose union is not beta-closed.
universe: x1 x2
params: e1 e2

set F1 { e1 = {x1}; e2 = {x2} }
set F2 { e1 = {x1, x2}; e2 = {x2} }
set F3 { e1 = {x1}; e2 = {x1, x2} }

set G { e1 = {x1}; e2 = {x1} }
set H { e2 = {x2} }

topology: F1 F2 F3
)space";

inline constexpr std::string_view kEx43_X = R"space(
universe: x1 x2 x3
params: e1 e2
topology: indiscrete
)space";

inline constexpr std::string_view kEx43_Y = R"space(
universe: x1 x2 x3
params: e1 e2
topology: discrete
)space";

inline constexpr std::string_view kEx44_X = R"space(
universe: x1 x2 x3
params: e1 e2

set F1 { e1 = {x1}; e2 = {x1} }
set F2 { e1 = {x2}; e2 = {x2} }
set F3 { e1 = {x1, x2}; e2 = {x1, x2} }

topology: F1 F2 F3
)space";

inline constexpr std::string_view kEx44_Y = R"space(
universe: x1 x2 x3
params: e1 e2

set G1 { e1 = {x1}; e2 = {x1} }
set G2 { e1 = {x1, x2}; e2 = {x1, x2} }

topology: G1 G2
)space";

inline constexpr std::string_view kEx47_X = R"space(
universe: x1 x2 x3
params: e1 e2

set F { e1 = {x1}; e2 = {x1} }

topology: F
)space";

inline constexpr std::string_view kEx47_Y = R"space(
universe: x1 x2 x3 x4
params: e1 e2

set G { e1 = {x1, x3}; e2 = {x1, x3} }

topology: G
)space";

inline constexpr std::string_view kEx47_Z = R"space(
universe: x1 x2 x3
params: e1 e2

set H1 { e1 = {x3}; e2 = {x3} }
set H2 { e1 = {x1, x2}; e2 = {x1, x2} }

topology: H1 H2
)space";

inline constexpr std::string_view kIndiscrete3 = R"space(
universe: x1 x2 x3
params: e1 e2
topology: indiscrete
)space";

inline constexpr std::array<EmbeddedSpace, 11> kEmbeddedSpaces = {{
    {"ex33.space", kEx33},
    {"ex36.space", kEx36},
    {"ex38.space", kEx38},
    {"ex43_X.space", kEx43_X},
    {"ex43_Y.space", kEx43_Y},
    {"ex44_X.space", kEx44_X},
    {"ex44_Y.space", kEx44_Y},
    {"ex47_X.space", kEx47_X},
    {"ex47_Y.space", kEx47_Y},
    {"ex47_Z.space", kEx47_Z},
    {"indiscrete3.space", kIndiscrete3},
}};

}  // namespace softtop::corpus

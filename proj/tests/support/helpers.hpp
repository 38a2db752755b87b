#ifndef CRITFORGE_TESTS_HELPERS_HPP
#define CRITFORGE_TESTS_HELPERS_HPP

#include <string>
#include <vector>

#include "critforge/expr.hpp"
#include "critforge/lg_pair.hpp"
#include "critforge/series.hpp"

namespace critforge::testing {

inline Series S(const std::string& text, const std::vector<std::string>& vars, unsigned order) {
    return parse_expr(text, vars).to_series(order);
}

inline LGPair pair1(const std::string& text, unsigned order) {
    return LGPair(S(text, {"x"}, order));
}

inline LGPair pair2(const std::string& text, unsigned order) {
    return LGPair(S(text, {"x", "y"}, order));
}

inline LGPair pair3(const std::string& text, unsigned order) {
    return LGPair(S(text, {"x", "y", "z"}, order));
}

} // namespace critforge::testing

#endif

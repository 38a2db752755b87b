#include "critforge/lg_pair.hpp"

#include "critforge/errors.hpp"

namespace critforge {

LGPair::LGPair(Series f) : f_(std::move(f)) {
    auto o = f_.ord();
    if (o && *o < 2)
        throw DomainError("not-a-critical-chart",
                          "LG pair potential must have no constant or linear terms "
                          "(f(0) = 0 and df(0) = 0)");
}

} // namespace critforge

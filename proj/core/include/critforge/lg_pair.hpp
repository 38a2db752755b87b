#ifndef CRITFORGE_LG_PAIR_HPP
#define CRITFORGE_LG_PAIR_HPP

#include "critforge/series.hpp"

namespace critforge {

/// A formal Landau-Ginzburg pair at the origin: a potential f on a smooth
/// formal chart with f(0) = 0 and df(0) = 0, i.e. f in m^2. The critical
/// value on the formal neighborhood is identically 0.
class LGPair {
public:
    explicit LGPair(Series f);

    std::size_t nvars() const noexcept { return f_.nvars(); }
    unsigned order() const noexcept { return f_.order(); }
    const Series& f() const noexcept { return f_; }

    friend bool operator==(const LGPair& a, const LGPair& b) { return a.f_ == b.f_; }
    friend bool operator!=(const LGPair& a, const LGPair& b) { return !(a == b); }

private:
    Series f_;
};

} // namespace critforge

#endif

#include "lissaknot/tolerance.hpp"

#include <cstdlib>

namespace lissaknot {

long double crossing_margin() {
    static const long double margin = [] {
        if (const char* s = std::getenv("LISSAKNOT_TOL")) {
            char* end = nullptr;
            long double v = strtold(s, &end);
            if (end != s && v > 0) return v;
        }
        return 1e-6L;
    }();
    return margin;
}

} // namespace lissaknot

#pragma once

#include <cstdlib>

namespace goodmap {

// Guards against runaway symbolic computation. Degree is configurable through
// the GOODMAP_MAX_DEGREE environment variable; the others are generous fixed
// bounds sized for desk-scale inputs.
struct ResourceLimits {
    int max_degree = 96;            // total degree of any intermediate polynomial
    long max_terms = 200000;        // terms in any intermediate polynomial
    long max_basis = 2048;          // polynomials in a Groebner basis under construction
    long max_reductions = 2000000;  // reduction steps per basis computation
    long max_branches = 20000;      // branch nodes per constructible-image call

    static ResourceLimits from_env() {
        ResourceLimits lim;
        if (const char* s = std::getenv("GOODMAP_MAX_DEGREE")) {
            int d = std::atoi(s);
            if (d > 0) lim.max_degree = d;
        }
        return lim;
    }
};

inline const ResourceLimits& default_limits() {
    static const ResourceLimits lim = ResourceLimits::from_env();
    return lim;
}

}  // namespace goodmap

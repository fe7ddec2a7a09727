#pragma once

#include <stdexcept>
#include <string>

namespace bdlab {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid arguments: non-finite angles, genus < 2, degenerate or
// wrongly-oriented point triples.
struct domain_error : error {
    using error::error;
};

// A geometric identity that holds exactly in theory failed its numeric
// budget; signals a bug, never expected on valid inputs.
struct construction_error : error {
    using error::error;
};

// An operation's stated precondition is not met (e.g. a partition that is
// not short-cycle where one is required).
struct precondition_error : error {
    using error::error;
};

// Evaluation would hit a singularity: the diagonal of S x S, a pole of a
// cotangent term, or a corrupted Mobius map.
struct singular_error : error {
    using error::error;
};

} // namespace bdlab

// Exception taxonomy. Every failure mode the library reports has its own
// type so callers can branch on it.
#pragma once

#include <stdexcept>
#include <string>

namespace nlskdv {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct invalid_grid : error { using error::error; };
struct invalid_params : error { using error::error; };
struct invalid_wave_parameters : error { using error::error; };
struct shape_error : error { using error::error; };
struct unsupported_moment : error { using error::error; };
struct family_undefined : error { using error::error; };
struct projection_failure : error { using error::error; };
struct not_on_manifold : error { using error::error; };
struct rearrangement_domain_error : error { using error::error; };
struct eigensolver_failure : error { using error::error; };
struct no_positive_root : error { using error::error; };
struct pass_not_found : error { using error::error; };

}  // namespace nlskdv

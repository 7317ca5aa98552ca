#ifndef SV_ERRORS_HPP
#define SV_ERRORS_HPP

#include <stdexcept>

namespace sv {

// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Agent count or table size beyond the supported bounds.
struct capacity_error : error { using error::error; };

// Agent index outside 0..n-1.
struct index_error : error { using error::error; };

// Characteristic function queried for a coalition without a table entry.
struct incomplete_function_error : error { using error::error; };

// Vector or matrix sizes do not line up.
struct dimension_error : error { using error::error; };

// Value outside its admissible interval (normalization, achievement indexes).
struct range_error : error { using error::error; };

// Bad scalar parameter (h < 1, zero target, nonpositive weight, ...).
struct parameter_error : error { using error::error; };

// Coalition structure or trip assignment is not a valid partition.
struct partition_error : error { using error::error; };

// The requested solution does not exist (empty feasible region).
struct infeasible_error : error { using error::error; };

// Numerical breakdown or a violated internal consistency check.
struct solver_error : error { using error::error; };

// Malformed input file.
struct input_error : error { using error::error; };

} // namespace sv

#endif // SV_ERRORS_HPP

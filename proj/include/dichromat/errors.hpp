#pragma once

#include <stdexcept>
#include <string>

namespace dichromat {

/// File format or filesystem failure. Carries a human-readable reason.
struct io_error : std::runtime_error {
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

/// Shape disagreement between images, volumes or operators.
struct dimension_error : std::invalid_argument {
    explicit dimension_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Optimizer failure: non-finite values or an unsatisfiable line search.
struct solver_error : std::runtime_error {
    explicit solver_error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid argument values (negative weights, bad config fields, ...).
struct value_error : std::invalid_argument {
    explicit value_error(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace dichromat

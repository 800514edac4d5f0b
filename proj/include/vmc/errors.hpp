#pragma once

#include <stdexcept>
#include <string>

namespace vmc {

// Invalid arguments or violated operation preconditions.
class input_error : public std::invalid_argument {
public:
    explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

// Exceeded a configured size cap or computation budget.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace vmc

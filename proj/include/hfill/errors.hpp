#pragma once

#include <stdexcept>
#include <string>

namespace hfill {

// Invalid data or violated precondition. CLI maps this to exit code 2.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A configured budget (vertex count, search nodes) was exceeded. Exit code 3.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// A postcondition the code itself guarantees failed; always a bug.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace hfill

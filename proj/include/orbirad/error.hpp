#pragma once

#include <stdexcept>
#include <string>

namespace orbirad {

// Math-layer failure with a stable name (NoSignChange, InvalidTriangle, ...).
// The CLI maps the name onto stderr and exit code 1.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(name + ": " + what), name_(std::move(name)) {}

    const std::string& name() const { return name_; }

private:
    std::string name_;
};

[[noreturn]] inline void fail(const char* name, const std::string& what) {
    throw Error(name, what);
}

}  // namespace orbirad

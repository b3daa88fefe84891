#pragma once

#include <stdexcept>
#include <string>

namespace rdp {

// Input text does not conform to a documented format. CLI exit code 2.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// A mathematical hypothesis of the requested operation is violated by the
// input (non-rational graph passed to multiplicity, indefinite form passed
// to the root closure, ...). CLI exit code 1.
class precondition_error : public std::runtime_error {
public:
    explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace rdp

#ifndef tpa_errors_hpp
#define tpa_errors_hpp

#include <stdexcept>
#include <string>

namespace tpa {

// malformed or inconsistent user input (bad JSON, out-of-range vertex,
// dimension vector of the wrong length, ...)
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// the classifier was asked to work on a quiver with oriented cycles
class hypothesis_violation : public std::runtime_error {
public:
    explicit hypothesis_violation(const std::string& msg) : std::runtime_error(msg) {}
};

}

#endif /* tpa_errors_hpp */

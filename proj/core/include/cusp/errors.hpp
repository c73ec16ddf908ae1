#ifndef CUSP_ERRORS_HPP
#define CUSP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cusp {

// Argument outside the mathematical domain of the operation.
class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& msg) : std::domain_error(msg) {}
};

// Requested tolerance could not be reached at the configured depth.
class accuracy_error : public std::runtime_error {
public:
    explicit accuracy_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Asymptotic expansion called outside its validity region.
class validity_error : public std::domain_error {
public:
    explicit validity_error(const std::string& msg) : std::domain_error(msg) {}
};

// Evaluation point too close to a pole or zero of a denominator.
class pole_error : public std::runtime_error {
public:
    explicit pole_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Root scan could not separate two sign changes at maximal refinement.
class scan_error : public std::runtime_error {
public:
    explicit scan_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace cusp

#endif

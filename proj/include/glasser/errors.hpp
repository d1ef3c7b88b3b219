#ifndef GLASSER_ERRORS_HPP
#define GLASSER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace glasser {

// Root of every error the library throws.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class pole_at_one : public error {
public:
    explicit pole_at_one(const std::string& where)
        : error(where + ": argument is at the pole s = 1") {}
};

class pole_at_nonpositive_integer : public error {
public:
    explicit pole_at_nonpositive_integer(const std::string& where)
        : error(where + ": argument is a non-positive integer") {}
};

class domain_error : public error {
public:
    using error::error;
};

class accuracy_loss : public error {
public:
    using error::error;
};

class non_convergence : public error {
public:
    using error::error;
};

class singular_sample : public error {
public:
    using error::error;
};

class unresolved_residue : public error {
public:
    using error::error;
};

class validation_error : public error {
public:
    using error::error;
};

} // namespace glasser

#endif

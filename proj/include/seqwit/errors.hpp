// errors.hpp
// Exception types raised by the seqwit library.

#pragma once

#include <stdexcept>
#include <string>

namespace seqwit {

// Base for every error raised by the library. Callers that do not care about
// the category can catch this alone.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class not_hermitian : public error {
public:
    explicit not_hermitian(const std::string& what) : error("not Hermitian: " + what) {}
};

class invalid_state : public error {
public:
    explicit invalid_state(const std::string& what) : error("invalid state: " + what) {}
};

class bad_sharpness : public error {
public:
    explicit bad_sharpness(double lambda)
        : error("sharpness must lie in (0, 1], got " + std::to_string(lambda)) {}
};

class bad_direction : public error {
public:
    explicit bad_direction(const std::string& what) : error("bad direction: " + what) {}
};

class zero_probability : public error {
public:
    explicit zero_probability(double p)
        : error("measurement outcome has vanishing probability " + std::to_string(p)) {}
};

class bad_schedule : public error {
public:
    explicit bad_schedule(const std::string& what) : error("bad schedule: " + what) {}
};

class out_of_range : public error {
public:
    explicit out_of_range(const std::string& what) : error("out of range: " + what) {}
};

} // namespace seqwit

#pragma once

#include <stdexcept>
#include <string>

namespace harada {

/// Base class for every error raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input outside a documented validity range (bad family parameter,
/// non-normal subgroup, malformed permutation, ...).
class invalid_input : public error {
public:
    using error::error;
};

/// A configured size cap would be exceeded.
class cap_exceeded : public error {
public:
    using error::error;
};

/// Something the theory says cannot happen (non-square mu, negative
/// Gramian, determinant not fixed by conjugation).
class anomaly : public error {
public:
    using error::error;
};

class parse_error : public error {
public:
    parse_error(const std::string& msg, std::size_t pos)
        : error(msg + " at position " + std::to_string(pos)), position_(pos) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace harada

#pragma once

#include <stdexcept>
#include <string>

namespace sta {

/// Base class for all engine errors.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A value has components in grades the operation does not accept.
class grade_error : public error {
public:
    using error::error;
};

/// An even-only operation received a field with odd-grade components.
class parity_error : public grade_error {
public:
    using grade_error::grade_error;
};

/// A phase cannot be evaluated exactly at the requested point.
class exactness_error : public error {
public:
    using error::error;
};

/// A potential violates the Lorenz condition; the message carries the
/// offending residual in serialized form.
class gauge_error : public error {
public:
    explicit gauge_error(const std::string& what, std::string residual_dump)
        : error(what), residual_dump_(std::move(residual_dump)) {}

    const std::string& residual_dump() const { return residual_dump_; }

private:
    std::string residual_dump_;
};

/// An element claimed to be a spin-group member fails u * reverse(u) = 1.
class spin_group_error : public error {
public:
    using error::error;
};

/// A candidate idempotent fails f * f = f, or two ideal elements were
/// combined over different idempotents.
class idempotent_error : public error {
public:
    using error::error;
};

/// Malformed document or invalid CLI parameters.
class parse_error : public error {
public:
    using error::error;
};

}  // namespace sta

#pragma once

#include <stdexcept>
#include <string>

namespace twinsieve {

// A requested computation exceeds a configured memory/size cap.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// A truncated series produced a zero denominator, so the correction factor
// is undefined for that (z, t_max).
class singularity_error : public std::runtime_error {
public:
    explicit singularity_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace twinsieve

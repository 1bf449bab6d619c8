#pragma once

#include "bellrec/ring.hpp"

#include <string_view>
#include <vector>

namespace bellrec {

/// Which computation produced a sequence prefix.
enum class Method {
    direct_recurrence,
    bell_formula,
    series_reciprocal,
    closed_form,
    convolution_direct,
    convolution_bell,
    convolution_recurrence,
};

constexpr std::string_view to_string(Method m)
{
    switch (m) {
    case Method::direct_recurrence: return "direct-recurrence";
    case Method::bell_formula: return "bell-formula";
    case Method::series_reciprocal: return "series-reciprocal";
    case Method::closed_form: return "closed-form";
    case Method::convolution_direct: return "convolution-direct";
    case Method::convolution_bell: return "convolution-bell";
    case Method::convolution_recurrence: return "convolution-recurrence";
    }
    return "unknown";
}

/// Prefix a_0..a_{n_max} of a sequence plus the method that produced it.
template <CoefficientRing T>
struct Seq {
    std::vector<T> values;
    Method method;

    std::size_t n_max() const { return values.size() - 1; }
    const T& operator[](std::size_t i) const { return values.at(i); }
};

/// Thrown when two independent computations of the same quantity disagree.
/// Always indicates a bug.
class PathMismatch : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace bellrec

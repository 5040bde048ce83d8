#pragma once

#include <cmath>
#include <string>

#include "tcl/common.hpp"

namespace tcl {

// GLM family, identified by its cumulant G and mean function G'.
//   Identity:    G(x) = x^2/2,        G'(x) = x
//   Sigmoid:     G(x) = log(1+e^x),   G'(x) = 1/(1+e^-x)
//   Exponential: G(x) = x + e^-x,     G'(x) = 1 - e^-x,  domain x >= 0
enum class LinkKind { Identity, Sigmoid, Exponential };

std::string to_string(LinkKind link);
LinkKind link_from_string(const std::string& name);

template <typename Scalar>
Scalar cumulant(LinkKind link, Scalar x) {
    switch (link) {
        case LinkKind::Identity:
            return Scalar(0.5) * x * x;
        case LinkKind::Sigmoid:
            // softplus, stable for large |x|
            return std::max(x, Scalar(0)) + std::log1p(std::exp(-std::abs(x)));
        case LinkKind::Exponential:
            return x + std::exp(-x);
    }
    return Scalar(0);
}

template <typename Scalar>
Scalar link_mean(LinkKind link, Scalar x) {
    switch (link) {
        case LinkKind::Identity:
            return x;
        case LinkKind::Sigmoid: {
            if (x >= Scalar(0)) return Scalar(1) / (Scalar(1) + std::exp(-x));
            Scalar e = std::exp(x);
            return e / (Scalar(1) + e);
        }
        case LinkKind::Exponential:
            return -std::expm1(-x);
    }
    return Scalar(0);
}

// True when `x` lies inside the cumulant's domain.
template <typename Scalar>
bool in_link_domain(LinkKind link, Scalar x) {
    return link != LinkKind::Exponential || x >= Scalar(0);
}

}  // namespace tcl

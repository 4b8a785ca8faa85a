#pragma once

#include "ggl/error.hpp"
#include "ggl/relative_ideal.hpp"

#include <doctest.h>

#include <functional>
#include <vector>

namespace testing {

inline ggl::ErrorKind kind_of(const std::function<void()>& body) {
    try {
        body();
    } catch (const ggl::Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ggl::ErrorKind::ConsistencyFailure;
}

inline ggl::SemigroupPtr semigroup(std::vector<int> gens) {
    return ggl::share(ggl::NumericalSemigroup(std::move(gens)));
}

inline ggl::RelativeIdeal ideal(const ggl::SemigroupPtr& h, const std::vector<int>& gens) {
    return ggl::RelativeIdeal::from_generators(h, gens);
}

} // namespace testing

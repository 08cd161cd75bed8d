#pragma once

#include <string_view>

namespace bhc {

enum class ScalarField { Real, Complex };

constexpr std::string_view to_string(ScalarField f)
{
    return f == ScalarField::Real ? "real" : "complex";
}

} // namespace bhc

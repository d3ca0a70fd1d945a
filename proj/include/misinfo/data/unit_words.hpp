#pragma once

#include <string_view>

namespace misinfo::data {

inline constexpr std::string_view kUnitWords[] = {
    "%", "billion", "cases", "days", "deaths", "degrees", "dollars", "doses", "dozen", "grams",
    "hospitalizations", "hours", "hundred", "infections", "kilometers", "km", "liters", "mg",
    "miles", "million", "minutes", "ml", "months", "patients", "people", "percent", "percentage",
    "seconds", "shots", "tests", "thousand", "times", "trillion", "vaccines", "victims", "weeks",
    "years",
};

}  // namespace misinfo::data

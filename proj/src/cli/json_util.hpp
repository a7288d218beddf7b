#pragma once

#include "sr/lemmas.hpp"
#include "sr/rational.hpp"

#include <json.hpp>

#include <string>

namespace sr::cli::detail {

using json = nlohmann::ordered_json;

std::string shortest(double x);
json rational(const Rational& r);
json weight(const Weight& w);
json number(double x);
json params(const Params& p);
std::string dump(const json& j);

}  // namespace sr::cli::detail

#pragma once

// Umbrella header; users should generally include only this file.

#include <univoque/base_spec.hpp>
#include <univoque/base_value.hpp>
#include <univoque/classify.hpp>
#include <univoque/enumerate.hpp>
#include <univoque/errors.hpp>
#include <univoque/expansions.hpp>
#include <univoque/field_element.hpp>
#include <univoque/landmarks.hpp>
#include <univoque/polynomial.hpp>
#include <univoque/rational.hpp>
#include <univoque/words.hpp>

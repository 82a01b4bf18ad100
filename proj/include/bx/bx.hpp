#pragma once

#include "bx/outcome.hpp"
#include "bx/either.hpp"
#include "bx/lens.hpp"
#include "bx/value.hpp"
#include "bx/regex.hpp"
#include "bx/value_lenses.hpp"
#include "bx/string_lenses.hpp"
#include "bx/relational.hpp"
#include "bx/relational_data.hpp"
#include "bx/canonizer.hpp"
#include "bx/show.hpp"
#include "bx/law_harness.hpp"
#include "bx/mapping.hpp"

#pragma once

#include "cliffdet/algebra.hpp"
#include "cliffdet/bell.hpp"
#include "cliffdet/charpoly.hpp"
#include "cliffdet/compare.hpp"
#include "cliffdet/conjugations.hpp"
#include "cliffdet/error.hpp"
#include "cliffdet/expression.hpp"
#include "cliffdet/matrix_oracle.hpp"
#include "cliffdet/random.hpp"

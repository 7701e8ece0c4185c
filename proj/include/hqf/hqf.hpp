#pragma once

#include "hqf/axis.hpp"
#include "hqf/characters.hpp"
#include "hqf/decomp.hpp"
#include "hqf/density.hpp"
#include "hqf/fields.hpp"
#include "hqf/io.hpp"
#include "hqf/linalg.hpp"
#include "hqf/polynomial.hpp"
#include "hqf/quaternion.hpp"
#include "hqf/random_gen.hpp"
#include "hqf/rational.hpp"
#include "hqf/spaces.hpp"

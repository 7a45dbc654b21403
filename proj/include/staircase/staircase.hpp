#pragma once

#include "staircase/composition.hpp"
#include "staircase/diagram.hpp"
#include "staircase/errors.hpp"
#include "staircase/monk.hpp"
#include "staircase/permutation.hpp"
#include "staircase/poset.hpp"
#include "staircase/verify.hpp"
#include "staircase/words.hpp"

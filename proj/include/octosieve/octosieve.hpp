#pragma once

#include "octosieve/algebra.hpp"
#include "octosieve/algebra_id.hpp"
#include "octosieve/automorphism.hpp"
#include "octosieve/derivations.hpp"
#include "octosieve/errors.hpp"
#include "octosieve/exact_rank.hpp"
#include "octosieve/expr.hpp"
#include "octosieve/octonion.hpp"
#include "octosieve/random.hpp"
#include "octosieve/sieve.hpp"

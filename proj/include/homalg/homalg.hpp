#pragma once

#include "homalg/error.hpp"
#include "homalg/rational.hpp"
#include "homalg/matrix.hpp"
#include "homalg/tensor.hpp"
#include "homalg/structure.hpp"
#include "homalg/identities.hpp"
#include "homalg/reps.hpp"
#include "homalg/operators.hpp"
#include "homalg/functors.hpp"
#include "homalg/bundle.hpp"

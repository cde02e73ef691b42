#pragma once

#include "exta/basis_change.hpp"
#include "exta/blades.hpp"
#include "exta/check.hpp"
#include "exta/core.hpp"
#include "exta/determinant.hpp"
#include "exta/extensors.hpp"
#include "exta/frame.hpp"
#include "exta/matrix.hpp"
#include "exta/multivector.hpp"
#include "exta/operators.hpp"
#include "exta/oracles.hpp"
#include "exta/random.hpp"
#include "exta/workspace.hpp"

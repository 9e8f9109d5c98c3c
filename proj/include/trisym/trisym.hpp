#pragma once

#include "trisym/covering.hpp"
#include "trisym/fixtures.hpp"
#include "trisym/group.hpp"
#include "trisym/hurwitz.hpp"
#include "trisym/lattice.hpp"
#include "trisym/permutation.hpp"
#include "trisym/sweep.hpp"
#include "trisym/triangle.hpp"
#include "trisym/word.hpp"

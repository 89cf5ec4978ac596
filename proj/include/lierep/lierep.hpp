#pragma once

#include "lierep/numeric.hpp"
#include "lierep/weight.hpp"
#include "lierep/rootsystem.hpp"
#include "lierep/character.hpp"
#include "lierep/branching.hpp"
#include "lierep/normalization.hpp"
#include "lierep/stability.hpp"
#include "lierep/render.hpp"
#include "lierep/selftest.hpp"

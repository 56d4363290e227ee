#pragma once

#include "seaweed/integer.hpp"
#include "seaweed/core.hpp"
#include "seaweed/meander.hpp"
#include "seaweed/render.hpp"
#include "seaweed/reduction.hpp"
#include "seaweed/formulas.hpp"
#include "seaweed/oracle.hpp"
#include "seaweed/parallel.hpp"
#include "seaweed/census.hpp"
#include "seaweed/io.hpp"

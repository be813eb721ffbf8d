#pragma once

#include "cmint/error.hpp"
#include "cmint/arith.hpp"
#include "cmint/quad_orders.hpp"
#include "cmint/cm_field.hpp"
#include "cmint/local_solver.hpp"
#include "cmint/mat2_ideals.hpp"
#include "cmint/embedding_count.hpp"
#include "cmint/intersection.hpp"

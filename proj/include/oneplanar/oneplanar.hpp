#pragma once

#include "oneplanar/rotation.hpp"
#include "oneplanar/graph.hpp"
#include "oneplanar/drawing.hpp"
#include "oneplanar/planarity.hpp"
#include "oneplanar/connectivity.hpp"
#include "oneplanar/solve.hpp"
#include "oneplanar/generators.hpp"
#include "oneplanar/transform.hpp"
#include "oneplanar/pipeline.hpp"
#include "oneplanar/io.hpp"
#include "oneplanar/cli.hpp"

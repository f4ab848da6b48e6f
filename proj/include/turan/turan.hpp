#pragma once

#include "turan/constructions.hpp"
#include "turan/detector.hpp"
#include "turan/enumerate.hpp"
#include "turan/errors.hpp"
#include "turan/factcheck.hpp"
#include "turan/forest.hpp"
#include "turan/formulas.hpp"
#include "turan/graph.hpp"
#include "turan/graph_io.hpp"
#include "turan/oracle.hpp"

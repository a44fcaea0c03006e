#pragma once

#include "szeged/errors.hpp"
#include "szeged/exact.hpp"
#include "szeged/graph.hpp"
#include "szeged/indices.hpp"
#include "szeged/molgen.hpp"
#include "szeged/oracle.hpp"
#include "szeged/parallel.hpp"
#include "szeged/quotient.hpp"
#include "szeged/report.hpp"
#include "szeged/theta.hpp"
#include "szeged/weights.hpp"

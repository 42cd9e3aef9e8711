#pragma once

#include "qdham/audit.hpp"
#include "qdham/enumerate.hpp"
#include "qdham/errors.hpp"
#include "qdham/expr.hpp"
#include "qdham/families.hpp"
#include "qdham/graph.hpp"
#include "qdham/hamilton.hpp"
#include "qdham/io.hpp"
#include "qdham/isomorphism.hpp"
#include "qdham/report.hpp"
#include "qdham/metric.hpp"
#include "qdham/spectral.hpp"
#include "qdham/tables.hpp"
#include "qdham/theorems.hpp"

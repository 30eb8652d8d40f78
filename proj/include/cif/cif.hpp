#pragma once

// Correlation-immune function toolkit: truth tables over Q_2^n and Q_4^n,
// definition-based and spectral immunity checkers, hypercube face
// splittings, the splitting -> resilient-function constructions, and the
// direction-word codec.

#include "bounds.hpp"
#include "census.hpp"
#include "codec.hpp"
#include "common.hpp"
#include "constructions.hpp"
#include "enumerate.hpp"
#include "exact_cover.hpp"
#include "face.hpp"
#include "immunity.hpp"
#include "io.hpp"
#include "report.hpp"
#include "splitting.hpp"
#include "truth_table.hpp"
#include "walsh.hpp"

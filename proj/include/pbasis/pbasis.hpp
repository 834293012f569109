#pragma once

// Exact-arithmetic toolkit for positive spanning sets, positive linear
// independence, and positive bases, with certified verdicts and a small
// direct-search demo.

#include "pbasis/cone.hpp"
#include "pbasis/dsdemo.hpp"
#include "pbasis/errors.hpp"
#include "pbasis/generators.hpp"
#include "pbasis/io.hpp"
#include "pbasis/linalg.hpp"
#include "pbasis/lp.hpp"
#include "pbasis/oracle.hpp"
#include "pbasis/rational.hpp"
#include "pbasis/vec.hpp"
#include "pbasis/version.hpp"

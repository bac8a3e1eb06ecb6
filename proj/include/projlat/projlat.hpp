#pragma once

// Everything the library offers, minus the scripting layer.

#include "projlat/error.hpp"
#include "projlat/field.hpp"
#include "projlat/monomial.hpp"
#include "projlat/ring.hpp"
#include "projlat/polynomial.hpp"
#include "projlat/groebner.hpp"
#include "projlat/ideal.hpp"
#include "projlat/free_module.hpp"
#include "projlat/linalg.hpp"
#include "projlat/graded_module.hpp"
#include "projlat/locus.hpp"
#include "projlat/report.hpp"
#include "projlat/serre.hpp"
#include "projlat/finite_spectral.hpp"
#include "projlat/sections.hpp"

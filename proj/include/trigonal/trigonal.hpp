#pragma once

#include "trigonal/automorphism.hpp"
#include "trigonal/constructions.hpp"
#include "trigonal/divisor.hpp"
#include "trigonal/errors.hpp"
#include "trigonal/gonality.hpp"
#include "trigonal/json_io.hpp"
#include "trigonal/morphism.hpp"
#include "trigonal/multigraph.hpp"

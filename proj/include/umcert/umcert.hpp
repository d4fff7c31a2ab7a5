#pragma once

// Umbrella header for the whole library.

#include "umcert/int.hpp"
#include "umcert/numtheory.hpp"
#include "umcert/quad.hpp"
#include "umcert/residue.hpp"
#include "umcert/bms.hpp"
#include "umcert/intpoly.hpp"
#include "umcert/unimodular.hpp"
#include "umcert/stability.hpp"
#include "umcert/finite_rings.hpp"

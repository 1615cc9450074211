#pragma once

#include "nexakt/error.hpp"
#include "nexakt/exactlin.hpp"
#include "nexakt/quivalg.hpp"
#include "nexakt/modcat.hpp"
#include "nexakt/morphism_system.hpp"
#include "nexakt/nstruct.hpp"
#include "nexakt/frobenius.hpp"
#include "nexakt/examples.hpp"
#include "nexakt/serialize.hpp"

#pragma once

// Everything except the command-line front end (cli.hpp pulls in CLI11).

#include "hyperplanar/coeff.hpp"
#include "hyperplanar/linear_combination.hpp"
#include "hyperplanar/table_algebra.hpp"
#include "hyperplanar/verlinde.hpp"
#include "hyperplanar/diagram.hpp"
#include "hyperplanar/planar.hpp"
#include "hyperplanar/tabular.hpp"
#include "hyperplanar/coxeter.hpp"
#include "hyperplanar/hecke.hpp"
#include "hyperplanar/embed.hpp"
#include "hyperplanar/acceptance.hpp"

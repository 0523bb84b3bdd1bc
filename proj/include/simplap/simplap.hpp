#pragma once

#include "simplap/complex.hpp"
#include "simplap/chain.hpp"
#include "simplap/jacobi.hpp"
#include "simplap/spectra.hpp"
#include "simplap/signed_graph.hpp"
#include "simplap/homology.hpp"
#include "simplap/constructions.hpp"
#include "simplap/document.hpp"

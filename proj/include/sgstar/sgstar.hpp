#pragma once

// Spectral theory of signed graphs: star complements, exact eigenvalue
// multiplicities, and multiplicity-bound certificates.

#include "sgstar/bounds.hpp"
#include "sgstar/constructions.hpp"
#include "sgstar/errors.hpp"
#include "sgstar/exact_matrix.hpp"
#include "sgstar/exact_scalar.hpp"
#include "sgstar/int_polynomial.hpp"
#include "sgstar/signed_graph.hpp"
#include "sgstar/spectra.hpp"
#include "sgstar/srg.hpp"
#include "sgstar/star_complement.hpp"

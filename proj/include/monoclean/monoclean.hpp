#pragma once

#include "monoclean/audit.hpp"
#include "monoclean/complexes.hpp"
#include "monoclean/filtration.hpp"
#include "monoclean/hilbert.hpp"
#include "monoclean/ideal.hpp"
#include "monoclean/invariants.hpp"
#include "monoclean/io.hpp"
#include "monoclean/monomial.hpp"
#include "monoclean/polarization.hpp"
#include "monoclean/stanley.hpp"

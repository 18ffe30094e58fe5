#pragma once

#include "froblab/error.hpp"
#include "froblab/field.hpp"
#include "froblab/monomial.hpp"
#include "froblab/ring.hpp"
#include "froblab/polynomial.hpp"
#include "froblab/parse.hpp"
#include "froblab/groebner.hpp"
#include "froblab/linalg.hpp"
#include "froblab/ideal.hpp"
#include "froblab/oracle.hpp"
#include "froblab/quotient.hpp"
#include "froblab/cover.hpp"
#include "froblab/fsing.hpp"
#include "froblab/ringspec.hpp"

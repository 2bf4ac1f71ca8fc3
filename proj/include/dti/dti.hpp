#pragma once

#include "dti/closure.hpp"
#include "dti/core.hpp"
#include "dti/digits.hpp"
#include "dti/errors.hpp"
#include "dti/groebner.hpp"
#include "dti/intmath.hpp"
#include "dti/json_io.hpp"
#include "dti/monomial_ideal.hpp"
#include "dti/newton.hpp"
#include "dti/oracle.hpp"
#include "dti/poly.hpp"
#include "dti/reference_cases.hpp"
#include "dti/test_ideal.hpp"
#include "dti/text.hpp"

#pragma once

#include "posmon/error.hpp"
#include "posmon/expr.hpp"
#include "posmon/family.hpp"
#include "posmon/field.hpp"
#include "posmon/monoid.hpp"
#include "posmon/oracle.hpp"
#include "posmon/poly.hpp"
#include "posmon/primes.hpp"
#include "posmon/rational.hpp"
#include "posmon/registry.hpp"
#include "posmon/spec_doc.hpp"

#pragma once

#include "dialg/error.hpp"
#include "dialg/rational.hpp"
#include "dialg/term.hpp"
#include "dialg/polynomial.hpp"
#include "dialg/macros.hpp"
#include "dialg/parser.hpp"
#include "dialg/qlinalg.hpp"
#include "dialg/spaces.hpp"
#include "dialg/kp.hpp"
#include "dialg/bso.hpp"
#include "dialg/checker.hpp"
#include "dialg/identities.hpp"
#include "dialg/verifications.hpp"

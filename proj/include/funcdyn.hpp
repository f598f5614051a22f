#pragma once

#include "funcdyn/algebra/error.hpp"
#include "funcdyn/algebra/ext_int.hpp"
#include "funcdyn/algebra/factor.hpp"
#include "funcdyn/algebra/field.hpp"
#include "funcdyn/algebra/place.hpp"
#include "funcdyn/algebra/poly.hpp"
#include "funcdyn/algebra/ratfunc.hpp"
#include "funcdyn/constructions.hpp"
#include "funcdyn/dynamics/finite_orbit.hpp"
#include "funcdyn/dynamics/graph.hpp"
#include "funcdyn/dynamics/orbit.hpp"
#include "funcdyn/dynamics/periodic.hpp"
#include "funcdyn/io/format.hpp"
#include "funcdyn/io/json.hpp"
#include "funcdyn/io/parse.hpp"
#include "funcdyn/maps/conjugacy.hpp"
#include "funcdyn/maps/forms.hpp"
#include "funcdyn/maps/interpolate.hpp"
#include "funcdyn/maps/linalg.hpp"
#include "funcdyn/maps/mobius.hpp"
#include "funcdyn/maps/rational_map.hpp"
#include "funcdyn/maps/residue_map.hpp"
#include "funcdyn/projective.hpp"
#include "funcdyn/verify/census.hpp"
#include "funcdyn/verify/checks.hpp"
#include "funcdyn/verify/report.hpp"

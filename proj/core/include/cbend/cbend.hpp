#pragma once

#include "cbend/certificate.hpp"
#include "cbend/errors.hpp"
#include "cbend/hermitian.hpp"
#include "cbend/holonomy.hpp"
#include "cbend/isometry.hpp"
#include "cbend/realization.hpp"
#include "cbend/serialize.hpp"
#include "cbend/surface.hpp"
#include "cbend/triangle.hpp"

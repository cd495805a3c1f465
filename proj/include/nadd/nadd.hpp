#pragma once

#include "nadd/errors.hpp"
#include "nadd/value.hpp"
#include "nadd/function.hpp"
#include "nadd/measure.hpp"
#include "nadd/integrals.hpp"
#include "nadd/properties.hpp"
#include "nadd/prenorms.hpp"
#include "nadd/catalog.hpp"
#include "nadd/sequences.hpp"
#include "nadd/io.hpp"

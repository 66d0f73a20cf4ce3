#pragma once

#include "rcop/canonical.hpp"
#include "rcop/enumerate.hpp"
#include "rcop/error.hpp"
#include "rcop/families.hpp"
#include "rcop/graph.hpp"
#include "rcop/graph6.hpp"
#include "rcop/io.hpp"
#include "rcop/parallel.hpp"
#include "rcop/rainbow.hpp"
#include "rcop/recognition.hpp"
#include "rcop/verify.hpp"

#pragma once

#include "axioms.hpp"
#include "element.hpp"
#include "enumerate.hpp"
#include "json_io.hpp"
#include "order.hpp"
#include "progression.hpp"
#include "rng.hpp"
#include "subset.hpp"
#include "sumset.hpp"
#include "textform.hpp"
#include "verify.hpp"

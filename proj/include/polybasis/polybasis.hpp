#pragma once

#include "polybasis/basis.hpp"
#include "polybasis/basis_id.hpp"
#include "polybasis/bijection.hpp"
#include "polybasis/composition.hpp"
#include "polybasis/expansion.hpp"
#include "polybasis/littlewood_richardson.hpp"
#include "polybasis/polynomial.hpp"
#include "polybasis/skyline.hpp"
#include "polybasis/tableau_models.hpp"

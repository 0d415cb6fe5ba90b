#pragma once

#include "bhlab/constants.hpp"
#include "bhlab/core.hpp"
#include "bhlab/forms_lab.hpp"
#include "bhlab/generate.hpp"
#include "bhlab/interpolation.hpp"
#include "bhlab/mixed_norms.hpp"
#include "bhlab/report.hpp"
#include "bhlab/rng.hpp"
#include "bhlab/tensor.hpp"
#include "bhlab/tensor_io.hpp"
#include "bhlab/verify.hpp"

#pragma once

#include "fermatkit/errors.hpp"
#include "fermatkit/factorizer.hpp"
#include "fermatkit/fermat.hpp"
#include "fermatkit/natural.hpp"
#include "fermatkit/numcore.hpp"
#include "fermatkit/oracle.hpp"

#ifndef QRAT_QRAT_HPP
#define QRAT_QRAT_HPP

#include "closedforms.hpp"
#include "dedekind.hpp"
#include "errors.hpp"
#include "exact.hpp"
#include "fit.hpp"
#include "io.hpp"
#include "qdeform.hpp"
#include "sbtree.hpp"
#include "verify.hpp"

#endif  // QRAT_QRAT_HPP

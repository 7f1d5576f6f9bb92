#ifndef DUALVAR_DUALVAR_HPP
#define DUALVAR_DUALVAR_HPP

#include "varset.hpp"
#include "monomial.hpp"
#include "term_order.hpp"
#include "polynomial.hpp"
#include "parser.hpp"
#include "groebner.hpp"
#include "dual_variety.hpp"
#include "degree_formulas.hpp"
#include "limit_pipeline.hpp"
#include "report.hpp"

#endif

#pragma once

#include <cstar/rational.hpp>
#include <cstar/unipoly.hpp>
#include <cstar/ratfunc.hpp>
#include <cstar/laurent.hpp>
#include <cstar/multipoly.hpp>
#include <cstar/divisor.hpp>
#include <cstar/dpd.hpp>
#include <cstar/embedding.hpp>
#include <cstar/gizatullin.hpp>
#include <cstar/parser.hpp>
#include <cstar/report.hpp>
#include <cstar/verify.hpp>

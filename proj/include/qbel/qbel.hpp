#pragma once

#include "qbel/error.hpp"
#include "qbel/frame.hpp"
#include "qbel/json_io.hpp"
#include "qbel/lp.hpp"
#include "qbel/measures.hpp"
#include "qbel/oracle.hpp"
#include "qbel/rational.hpp"
#include "qbel/relations.hpp"
#include "qbel/report.hpp"
#include "qbel/representation.hpp"

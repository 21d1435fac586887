#ifndef PUNCT_PUNCT_HPP
#define PUNCT_PUNCT_HPP

#include "punct/graph.hpp"
#include "punct/json_io.hpp"
#include "punct/linear.hpp"
#include "punct/marks.hpp"
#include "punct/morph.hpp"
#include "punct/overlay.hpp"
#include "punct/syntax.hpp"
#include "punct/text.hpp"
#include "punct/tree.hpp"

#endif

#pragma once

#include "fractalmark/attacks.hpp"
#include "fractalmark/corpus.hpp"
#include "fractalmark/curves.hpp"
#include "fractalmark/detection.hpp"
#include "fractalmark/embedder.hpp"
#include "fractalmark/errors.hpp"
#include "fractalmark/image.hpp"
#include "fractalmark/image_io.hpp"
#include "fractalmark/keyfile.hpp"
#include "fractalmark/keystream.hpp"
#include "fractalmark/metrics.hpp"
#include "fractalmark/watermark.hpp"

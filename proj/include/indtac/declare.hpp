/*
Copyright (c) 2026 The indtac Authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once
#include "indtac/environment.hpp"
#include "indtac/syntax.hpp"

namespace indtac {

/// Adds a non-lemma item to the environment (lemmas are ignored).
void declareItem(Environment& env, const Item& item);

/// Statement of a lemma: its binders abstracted over its type.
Expr lemmaStatement(const Environment& env, const DeclItem& item);

/// The kernel-checked prelude, built once. Copy it to extend.
const Environment& preludeEnvironment();
const char* preludeSource();

}  // namespace indtac

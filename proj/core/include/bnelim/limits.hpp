#pragma once

namespace bnelim {

/// Hard caps on exhaustive work. Truth tables hold 2^n bits per component and
/// the transition graph 2^n states, so both are bounded by component count.
struct Limits {
  unsigned max_table_components = 24;
  unsigned max_stg_components = 20;
  unsigned max_cycle_vertices = 20;

  /// Defaults, overridden by BNELIM_STATE_CAP (transition graph cap; the table
  /// cap is raised to match when needed) and BNELIM_CYCLE_CAP.
  static Limits from_environment();
};

// Throws CapExceeded when `components` is above `cap`.
void require_within(const char* what_for, unsigned components, unsigned cap);

}  // namespace bnelim

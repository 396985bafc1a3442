#include <stdio.h>
#include "vpath.h"
int main(void) {
  VpClassSpec s = {0};
  s.family = VP_CLASS_GRID; s.rows = 4; s.cols = 4;
  VpGraph *g = NULL;
  if (vp_graph_generate(&s, &g) != VP_STATUS_OK) return 1;
  VpSolveResult *r = NULL;
  VpSolveOptions o = vp_solve_options_default();
  if (vp_solve(g, VP_OBJECTIVE_MAX, VP_METHOD_BNB, &o, &r) != VP_STATUS_OK) return 2;
  printf("%s max=%llu proven=%d\n", vp_version(), (unsigned long long)vp_result_value(r), vp_result_proven(r));
  vp_result_free(r); vp_graph_free(g);
  return 0;
}

#include <stdio.h>
#include "equicut.h"

int main(void) {
    EquicutGraph *g = NULL;
    if (equicut_graph_cycle_power(11, 4, &g) != EQUICUT_STATUS_OK) return 1;
    EquicutSolverConfig cfg = equicut_solver_config_default();
    cfg.parallelism = 2;
    EquicutSolveResult *r = NULL;
    if (equicut_solve(g, EQUICUT_METHOD_BRANCH_AND_BOUND, &cfg, &r) != EQUICUT_STATUS_OK) return 2;
    size_t cert[16];
    size_t len = equicut_result_certificate_len(r);
    if (equicut_result_certificate(r, cert, 16) != EQUICUT_STATUS_OK) return 3;
    size_t cut = 0;
    if (equicut_equicut_size(g, cert, len, &cut) != EQUICUT_STATUS_OK) return 4;
    printf("%zu %zu %d\n", equicut_result_value(r), cut, equicut_result_is_exact(r));
    equicut_result_free(r);
    equicut_graph_free(g);

    EquicutGraph *bad = NULL;
    size_t jumps[] = {2, 4};
    if (equicut_graph_circulant(8, jumps, 2, &bad) != EQUICUT_STATUS_INVALID_INPUT) return 5;
    if (bad != NULL || equicut_last_error_message() == NULL) return 6;
    return 0;
}

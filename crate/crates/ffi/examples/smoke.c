#include <stdio.h>
#include "clique_bounds.h"

int main(void) {
    CbBoundReport *report = NULL;
    if (cb_bound_report_new("102", 3, &report) != CB_STATUS_OK) {
        fprintf(stderr, "%s\n", cb_last_error_message());
        return 1;
    }
    char *main_bound = NULL;
    cb_bound_report_main(report, &main_bound);
    printf("main bound for c_3 = 102: %s\n", main_bound);
    cb_string_free(main_bound);
    cb_bound_report_free(report);

    CbGraph *g = NULL;
    if (cb_graph_construct("102", 3, 2, &g) != CB_STATUS_OK) {
        fprintf(stderr, "%s\n", cb_last_error_message());
        return 1;
    }
    uint64_t c4 = 0;
    cb_graph_clique_count(g, 4, &c4);
    printf("construction has %zu vertices and %llu 4-cliques\n", cb_graph_vertex_count(g), (unsigned long long)c4);
    cb_graph_free(g);
    return 0;
}

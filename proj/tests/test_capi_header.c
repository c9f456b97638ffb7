/* Compiled as C99: proves the public header needs no C++ compiler, and that
 * a minimal parse/detect/render round trip works from C. */
#include <stdio.h>
#include <string.h>

#include "mlcpm.h"

int main(void) {
    if (strlen(mlcpm_version()) == 0) {
        return 1;
    }
    if (strcmp(mlcpm_status_name(MLCPM_OK), "ok") != 0) {
        return 1;
    }

    mlcpm_network* net = NULL;
    if (mlcpm_network_read_string("a,b,L1\nb,c,L1\na,c,L1\n", "triangle", &net) != MLCPM_OK) {
        fprintf(stderr, "parse: %s\n", mlcpm_last_error());
        return 1;
    }
    if (mlcpm_network_node_count(net) != 3 || mlcpm_network_edge_count(net) != 3) {
        return 1;
    }

    mlcpm_result* result = NULL;
    if (mlcpm_detect(net, 3, 1, NULL, &result) != MLCPM_OK) {
        fprintf(stderr, "detect: %s\n", mlcpm_last_error());
        return 1;
    }
    if (mlcpm_result_clique_count(result) != 1 || mlcpm_result_community_count(result) != 1) {
        return 1;
    }

    char* text = NULL;
    if (mlcpm_result_render(result, "plain", &text) != MLCPM_OK || strstr(text, "a b c") == NULL) {
        return 1;
    }
    mlcpm_free_string(text);
    mlcpm_result_free(result);
    mlcpm_network_free(net);
    return 0;
}

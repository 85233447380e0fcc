#include <stdio.h>
#include <string.h>

#include "isaonto.h"

int main(void) {
    IsaOntology *onto = NULL;
    char *tsv = NULL;
    if (isa_ontology_from_corpus("Some women are smokers\n", &onto) != ISA_STATUS_OK) {
        fprintf(stderr, "corpus: %s\n", isa_last_error());
        return 1;
    }
    if (isa_ontology_classify(onto, &tsv) != ISA_STATUS_OK) {
        fprintf(stderr, "classify: %s\n", isa_last_error());
        return 1;
    }
    /* only the SmokerWoman edges */
    for (char *line = strtok(tsv, "\n"); line; line = strtok(NULL, "\n")) {
        if (strncmp(line, "SmokerWoman\t", 12) == 0) {
            printf("%s\n", line);
        }
    }
    isa_string_free(tsv);
    isa_ontology_free(onto);
    if (isa_ontology_from_corpus(NULL, &onto) != ISA_STATUS_NULL_POINTER) {
        return 1;
    }
    return 0;
}

#include <stdio.h>
#include <string.h>

#include "gmpi/gmpi.h"

int main(void) {
  gmpi_ideal* ideal = NULL;
  gmpi_resolution* res = NULL;
  char* text = NULL;
  int pd = 0;
  if (gmpi_ideal_from_json("{\"variables\": [\"x\", \"y\"], \"generators\": [[2, 0], [0, 2]]}", &ideal) != GMPI_OK) {
    fprintf(stderr, "%s\n", gmpi_last_error());
    return 1;
  }
  if (gmpi_resolve(ideal, 0, &res) != GMPI_OK || gmpi_resolution_projdim(res, &pd) != GMPI_OK) return 1;
  if (gmpi_resolution_betti_text(res, &text) != GMPI_OK) return 1;
  fputs(text, stdout);
  const int ok = pd == 2 && strstr(text, "total: 1 2 1") != NULL;
  gmpi_free_string(text);
  gmpi_resolution_free(res);
  gmpi_ideal_free(ideal);
  return ok ? 0 : 1;
}

"""Construction and exact verification of edge-girth-regular graphs."""

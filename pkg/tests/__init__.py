# Tests for concave-polygons

"""Labeled icosahedron and wing-face construction."""

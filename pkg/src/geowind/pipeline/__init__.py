"""Construction pipeline and output renderers."""
